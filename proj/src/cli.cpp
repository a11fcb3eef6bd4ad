// Copyright 2026 The gramtopic Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gramtopic/cli.hpp"

#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gramtopic/error.hpp"
#include "gramtopic/filtering.hpp"
#include "gramtopic/pipeline.hpp"

namespace gramtopic::cli {

namespace fs = std::filesystem;

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

long long to_integer(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(value, &used);
    if (used == value.size()) return v;
  } catch (const std::exception&) {
  }
  throw Error(ErrorCode::kInvalidConfig, "config key '" + key + "' expects an integer, got '" +
                                             value + "'");
}

bool to_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1" || value == "yes" || value == "on") return true;
  if (value == "false" || value == "0" || value == "no" || value == "off") return false;
  throw Error(ErrorCode::kInvalidConfig, "config key '" + key + "' expects a boolean");
}

// "\f", "\n", "\t" and "\\" escapes, so a form feed can be written in a text file.
std::string unescape(const std::string& value) {
  std::string out;
  for (std::size_t i = 0; i < value.size(); ++i) {
    if (value[i] != '\\' || i + 1 == value.size()) {
      out.push_back(value[i]);
      continue;
    }
    switch (value[++i]) {
      case 'f': out.push_back('\f'); break;
      case 'n': out.push_back('\n'); break;
      case 't': out.push_back('\t'); break;
      default: out.push_back(value[i]); break;
    }
  }
  return out;
}

GramLengths parse_ngrams(const std::string& text) {
  std::vector<int> lengths;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const std::string t(trim(item));
    if (t.empty()) continue;
    lengths.push_back(static_cast<int>(to_integer("ngrams", t)));
  }
  GramLengths out = GramLengths::from_vector(lengths);
  if (out.empty()) throw Error(ErrorCode::kInvalidN, "--ngrams lists no gram length");
  return out;
}

// The value following --config, if any; otherwise the environment variable.
std::string locate_config(std::span<const std::string> args) {
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) return args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) return args[i].substr(9);
  }
  if (const char* env = std::getenv(kConfigEnv); env != nullptr) return env;
  return {};
}

void write_atomically(const fs::path& path, const std::string& text) {
  const fs::path tmp = path.string() + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw Error(ErrorCode::kIoError, "cannot write " + tmp.string());
    f << text;
    if (!f) throw Error(ErrorCode::kIoError, "write failed for " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw Error(ErrorCode::kIoError, "cannot move output into " + path.string());
  }
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
  } else {
    write_atomically(out_path, text);
  }
}

Blacklist resolve_blacklist(const CliConfig& cfg) {
  if (cfg.blacklist_path.empty()) return Blacklist::english_default();
  if (cfg.blacklist_path == "none") return Blacklist{};
  return load_blacklist(cfg.blacklist_path);
}

Whitelist resolve_whitelist(const CliConfig& cfg) {
  if (cfg.whitelist_path.empty() || cfg.whitelist_path == "none") return Whitelist{};
  return load_whitelist(cfg.whitelist_path);
}

std::vector<TopicResult> read_results(const fs::path& path) {
  std::vector<fs::path> files;
  std::error_code ec;
  if (fs::is_directory(path, ec)) {
    for (const auto& entry : fs::directory_iterator(path)) {
      if (entry.is_regular_file() && entry.path().extension() == ".json") {
        files.push_back(entry.path());
      }
    }
    std::sort(files.begin(), files.end());
  } else if (fs::is_regular_file(path, ec)) {
    files.push_back(path);
  } else {
    throw Error(ErrorCode::kFileNotFound, path.string());
  }

  std::vector<TopicResult> results;
  for (const auto& file : files) {
    std::ifstream in(file);
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::kMalformedInput, file.string() + ": " + e.what());
    }
    if (j.is_array()) {
      for (const auto& item : j) results.push_back(topic_result_from_json(item));
    } else {
      results.push_back(topic_result_from_json(j));
    }
  }
  return results;
}

void check_format(const std::string& format) {
  if (format != "json" && format != "table") {
    throw Error(ErrorCode::kInvalidConfig, "--format must be json or table");
  }
}

// Resolves string-typed settings into their typed counterparts.
void finalize(CliConfig& cfg) {
  cfg.extraction.n_set = parse_ngrams(cfg.ngrams);
  cfg.extraction.pa_fraction = Fraction::parse(cfg.pa_fraction);
  cfg.extraction.validate();
  cfg.ingest.converter_timeout = std::chrono::milliseconds(cfg.converter_timeout_ms);
  cfg.ingest.validate();
  check_format(cfg.format);
  if (cfg.match != "exact" && cfg.match != "subsequence") {
    throw Error(ErrorCode::kInvalidConfig, "--match must be exact or subsequence");
  }
  if (cfg.jobs < 0) throw Error(ErrorCode::kInvalidConfig, "--jobs must be >= 0");
  if (cfg.repeats < 1) throw Error(ErrorCode::kInvalidConfig, "--repeats must be >= 1");
  if (cfg.cutoffs.small_max >= cfg.cutoffs.medium_max) {
    throw Error(ErrorCode::kInvalidConfig, "--small-max must be below --medium-max");
  }
}

int cmd_extract(const CliConfig& cfg, const std::string& input, std::ostream& out) {
  const Blacklist blacklist = resolve_blacklist(cfg);
  const Whitelist whitelist = resolve_whitelist(cfg);
  std::error_code ec;
  std::string text;
  if (fs::is_directory(input, ec)) {
    const CorpusLoad corpus = load_corpus(input, cfg.ingest);
    const auto results = extract_all(corpus.documents, cfg.extraction, blacklist, whitelist,
                                     cfg.jobs);
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : results) arr.push_back(to_json(r));
    text = arr.dump(2) + "\n";
  } else {
    const Document doc = load_document(input, cfg.ingest);
    text = to_json(extract_topics(doc, cfg.extraction, blacklist, whitelist)).dump(2) + "\n";
  }
  emit(text, cfg.out_path, out);
  return kOk;
}

int cmd_train(const CliConfig& cfg, const std::string& corpus_dir, std::ostream& out,
              std::ostream& err) {
  const CorpusLoad corpus = load_corpus(corpus_dir, cfg.ingest);
  const WhitelistTrainingReport report =
      train_whitelist(corpus.documents, cfg.extraction, resolve_blacklist(cfg));
  if (!cfg.out_path.empty()) {
    save_whitelist(report.whitelist(), cfg.out_path);
    err << "gramtopic: wrote " << report.accepted.size() << " whitelist phrases to "
        << cfg.out_path << '\n';
  }
  emit(to_json(report).dump(2) + "\n", cfg.report_path, out);
  return kOk;
}

int cmd_evaluate(const CliConfig& cfg, const std::string& results_path, std::ostream& out,
                 std::ostream& err) {
  const GoldTopics gold = load_gold(cfg.gold_path);
  const auto results = read_results(results_path);
  const MatchPolicy policy = cfg.match == "exact" ? MatchPolicy::kExact : MatchPolicy::kSubsequence;
  const EvaluationReport report = evaluate(results, gold, policy);
  for (const auto& id : report.unscored) err << "gramtopic: no gold topics for '" << id << "'\n";
  for (const auto& id : report.missing_results) err << "gramtopic: no result for '" << id << "'\n";
  const std::string text =
      cfg.format == "table" ? render_table(report.corpus) : to_json(report).dump(2) + "\n";
  emit(text, cfg.out_path, out);
  return kOk;
}

int cmd_bench(const CliConfig& cfg, const std::string& corpus_dir, std::ostream& out) {
  const CorpusLoad corpus = load_corpus(corpus_dir, cfg.ingest);
  BenchOptions options;
  options.cutoffs = cfg.cutoffs;
  options.repeats = cfg.repeats;
  const auto records = time_extraction(corpus.documents, cfg.extraction, resolve_blacklist(cfg),
                                       resolve_whitelist(cfg), options);
  const auto summary = timing_summary(records);
  const std::string text = cfg.format == "table" ? render_table(records, summary)
                                                 : to_json(records, summary).dump(2) + "\n";
  emit(text, cfg.out_path, out);
  return kOk;
}

int cmd_convert(const CliConfig& cfg, const std::string& input, std::ostream& out) {
  out << convert_external(input, cfg.ingest).string() << '\n';
  return kOk;
}

}  // namespace

void apply_config_file(const fs::path& path, CliConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kInvalidConfig, "cannot read config file " + path.string());

  const std::map<std::string, std::function<void(const std::string&, const std::string&)>>
      setters = {
          {"blacklist", [&](auto&, auto& v) { cfg.blacklist_path = v; }},
          {"whitelist", [&](auto&, auto& v) { cfg.whitelist_path = v; }},
          {"gold", [&](auto&, auto& v) { cfg.gold_path = v; }},
          {"top-k", [&](auto& k, auto& v) { cfg.extraction.top_k = static_cast<int>(to_integer(k, v)); }},
          {"ngrams", [&](auto&, auto& v) { cfg.ngrams = v; }},
          {"min-count", [&](auto& k, auto& v) { cfg.extraction.min_count = to_integer(k, v); }},
          {"pa-fraction", [&](auto&, auto& v) { cfg.pa_fraction = v; }},
          {"page-min", [&](auto& k, auto& v) { cfg.extraction.page_high_freq_min = to_integer(k, v); }},
          {"doc-min", [&](auto& k, auto& v) { cfg.extraction.doc_min = static_cast<int>(to_integer(k, v)); }},
          {"keep-hyphens", [&](auto& k, auto& v) { cfg.extraction.textprep.keep_hyphens = to_bool(k, v); }},
          {"jobs", [&](auto& k, auto& v) { cfg.jobs = static_cast<int>(to_integer(k, v)); }},
          {"repeats", [&](auto& k, auto& v) { cfg.repeats = static_cast<int>(to_integer(k, v)); }},
          {"format", [&](auto&, auto& v) { cfg.format = v; }},
          {"match", [&](auto&, auto& v) { cfg.match = v; }},
          {"converter", [&](auto&, auto& v) { cfg.ingest.converter_command = v; }},
          {"timeout-ms", [&](auto& k, auto& v) { cfg.converter_timeout_ms = static_cast<int>(to_integer(k, v)); }},
          {"out-dir", [&](auto&, auto& v) { cfg.ingest.converter_output_dir = v; }},
          {"page-delimiter", [&](auto&, auto& v) { cfg.ingest.page_delimiter = unescape(v); }},
          {"small-max", [&](auto& k, auto& v) { cfg.cutoffs.small_max = static_cast<std::size_t>(to_integer(k, v)); }},
          {"medium-max", [&](auto& k, auto& v) { cfg.cutoffs.medium_max = static_cast<std::size_t>(to_integer(k, v)); }},
      };

  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view entry = trim(line);
    if (entry.empty() || entry.front() == '#') continue;
    const auto eq = entry.find('=');
    const std::string where = path.string() + ":" + std::to_string(line_no);
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::kInvalidConfig, where + ": expected 'key = value'");
    }
    std::string key(trim(entry.substr(0, eq)));
    if (key.rfind("--", 0) == 0) key.erase(0, 2);
    const std::string value(trim(entry.substr(eq + 1)));
    const auto it = setters.find(key);
    if (it == setters.end()) throw Error(ErrorCode::kInvalidConfig, where + ": unknown key '" + key + "'");
    it->second(key, value);
  }
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  std::string config_path = locate_config(args);
  try {
    if (!config_path.empty()) apply_config_file(config_path, cfg);
  } catch (const Error& e) {
    err << "gramtopic: " << e.what() << '\n';
    return kUsage;
  }

  CLI::App app{
      "Extracts topic keyphrases from text documents by n-gram frequency with blacklist and "
      "whitelist filtration.\nNOTE: the whitelist lists generic phrases that are REMOVED "
      "from results.",
      "gramtopic"};
  app.set_version_flag("--version", "gramtopic " + std::string(kVersion));
  app.add_option("--config", config_path,
                 "Flat key = value config file (also $" + std::string(kConfigEnv) + ")");
  app.require_subcommand(1);
  app.fallthrough();

  const auto add_lists = [&](CLI::App* sub) {
    sub->add_option("--blacklist", cfg.blacklist_path,
                    "Stopword file, one word per line ('none' disables; default: built-in list)");
  };
  const auto add_whitelist = [&](CLI::App* sub) {
    sub->add_option("--whitelist", cfg.whitelist_path,
                    "Phrases to REMOVE from results, one per line");
  };
  const auto add_extraction = [&](CLI::App* sub) {
    sub->add_option("--top-k", cfg.extraction.top_k, "Topics per document");
    sub->add_option("--ngrams", cfg.ngrams, "Comma-separated gram lengths, 1-5");
    sub->add_option("--min-count", cfg.extraction.min_count, "Minimum document count");
    sub->add_flag("--keep-hyphens", cfg.extraction.textprep.keep_hyphens,
                  "Keep intra-word hyphens");
  };
  const auto add_ingest = [&](CLI::App* sub) {
    sub->add_option("--converter", cfg.ingest.converter_command,
                    "Converter command template with {in} and {out}");
    sub->add_option("--timeout-ms", cfg.converter_timeout_ms, "Converter timeout");
  };

  std::string input;

  CLI::App* extract = app.add_subcommand("extract", "Extract topics from a file or directory");
  extract->add_option("input", input, "Text file or directory of .txt files")->required();
  add_lists(extract);
  add_whitelist(extract);
  add_extraction(extract);
  add_ingest(extract);
  extract->add_option("--jobs", cfg.jobs, "Documents extracted concurrently (0 = all cores)");
  extract->add_flag("--stages", cfg.extraction.keep_stage_tables,
                    "Include raw/blacklisted/whitelisted tables");
  extract->add_option("--out", cfg.out_path, "Write JSON here instead of stdout");

  CLI::App* train = app.add_subcommand("train-whitelist", "Learn whitelist phrases from a corpus");
  train->add_option("corpus-dir", input, "Directory of training documents")->required();
  add_lists(train);
  train->add_option("--ngrams", cfg.ngrams, "Comma-separated gram lengths, 1-5");
  train->add_option("--pa-fraction", cfg.pa_fraction, "Pa = ceil(fraction * pages)");
  train->add_option("--page-min", cfg.extraction.page_high_freq_min,
                    "Per-page count that makes a phrase high frequency");
  train->add_option("--doc-min", cfg.extraction.doc_min, "Documents that must nominate a phrase");
  train->add_option("--out", cfg.out_path, "Write the accepted whitelist here");
  train->add_option("--report", cfg.report_path, "Write the JSON report here instead of stdout");
  add_ingest(train);

  CLI::App* eval = app.add_subcommand("evaluate", "Score extracted topics against gold topics");
  eval->add_option("results", input, "Result JSON file or directory of them")->required();
  eval->add_option("--gold", cfg.gold_path, "CSV of document_id,phrase");
  eval->add_option("--format", cfg.format, "json or table");
  eval->add_option("--match", cfg.match, "exact or subsequence");
  eval->add_option("--out", cfg.out_path, "Write the report here instead of stdout");

  CLI::App* bench = app.add_subcommand("bench", "Time extraction per document by size group");
  bench->add_option("corpus-dir", input, "Directory of documents")->required();
  bench->add_option("--repeats", cfg.repeats, "Runs per document (median recorded)");
  bench->add_option("--format", cfg.format, "json or table");
  bench->add_option("--small-max", cfg.cutoffs.small_max, "Largest page count in Small");
  bench->add_option("--medium-max", cfg.cutoffs.medium_max, "Largest page count in Medium");
  bench->add_option("--out", cfg.out_path, "Write the report here instead of stdout");
  add_lists(bench);
  add_whitelist(bench);
  add_extraction(bench);
  add_ingest(bench);

  CLI::App* convert = app.add_subcommand("convert", "Convert a document to text");
  convert->add_option("input", input, "Source document")->required();
  convert->add_option("--converter", cfg.ingest.converter_command,
                      "Converter command template with {in} and {out}");
  convert->add_option("--timeout-ms", cfg.converter_timeout_ms, "Converter timeout");
  convert->add_option("--out-dir", cfg.ingest.converter_output_dir, "Where the text file goes");

  std::vector<const char*> argv{"gramtopic"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    finalize(cfg);
    if (eval->parsed() && cfg.gold_path.empty()) {
      throw Error(ErrorCode::kInvalidConfig, "evaluate requires --gold");
    }
    if (convert->parsed() && cfg.ingest.converter_command.empty()) {
      throw Error(ErrorCode::kInvalidConfig, "convert requires --converter");
    }
  } catch (const Error& e) {
    err << "gramtopic: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (extract->parsed()) return cmd_extract(cfg, input, out);
    if (train->parsed()) return cmd_train(cfg, input, out, err);
    if (eval->parsed()) return cmd_evaluate(cfg, input, out, err);
    if (bench->parsed()) return cmd_bench(cfg, input, out);
    if (convert->parsed()) return cmd_convert(cfg, input, out);
  } catch (const std::exception& e) {
    err << "gramtopic: " << e.what() << '\n';
    return kRuntime;
  }
  return kUsage;
}

}  // namespace gramtopic::cli
