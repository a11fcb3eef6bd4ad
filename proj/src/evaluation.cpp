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

#include "gramtopic/evaluation.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "gramtopic/error.hpp"
#include "gramtopic/textprep.hpp"

namespace gramtopic {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

bool is_word_subsequence(const std::vector<std::string>& needle,
                         const std::vector<std::string>& haystack) {
  std::size_t i = 0;
  for (const auto& word : haystack) {
    if (i < needle.size() && needle[i] == word) ++i;
  }
  return i == needle.size();
}

bool topic_matches(const std::string& topic, const std::string& gold_phrase, MatchPolicy policy) {
  if (topic == gold_phrase) return true;
  if (policy == MatchPolicy::kExact) return false;
  return is_word_subsequence(tokenize(topic).tokens, tokenize(gold_phrase).tokens);
}

std::set<std::string> normalized(const std::set<std::string>& gold) {
  std::set<std::string> out;
  for (const auto& phrase : gold) {
    std::string n = normalize_text(phrase);
    if (!n.empty()) out.insert(std::move(n));
  }
  return out;
}

bool matches_any(const std::string& topic, const std::set<std::string>& gold, MatchPolicy policy) {
  if (gold.count(topic) > 0) return true;
  if (policy == MatchPolicy::kExact) return false;
  return std::any_of(gold.begin(), gold.end(),
                     [&](const std::string& g) { return topic_matches(topic, g, policy); });
}

}  // namespace

std::string_view level_name(RelevanceLevel level) {
  switch (level) {
    case RelevanceLevel::kHigh: return "High";
    case RelevanceLevel::kMedium: return "Medium";
    case RelevanceLevel::kLow: return "Low";
  }
  return "Low";
}

GoldTopics load_gold(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kFileNotFound, path.string());
  GoldTopics gold;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view entry = trim(line);
    if (entry.empty() || entry.front() == '#') continue;
    const auto comma = entry.find(',');
    const std::string where = path.string() + ":" + std::to_string(line_no);
    if (comma == std::string_view::npos) {
      throw Error(ErrorCode::kMalformedEntry, where + ": expected 'document_id,phrase'");
    }
    const std::string_view id = trim(entry.substr(0, comma));
    std::string phrase = normalize_text(entry.substr(comma + 1));
    if (id.empty() || phrase.empty()) {
      throw Error(ErrorCode::kMalformedEntry, where + ": empty document id or phrase");
    }
    gold[std::string(id)].insert(std::move(phrase));
  }
  return gold;
}

RelevanceLevel relevance_level(const Fraction& rate) {
  if (rate.den <= 0 || rate.num < 0 || rate.num > rate.den) {
    throw Error(ErrorCode::kOutOfRange, "rate " + rate.to_string() + " is outside [0, 1]");
  }
  if (3 * rate.num >= 2 * rate.den) return RelevanceLevel::kHigh;
  if (3 * rate.num >= rate.den) return RelevanceLevel::kMedium;
  return RelevanceLevel::kLow;
}

PrecisionScore precision(const TopicResult& automated, const std::set<std::string>& gold,
                         MatchPolicy policy) {
  const std::set<std::string> reference = normalized(gold);
  PrecisionScore score;
  score.document_id = automated.document_id;
  score.retrieved = automated.topics.size();
  for (const auto& topic : automated.topics) {
    if (matches_any(topic.phrase, reference, policy)) ++score.true_positives;
  }
  if (score.retrieved == 0) {
    score.empty_retrieval = true;
    score.rate = Fraction{0, 1};
  } else {
    score.rate = Fraction::reduced(static_cast<std::int64_t>(score.true_positives),
                                   static_cast<std::int64_t>(score.retrieved));
  }
  score.level = relevance_level(score.rate);
  return score;
}

Fraction recall(const TopicResult& automated, const std::set<std::string>& gold,
                MatchPolicy policy) {
  const std::set<std::string> reference = normalized(gold);
  if (reference.empty()) {
    throw Error(ErrorCode::kEmptyGold, "no gold topics for '" + automated.document_id + "'");
  }
  std::int64_t matched = 0;
  for (const auto& g : reference) {
    const bool hit = std::any_of(automated.topics.begin(), automated.topics.end(),
                                 [&](const Topic& t) { return topic_matches(t.phrase, g, policy); });
    if (hit) ++matched;
  }
  return Fraction::reduced(matched, static_cast<std::int64_t>(reference.size()));
}

CorpusReport aggregate(std::span<const PrecisionScore> scores) {
  if (scores.empty()) throw Error(ErrorCode::kEmptyInput, "no precision scores to aggregate");
  CorpusReport report;
  report.files = scores.size();

  std::vector<RateBucket> buckets;
  double sum = 0.0;
  for (const auto& score : scores) {
    const Fraction rate = Fraction::reduced(score.rate.num, score.rate.den);
    auto it = std::find_if(buckets.begin(), buckets.end(),
                           [&](const RateBucket& b) { return b.rate == rate; });
    if (it == buckets.end()) {
      buckets.push_back({rate, 1, relevance_level(rate)});
    } else {
      ++it->files;
    }
    ++report.per_level[static_cast<int>(relevance_level(rate))].files;
    sum += static_cast<double>(rate.num) / static_cast<double>(rate.den);
  }
  std::sort(buckets.begin(), buckets.end(),
            [](const RateBucket& a, const RateBucket& b) { return b.rate < a.rate; });
  report.per_type = std::move(buckets);
  for (auto& share : report.per_level) {
    share.share = Fraction::reduced(static_cast<std::int64_t>(share.files),
                                    static_cast<std::int64_t>(report.files));
  }
  report.mean_rate = sum / static_cast<double>(report.files);
  return report;
}

EvaluationReport evaluate(std::span<const TopicResult> results, const GoldTopics& gold,
                          MatchPolicy policy) {
  EvaluationReport report;
  std::set<std::string> seen;
  for (const auto& result : results) {
    seen.insert(result.document_id);
    const auto it = gold.find(result.document_id);
    if (it == gold.end() || it->second.empty()) {
      report.unscored.push_back(result.document_id);
      continue;
    }
    report.scores.push_back(precision(result, it->second, policy));
    report.recalls.push_back(recall(result, it->second, policy));
  }
  for (const auto& [id, phrases] : gold) {
    if (seen.count(id) == 0) report.missing_results.push_back(id);
  }
  if (report.scores.empty()) {
    throw Error(ErrorCode::kEmptyInput, "no result document has gold topics");
  }
  report.corpus = aggregate(report.scores);
  return report;
}

std::string format_percent(const Fraction& share) {
  // Tenths of a percent, rounded half-up.
  const std::int64_t tenths = (share.num * 2000 + share.den) / (2 * share.den);
  std::ostringstream out;
  out << tenths / 10 << '.' << tenths % 10 << '%';
  return out.str();
}

nlohmann::ordered_json to_json(const EvaluationReport& report) {
  nlohmann::ordered_json j;
  j["documents"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < report.scores.size(); ++i) {
    const auto& s = report.scores[i];
    j["documents"].push_back({
        {"document_id", s.document_id},
        {"true_positives", s.true_positives},
        {"retrieved", s.retrieved},
        {"precision", s.rate.to_string()},
        {"precision_percent", format_percent(s.rate)},
        {"recall", report.recalls[i].to_string()},
        {"level", level_name(s.level)},
        {"empty_retrieval", s.empty_retrieval},
    });
  }
  const CorpusReport& c = report.corpus;
  nlohmann::ordered_json corpus;
  corpus["files"] = c.files;
  corpus["per_type"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < c.per_type.size(); ++i) {
    const auto& b = c.per_type[i];
    corpus["per_type"].push_back({
        {"type", i + 1},
        {"rate", b.rate.to_string()},
        {"rate_percent", format_percent(b.rate)},
        {"files", b.files},
        {"level", level_name(b.level)},
    });
  }
  corpus["per_level"] = nlohmann::ordered_json::object();
  for (auto level : {RelevanceLevel::kHigh, RelevanceLevel::kMedium, RelevanceLevel::kLow}) {
    const auto& share = c.level(level);
    corpus["per_level"][std::string(level_name(level))] = {
        {"files", share.files}, {"percent", format_percent(share.share)}};
  }
  corpus["mean_rate"] = c.mean_rate;
  j["corpus"] = std::move(corpus);
  j["unscored"] = report.unscored;
  j["missing_results"] = report.missing_results;
  return j;
}

std::string render_table(const CorpusReport& report) {
  std::ostringstream out;
  out << "PT\tPR\tNoF\tPL\n";
  for (std::size_t i = 0; i < report.per_type.size(); ++i) {
    const auto& b = report.per_type[i];
    out << i + 1 << '\t' << format_percent(b.rate) << '\t' << b.files << '\t'
        << level_name(b.level) << '\n';
  }
  out << '\n';
  for (auto level : {RelevanceLevel::kHigh, RelevanceLevel::kMedium, RelevanceLevel::kLow}) {
    const auto& share = report.level(level);
    out << level_name(level) << '\t' << share.files << '\t' << format_percent(share.share) << '\n';
  }
  return out.str();
}

}  // namespace gramtopic
