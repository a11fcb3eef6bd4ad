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

#include "gramtopic/filtering.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <vector>

#include "gramtopic/error.hpp"
#include "gramtopic/textprep.hpp"

namespace gramtopic {

namespace fs = std::filesystem;

namespace {

// Articles, prepositions, conjunctions, pronouns, auxiliaries and a few
// citation fragments. Mirrors data/default_blacklist.txt.
constexpr std::array kDefaultStopwords = {
    "a",        "about",      "above",   "after",    "again",   "against", "al",
    "all",      "also",       "am",      "among",    "an",      "and",     "any",
    "are",      "as",         "at",      "be",       "because", "been",    "before",
    "being",    "below",      "between", "both",     "but",     "by",      "can",
    "could",    "did",        "do",      "does",     "doing",   "down",    "during",
    "each",     "eg",         "et",      "etc",      "few",     "for",     "from",
    "further",  "had",        "has",     "have",     "having",  "he",      "her",
    "here",     "hers",       "herself", "him",      "himself", "his",     "how",
    "however",  "i",          "ie",      "if",       "in",      "into",    "is",
    "it",       "its",        "itself",  "just",     "may",     "me",      "might",
    "more",     "most",       "must",    "my",       "myself",  "no",      "nor",
    "not",      "now",        "of",      "off",      "on",      "once",    "only",
    "or",       "other",      "our",     "ours",     "ourselves", "out",   "over",
    "own",      "same",       "shall",   "she",      "should",  "so",      "some",
    "such",     "than",       "that",    "the",      "their",   "theirs",  "them",
    "themselves", "then",     "there",   "these",    "they",    "this",    "those",
    "through",  "thus",       "to",      "too",      "under",   "until",   "up",
    "upon",     "us",         "very",    "via",      "was",     "we",      "were",
    "what",     "when",       "where",   "whether",  "which",   "while",   "who",
    "whom",     "why",        "will",    "with",     "within",  "without", "would",
    "you",      "your",       "yours",   "yourself", "yourselves",
};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n\v\f");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n\v\f");
  return s.substr(first, last - first + 1);
}

// Yields trimmed, non-comment lines together with their 1-based line number.
template <typename Fn>
void for_each_entry(const fs::path& path, Fn&& fn) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kFileNotFound, path.string());
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view entry = trim(line);
    if (entry.empty() || entry.front() == '#') continue;
    fn(entry, line_no);
  }
}

std::string canonical_word(std::string_view word) {
  const std::string_view trimmed = trim(word);
  if (trimmed.empty()) throw Error(ErrorCode::kMalformedEntry, "empty blacklist entry");
  if (trimmed.find_first_of(" \t") != std::string_view::npos) {
    throw Error(ErrorCode::kMalformedEntry,
                "blacklist entry '" + std::string(trimmed) + "' is not a single word");
  }
  std::string normalized = normalize_text(trimmed);
  if (normalized.empty() || normalized.find(' ') != std::string::npos) {
    throw Error(ErrorCode::kMalformedEntry,
                "blacklist entry '" + std::string(trimmed) + "' does not normalize to one token");
  }
  return normalized;
}

std::string canonical_phrase(std::string_view phrase) {
  try {
    return Phrase::from_text(phrase).text();
  } catch (const Error&) {
    throw Error(ErrorCode::kMalformedEntry,
                "whitelist entry '" + std::string(phrase) + "' is not a 1-5 word phrase");
  }
}

bool has_blacklisted_word(std::string_view phrase, const Blacklist& blacklist) {
  std::size_t start = 0;
  while (start <= phrase.size()) {
    std::size_t end = phrase.find(' ', start);
    if (end == std::string_view::npos) end = phrase.size();
    if (blacklist.contains(phrase.substr(start, end - start))) return true;
    start = end + 1;
  }
  return false;
}

WhitelistTrainingReport assemble(std::span<const Document> corpus,
                                 const std::vector<DocumentCandidates>& per_doc,
                                 const ExtractionConfig& cfg) {
  WhitelistTrainingReport report;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const std::string& id = corpus[i].id;
    if (report.pa_used.count(id) > 0) {
      throw Error(ErrorCode::kMalformedInput, "duplicate document id '" + id + "'");
    }
    report.pa_used[id] = per_doc[i].pa;
    report.per_document_candidates[id] = per_doc[i].candidates;
    for (const auto& phrase : per_doc[i].candidates) ++report.nomination_counts[phrase];
  }
  for (const auto& [phrase, nominations] : report.nomination_counts) {
    if (nominations >= cfg.doc_min) report.accepted.insert(phrase);
  }
  return report;
}

void check_corpus(std::span<const Document> corpus, const ExtractionConfig& cfg) {
  cfg.validate();
  if (corpus.empty()) throw Error(ErrorCode::kEmptyCorpus, "whitelist training needs documents");
}

}  // namespace

Blacklist::Blacklist(std::initializer_list<std::string_view> words) {
  for (auto w : words) insert(w);
}

Blacklist Blacklist::english_default() {
  Blacklist bl;
  for (const char* w : kDefaultStopwords) bl.words_.insert(w);
  return bl;
}

void Blacklist::insert(std::string_view word) { words_.insert(canonical_word(word)); }

Whitelist::Whitelist(std::initializer_list<std::string_view> phrases) {
  for (auto p : phrases) insert(p);
}

void Whitelist::insert(std::string_view phrase) { phrases_.insert(canonical_phrase(phrase)); }

Whitelist WhitelistTrainingReport::whitelist() const {
  Whitelist wl;
  for (const auto& phrase : accepted) wl.insert(phrase);
  return wl;
}

Blacklist load_blacklist(const fs::path& path) {
  Blacklist bl;
  for_each_entry(path, [&](std::string_view entry, int line_no) {
    try {
      bl.insert(entry);
    } catch (const Error& e) {
      throw Error(ErrorCode::kMalformedEntry,
                  path.string() + ":" + std::to_string(line_no) + ": " + e.what());
    }
  });
  return bl;
}

Whitelist load_whitelist(const fs::path& path) {
  Whitelist wl;
  for_each_entry(path, [&](std::string_view entry, int line_no) {
    try {
      wl.insert(entry);
    } catch (const Error& e) {
      throw Error(ErrorCode::kMalformedEntry,
                  path.string() + ":" + std::to_string(line_no) + ": " + e.what());
    }
  });
  return wl;
}

void save_whitelist(const Whitelist& whitelist, const fs::path& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path.string());
  for (const auto& phrase : whitelist.phrases()) out << phrase << '\n';
  if (!out) throw Error(ErrorCode::kIoError, "write failed for " + path.string());
}

NgramTable apply_blacklist(const NgramTable& table, const Blacklist& blacklist) {
  if (blacklist.size() == 0) return table;
  return table.filtered([&](const std::string& phrase, std::uint64_t) {
    return !has_blacklisted_word(phrase, blacklist);
  });
}

NgramTable apply_whitelist(const NgramTable& table, const Whitelist& whitelist) {
  if (whitelist.size() == 0) return table;
  return table.filtered(
      [&](const std::string& phrase, std::uint64_t) { return !whitelist.contains(phrase); });
}

DocumentCandidates whitelist_candidates(const Document& doc, const ExtractionConfig& cfg,
                                        const Blacklist& blacklist) {
  DocumentCandidates out;
  out.pa = cfg.pa_fraction.ceil_times(static_cast<std::int64_t>(doc.page_count()));
  for (const auto& page_text : doc.pages) {
    const NgramTable page =
        apply_blacklist(count_ngrams_per_page(tokenize(page_text, cfg.textprep), cfg), blacklist);
    for (const auto& [phrase, count] : page.counts()) {
      if (count >= cfg.page_high_freq_min) ++out.page_counter[phrase];
    }
  }
  for (const auto& [phrase, pages] : out.page_counter) {
    if (pages > out.pa) out.candidates.insert(phrase);
  }
  return out;
}

WhitelistTrainingReport train_whitelist(std::span<const Document> corpus,
                                        const ExtractionConfig& cfg, const Blacklist& blacklist) {
  check_corpus(corpus, cfg);
  std::vector<DocumentCandidates> per_doc(corpus.size());
  const auto n = static_cast<std::ptrdiff_t>(corpus.size());
#pragma omp parallel for schedule(dynamic) if (n > 1)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    per_doc[idx] = whitelist_candidates(corpus[idx], cfg, blacklist);
  }
  return assemble(corpus, per_doc, cfg);
}

WhitelistTrainingReport train_whitelist_serial(std::span<const Document> corpus,
                                               const ExtractionConfig& cfg,
                                               const Blacklist& blacklist) {
  check_corpus(corpus, cfg);
  std::vector<DocumentCandidates> per_doc;
  per_doc.reserve(corpus.size());
  for (const auto& doc : corpus) per_doc.push_back(whitelist_candidates(doc, cfg, blacklist));
  return assemble(corpus, per_doc, cfg);
}

nlohmann::ordered_json to_json(const WhitelistTrainingReport& report) {
  nlohmann::ordered_json j;
  j["per_document_candidates"] = nlohmann::ordered_json::object();
  for (const auto& [id, phrases] : report.per_document_candidates) {
    j["per_document_candidates"][id] = std::vector<std::string>(phrases.begin(), phrases.end());
  }
  j["nomination_counts"] = nlohmann::ordered_json::object();
  for (const auto& [phrase, n] : report.nomination_counts) j["nomination_counts"][phrase] = n;
  j["accepted"] = std::vector<std::string>(report.accepted.begin(), report.accepted.end());
  j["pa_used"] = nlohmann::ordered_json::object();
  for (const auto& [id, pa] : report.pa_used) j["pa_used"][id] = pa;
  return j;
}

}  // namespace gramtopic
