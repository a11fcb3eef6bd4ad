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

#ifndef GRAMTOPIC_FILTERING_HPP_
#define GRAMTOPIC_FILTERING_HPP_

#include <filesystem>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>

#include "json.hpp"

#include "gramtopic/ingest.hpp"
#include "gramtopic/ngram.hpp"

namespace gramtopic {

// Single lowercase words. A phrase containing any of them is dropped.
class Blacklist {
 public:
  Blacklist() = default;
  // Throws MalformedEntry for entries that are empty or span several tokens.
  explicit Blacklist(std::initializer_list<std::string_view> words);

  // The shipped English stopword inventory (also in data/default_blacklist.txt).
  static Blacklist english_default();

  void insert(std::string_view word);
  bool contains(std::string_view word) const { return words_.count(std::string(word)) > 0; }
  std::size_t size() const { return words_.size(); }
  const std::set<std::string>& words() const { return words_; }

  friend bool operator==(const Blacklist&, const Blacklist&) = default;

 private:
  std::set<std::string> words_;
};

// Domain-generic phrases to REMOVE from results. The name follows the
// original method's usage, which is the inverse of the usual meaning: a
// phrase on this list never appears as a topic.
class Whitelist {
 public:
  Whitelist() = default;
  explicit Whitelist(std::initializer_list<std::string_view> phrases);

  void insert(std::string_view phrase);
  bool contains(std::string_view canonical) const {
    return phrases_.count(std::string(canonical)) > 0;
  }
  std::size_t size() const { return phrases_.size(); }
  const std::set<std::string>& phrases() const { return phrases_; }

  friend bool operator==(const Whitelist&, const Whitelist&) = default;

 private:
  std::set<std::string> phrases_;
};

// One entry per line; '#' lines and blank lines are ignored, entries are
// trimmed and lowercased.
Blacklist load_blacklist(const std::filesystem::path& path);
Whitelist load_whitelist(const std::filesystem::path& path);
// Writes sorted entries, one per line.
void save_whitelist(const Whitelist& whitelist, const std::filesystem::path& path);

NgramTable apply_blacklist(const NgramTable& table, const Blacklist& blacklist);
NgramTable apply_whitelist(const NgramTable& table, const Whitelist& whitelist);

struct WhitelistTrainingReport {
  std::map<std::string, std::set<std::string>> per_document_candidates;
  std::map<std::string, int> nomination_counts;
  std::set<std::string> accepted;
  std::map<std::string, std::int64_t> pa_used;

  Whitelist whitelist() const;
  friend bool operator==(const WhitelistTrainingReport&, const WhitelistTrainingReport&) = default;
};

struct DocumentCandidates {
  std::int64_t pa = 0;
  // Pages on which each phrase is high frequency (the page counter CL).
  std::map<std::string, std::int64_t> page_counter;
  std::set<std::string> candidates;
};

// Candidate rule for one document: per-page blacklist-filtered tables, a
// phrase is high frequency on a page at count >= page_high_freq_min, and it is
// a candidate when its page counter strictly exceeds
// Pa = ceil(pa_fraction * page_count).
DocumentCandidates whitelist_candidates(const Document& doc, const ExtractionConfig& cfg,
                                        const Blacklist& blacklist);

// Applies the candidate rule to every document (in parallel) and accepts the
// phrases nominated by at least doc_min documents. Throws EmptyCorpus.
WhitelistTrainingReport train_whitelist(std::span<const Document> corpus,
                                        const ExtractionConfig& cfg, const Blacklist& blacklist);

// Single-threaded reference for train_whitelist.
WhitelistTrainingReport train_whitelist_serial(std::span<const Document> corpus,
                                               const ExtractionConfig& cfg,
                                               const Blacklist& blacklist);

nlohmann::ordered_json to_json(const WhitelistTrainingReport& report);

}  // namespace gramtopic

#endif  // GRAMTOPIC_FILTERING_HPP_
