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

#ifndef GRAMTOPIC_EVALUATION_HPP_
#define GRAMTOPIC_EVALUATION_HPP_

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "gramtopic/ngram.hpp"
#include "gramtopic/pipeline.hpp"

namespace gramtopic {

enum class RelevanceLevel { kHigh, kMedium, kLow };

std::string_view level_name(RelevanceLevel level);

// Manually assigned topics per document id, normalized with the textprep rules.
using GoldTopics = std::map<std::string, std::set<std::string>>;

// CSV lines "document_id,phrase"; '#' comments and blank lines are skipped.
// The phrase is everything after the first comma.
GoldTopics load_gold(const std::filesystem::path& path);

enum class MatchPolicy {
  kExact,
  // A topic also matches when its words are a (not necessarily contiguous)
  // subsequence of a gold phrase's words.
  kSubsequence,
};

struct PrecisionScore {
  std::string document_id;
  std::uint64_t true_positives = 0;
  std::uint64_t retrieved = 0;
  // true_positives / retrieved, reduced; 0/1 when nothing was retrieved.
  Fraction rate{0, 1};
  RelevanceLevel level = RelevanceLevel::kLow;
  bool empty_retrieval = false;
};

PrecisionScore precision(const TopicResult& automated, const std::set<std::string>& gold,
                         MatchPolicy policy = MatchPolicy::kExact);

// |gold phrases matched by some topic| / |gold|. Throws EmptyGold.
Fraction recall(const TopicResult& automated, const std::set<std::string>& gold,
                MatchPolicy policy = MatchPolicy::kExact);

// High at >= 2/3, Medium at >= 1/3, Low otherwise; exact rational
// comparison. Throws OutOfRange outside [0, 1].
RelevanceLevel relevance_level(const Fraction& rate);

struct RateBucket {
  Fraction rate;
  std::uint64_t files = 0;
  RelevanceLevel level = RelevanceLevel::kLow;
};

struct LevelShare {
  std::uint64_t files = 0;
  // files / total as an exact fraction of one.
  Fraction share{0, 1};
};

struct CorpusReport {
  std::uint64_t files = 0;
  // One bucket per distinct rate, highest rate first.
  std::vector<RateBucket> per_type;
  // Indexed by RelevanceLevel.
  std::array<LevelShare, 3> per_level{};
  double mean_rate = 0.0;

  const LevelShare& level(RelevanceLevel l) const { return per_level[static_cast<int>(l)]; }
};

// Throws EmptyInput for an empty sequence.
CorpusReport aggregate(std::span<const PrecisionScore> scores);

struct EvaluationReport {
  std::vector<PrecisionScore> scores;
  std::vector<Fraction> recalls;
  CorpusReport corpus;
  // Result documents with no gold topics, and gold documents with no result.
  std::vector<std::string> unscored;
  std::vector<std::string> missing_results;
};

// Scores every result that has gold topics. Throws EmptyInput when nothing
// can be scored.
EvaluationReport evaluate(std::span<const TopicResult> results, const GoldTopics& gold,
                          MatchPolicy policy = MatchPolicy::kExact);

// Rounds num/den * 100 half-up to one decimal: "66.7%".
std::string format_percent(const Fraction& share);

nlohmann::ordered_json to_json(const EvaluationReport& report);
// Columns PT, PR, NoF, PL followed by the per-level summary.
std::string render_table(const CorpusReport& report);

}  // namespace gramtopic

#endif  // GRAMTOPIC_EVALUATION_HPP_
