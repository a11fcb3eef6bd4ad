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

#ifndef GRAMTOPIC_PIPELINE_HPP_
#define GRAMTOPIC_PIPELINE_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "gramtopic/filtering.hpp"
#include "gramtopic/ingest.hpp"
#include "gramtopic/ngram.hpp"

namespace gramtopic {

struct Topic {
  std::string phrase;
  std::uint64_t count = 0;

  friend bool operator==(const Topic&, const Topic&) = default;
};

struct StageTables {
  NgramTable raw;
  NgramTable after_blacklist;
  NgramTable after_whitelist;
};

struct TopicResult {
  std::string document_id;
  // Highest count first; ties in ascending phrase order.
  std::vector<Topic> topics;
  ExtractionConfig config;
  // Set when the document produced no tokens at all.
  bool empty = false;
  std::optional<StageTables> stages;
};

// Count descending, then phrase ascending; entries below `min_count` are
// dropped and the result is truncated to `k`.
std::vector<Topic> rank(const NgramTable& table, std::size_t k, std::uint64_t min_count);

// normalize -> tokenize -> count -> blacklist -> whitelist -> rank.
TopicResult extract_topics(const Document& doc, const ExtractionConfig& cfg,
                           const Blacklist& blacklist, const Whitelist& whitelist);

// Extracts every document, `jobs` at a time (0 = OpenMP default). Results
// keep the input order.
std::vector<TopicResult> extract_all(std::span<const Document> docs, const ExtractionConfig& cfg,
                                     const Blacklist& blacklist, const Whitelist& whitelist,
                                     int jobs = 0);

nlohmann::ordered_json to_json(const ExtractionConfig& cfg);
nlohmann::ordered_json to_json(const TopicResult& result);
// Reads the fields evaluation needs (document id, topics). Throws
// MalformedInput on schema violations.
TopicResult topic_result_from_json(const nlohmann::json& j);

}  // namespace gramtopic

#endif  // GRAMTOPIC_PIPELINE_HPP_
