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

#ifndef GRAMTOPIC_BENCH_HPP_
#define GRAMTOPIC_BENCH_HPP_

#include <chrono>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "gramtopic/filtering.hpp"
#include "gramtopic/ingest.hpp"
#include "gramtopic/ngram.hpp"

namespace gramtopic {

enum class SizeGroup { kSmall, kMedium, kLarge };

std::string_view group_name(SizeGroup group);

// Page-count cutoffs: Small <= small_max < Medium <= medium_max < Large.
struct GroupCutoffs {
  std::size_t small_max = 4;
  std::size_t medium_max = 10;

  SizeGroup classify(std::size_t page_count) const;
};

struct TimingRecord {
  std::string document_id;
  std::uint64_t byte_size = 0;
  std::size_t page_count = 0;
  double wall_time_ms = 0.0;
  SizeGroup group = SizeGroup::kSmall;
};

struct BenchOptions {
  GroupCutoffs cutoffs;
  // Runs per document; the median is recorded.
  int repeats = 1;
  // Monotonic clock reading. Tests inject a fake one.
  std::function<std::chrono::nanoseconds()> now = [] {
    return std::chrono::duration_cast<std::chrono::nanoseconds>(
        std::chrono::steady_clock::now().time_since_epoch());
  };
};

// Times extract_topics alone, document by document on one thread.
// Throws EmptyCorpus.
std::vector<TimingRecord> time_extraction(std::span<const Document> corpus,
                                          const ExtractionConfig& cfg, const Blacklist& blacklist,
                                          const Whitelist& whitelist,
                                          const BenchOptions& options = {});

struct GroupSummary {
  SizeGroup group = SizeGroup::kSmall;
  std::size_t files = 0;
  double mean_ms = 0.0;
  double min_ms = 0.0;
  double max_ms = 0.0;
};

// Small, Medium, Large order; groups without records are omitted.
// Throws EmptyInput.
std::vector<GroupSummary> timing_summary(std::span<const TimingRecord> records);

nlohmann::ordered_json to_json(std::span<const TimingRecord> records,
                               std::span<const GroupSummary> summary);
std::string render_table(std::span<const TimingRecord> records,
                         std::span<const GroupSummary> summary);

}  // namespace gramtopic

#endif  // GRAMTOPIC_BENCH_HPP_
