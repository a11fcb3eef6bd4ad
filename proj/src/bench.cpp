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

#include "gramtopic/bench.hpp"

#include <algorithm>
#include <iomanip>
#include <limits>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "gramtopic/error.hpp"
#include "gramtopic/pipeline.hpp"

namespace gramtopic {

namespace {

constexpr std::string_view kScopeNote = "timings cover topic extraction only; loading and conversion are excluded";

// Pins OpenMP to one thread for the lifetime of the guard.
class SingleThreadScope {
 public:
  SingleThreadScope() {
#ifdef _OPENMP
    saved_ = omp_get_max_threads();
    omp_set_num_threads(1);
#endif
  }
  ~SingleThreadScope() {
#ifdef _OPENMP
    omp_set_num_threads(saved_);
#endif
  }
  SingleThreadScope(const SingleThreadScope&) = delete;
  SingleThreadScope& operator=(const SingleThreadScope&) = delete;

 private:
  int saved_ = 1;
};

double median(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  return values.size() % 2 == 1 ? values[mid] : (values[mid - 1] + values[mid]) / 2.0;
}

std::string fixed2(double v) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(2) << v;
  return out.str();
}

}  // namespace

std::string_view group_name(SizeGroup group) {
  switch (group) {
    case SizeGroup::kSmall: return "Small";
    case SizeGroup::kMedium: return "Medium";
    case SizeGroup::kLarge: return "Large";
  }
  return "Small";
}

SizeGroup GroupCutoffs::classify(std::size_t page_count) const {
  if (page_count <= small_max) return SizeGroup::kSmall;
  if (page_count <= medium_max) return SizeGroup::kMedium;
  return SizeGroup::kLarge;
}

std::vector<TimingRecord> time_extraction(std::span<const Document> corpus,
                                          const ExtractionConfig& cfg, const Blacklist& blacklist,
                                          const Whitelist& whitelist,
                                          const BenchOptions& options) {
  if (corpus.empty()) throw Error(ErrorCode::kEmptyCorpus, "nothing to time");
  if (options.repeats < 1) throw Error(ErrorCode::kInvalidConfig, "repeats must be >= 1");
  cfg.validate();

  SingleThreadScope single_thread;
  std::vector<TimingRecord> records;
  records.reserve(corpus.size());
  for (const auto& doc : corpus) {
    std::vector<double> runs;
    runs.reserve(static_cast<std::size_t>(options.repeats));
    for (int r = 0; r < options.repeats; ++r) {
      const auto start = options.now();
      const TopicResult result = extract_topics(doc, cfg, blacklist, whitelist);
      const auto stop = options.now();
      (void)result;
      runs.push_back(std::chrono::duration<double, std::milli>(stop - start).count());
    }
    TimingRecord record;
    record.document_id = doc.id;
    record.byte_size = doc.byte_size;
    record.page_count = doc.page_count();
    record.wall_time_ms = std::max(0.0, median(std::move(runs)));
    record.group = options.cutoffs.classify(record.page_count);
    records.push_back(std::move(record));
  }
  return records;
}

std::vector<GroupSummary> timing_summary(std::span<const TimingRecord> records) {
  if (records.empty()) throw Error(ErrorCode::kEmptyInput, "no timing records");
  std::vector<GroupSummary> out;
  for (auto group : {SizeGroup::kSmall, SizeGroup::kMedium, SizeGroup::kLarge}) {
    GroupSummary s;
    s.group = group;
    s.min_ms = std::numeric_limits<double>::infinity();
    double sum = 0.0;
    for (const auto& r : records) {
      if (r.group != group) continue;
      ++s.files;
      sum += r.wall_time_ms;
      s.min_ms = std::min(s.min_ms, r.wall_time_ms);
      s.max_ms = std::max(s.max_ms, r.wall_time_ms);
    }
    if (s.files == 0) continue;
    s.mean_ms = std::clamp(sum / static_cast<double>(s.files), s.min_ms, s.max_ms);
    out.push_back(s);
  }
  return out;
}

nlohmann::ordered_json to_json(std::span<const TimingRecord> records,
                               std::span<const GroupSummary> summary) {
  nlohmann::ordered_json j;
  j["note"] = kScopeNote;
  j["records"] = nlohmann::ordered_json::array();
  for (const auto& r : records) {
    j["records"].push_back({
        {"document_id", r.document_id},
        {"byte_size", r.byte_size},
        {"page_count", r.page_count},
        {"wall_time_ms", r.wall_time_ms},
        {"group", group_name(r.group)},
    });
  }
  j["summary"] = nlohmann::ordered_json::array();
  for (const auto& s : summary) {
    j["summary"].push_back({
        {"group", group_name(s.group)},
        {"files", s.files},
        {"mean_ms", s.mean_ms},
        {"min_ms", s.min_ms},
        {"max_ms", s.max_ms},
    });
  }
  return j;
}

std::string render_table(std::span<const TimingRecord> records,
                         std::span<const GroupSummary> summary) {
  std::ostringstream out;
  out << "# " << kScopeNote << '\n';
  out << "document\tgroup\tpages\tbytes\tms\n";
  for (const auto& r : records) {
    out << r.document_id << '\t' << group_name(r.group) << '\t' << r.page_count << '\t'
        << r.byte_size << '\t' << fixed2(r.wall_time_ms) << '\n';
  }
  out << "\ngroup\tfiles\tmean_ms\tmin_ms\tmax_ms\n";
  for (const auto& s : summary) {
    out << group_name(s.group) << '\t' << s.files << '\t' << fixed2(s.mean_ms) << '\t'
        << fixed2(s.min_ms) << '\t' << fixed2(s.max_ms) << '\n';
  }
  return out.str();
}

}  // namespace gramtopic
