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

#include "gramtopic/pipeline.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "gramtopic/error.hpp"
#include "gramtopic/textprep.hpp"

namespace gramtopic {

namespace {

nlohmann::ordered_json table_json(const NgramTable& table) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& topic : rank(table, table.size(), 1)) {
    rows.push_back({{"phrase", topic.phrase}, {"count", topic.count}});
  }
  return rows;
}

}  // namespace

std::vector<Topic> rank(const NgramTable& table, std::size_t k, std::uint64_t min_count) {
  std::vector<Topic> ranked;
  ranked.reserve(table.size());
  for (const auto& [phrase, count] : table.counts()) {
    if (count >= min_count) ranked.push_back({phrase, count});
  }
  const auto order = [](const Topic& a, const Topic& b) {
    return a.count != b.count ? a.count > b.count : a.phrase < b.phrase;
  };
  if (ranked.size() > k) {
    std::partial_sort(ranked.begin(), ranked.begin() + static_cast<std::ptrdiff_t>(k),
                      ranked.end(), order);
    ranked.resize(k);
  } else {
    std::sort(ranked.begin(), ranked.end(), order);
  }
  return ranked;
}

TopicResult extract_topics(const Document& doc, const ExtractionConfig& cfg,
                           const Blacklist& blacklist, const Whitelist& whitelist) {
  cfg.validate();
  TopicResult result;
  result.document_id = doc.id;
  result.config = cfg;

  std::vector<TokenizedPage> pages;
  pages.reserve(doc.pages.size());
  std::size_t tokens = 0;
  for (const auto& text : doc.pages) {
    pages.push_back(tokenize(text, cfg.textprep));
    tokens += pages.back().size();
  }
  result.empty = tokens == 0;

  NgramTable raw = count_ngrams(pages, cfg);
  NgramTable cleaned = apply_blacklist(raw, blacklist);
  NgramTable topical = apply_whitelist(cleaned, whitelist);
  result.topics = rank(topical, static_cast<std::size_t>(cfg.top_k), cfg.min_count);
  if (cfg.keep_stage_tables) {
    result.stages = StageTables{std::move(raw), std::move(cleaned), std::move(topical)};
  }
  return result;
}

std::vector<TopicResult> extract_all(std::span<const Document> docs, const ExtractionConfig& cfg,
                                     const Blacklist& blacklist, const Whitelist& whitelist,
                                     int jobs) {
  cfg.validate();
  std::vector<TopicResult> results(docs.size());
  const auto n = static_cast<std::ptrdiff_t>(docs.size());
#ifdef _OPENMP
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads) if (n > 1 && threads > 1)
#endif
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    results[idx] = extract_topics(docs[idx], cfg, blacklist, whitelist);
  }
  (void)jobs;
  return results;
}

nlohmann::ordered_json to_json(const ExtractionConfig& cfg) {
  return {
      {"n_set", cfg.n_set.to_vector()},
      {"top_k", cfg.top_k},
      {"min_count", cfg.min_count},
      {"page_high_freq_min", cfg.page_high_freq_min},
      {"pa_fraction", cfg.pa_fraction.to_string()},
      {"doc_min", cfg.doc_min},
      {"keep_hyphens", cfg.textprep.keep_hyphens},
  };
}

nlohmann::ordered_json to_json(const TopicResult& result) {
  nlohmann::ordered_json j;
  j["document_id"] = result.document_id;
  j["empty"] = result.empty;
  j["topics"] = nlohmann::ordered_json::array();
  for (const auto& topic : result.topics) {
    j["topics"].push_back({{"phrase", topic.phrase}, {"count", topic.count}});
  }
  j["config"] = to_json(result.config);
  if (result.stages) {
    j["stages"] = {
        {"raw", table_json(result.stages->raw)},
        {"after_blacklist", table_json(result.stages->after_blacklist)},
        {"after_whitelist", table_json(result.stages->after_whitelist)},
    };
  }
  return j;
}

TopicResult topic_result_from_json(const nlohmann::json& j) {
  try {
    TopicResult result;
    result.document_id = j.at("document_id").get<std::string>();
    result.empty = j.value("empty", false);
    for (const auto& topic : j.at("topics")) {
      result.topics.push_back(
          {topic.at("phrase").get<std::string>(), topic.at("count").get<std::uint64_t>()});
    }
    return result;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kMalformedInput, std::string("topic result: ") + e.what());
  }
}

}  // namespace gramtopic
