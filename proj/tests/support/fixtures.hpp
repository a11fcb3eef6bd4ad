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

#ifndef GRAMTOPIC_TESTS_SUPPORT_FIXTURES_HPP_
#define GRAMTOPIC_TESTS_SUPPORT_FIXTURES_HPP_

#include <cstdint>
#include <filesystem>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gramtopic/filtering.hpp"
#include "gramtopic/ingest.hpp"
#include "gramtopic/ngram.hpp"

namespace gramtopic::testing {

using Rows = std::vector<std::pair<std::string, std::uint64_t>>;

// Bigram rows of the worked example: raw counts, after the blacklist, after
// the whitelist.
const Rows& raw_rows();
const Rows& blacklisted_rows();
const Rows& final_rows();
// The generic phrases removed between the blacklisted and final tables.
Whitelist generic_whitelist();

// A ten-page document whose bigram counts reproduce every row of the three
// tables above. Units are separated by the stopword "a" so no unlisted
// stopword-free phrase forms, and surface forms vary in case and punctuation.
Document worked_example_document();

// Pseudo-random article text: a Zipf-like mix of stopwords and invented
// content words with punctuation and line breaks.
Document synthetic_document(const std::string& id, std::size_t pages, std::size_t bytes_per_page,
                            std::uint32_t seed);

// Random token sequence over an alphabet of `alphabet` single-letter-ish words.
std::vector<std::string> random_tokens(std::mt19937& rng, std::size_t max_len,
                                       std::size_t alphabet);

NgramTable table_from_rows(const Rows& rows);

// Brute-force n-gram oracle: nested loops over every start index and length,
// keyed by the word vector itself.
std::map<std::vector<std::string>, std::uint64_t> oracle_counts(
    const std::vector<std::vector<std::string>>& pages, const std::vector<int>& lengths);

// Oracle table flattened to the same key convention as NgramTable.
std::map<std::string, std::uint64_t> oracle_flat(
    const std::vector<std::vector<std::string>>& pages, const std::vector<int>& lengths);

std::map<std::string, std::uint64_t> as_map(const NgramTable& table);

// Unique scratch directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path write(const std::string& name, const std::string& contents) const;

 private:
  std::filesystem::path path_;
};

}  // namespace gramtopic::testing

#endif  // GRAMTOPIC_TESTS_SUPPORT_FIXTURES_HPP_
