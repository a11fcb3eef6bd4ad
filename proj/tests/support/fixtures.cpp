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

#include "fixtures.hpp"

#include <unistd.h>

#include <atomic>
#include <fstream>
#include <sstream>

namespace gramtopic::testing {

namespace fs = std::filesystem;

const Rows& raw_rows() {
  static const Rows rows = {
      {"of the", 72},           {"the vehicle", 59},           {"in the", 37},
      {"the driver", 30},       {"esc system", 14},            {"l and", 14},
      {"in fig", 13},           {"roadway departure", 10},     {"predictive prevention", 8},
      {"critical situation", 8},
  };
  return rows;
}

const Rows& blacklisted_rows() {
  static const Rows rows = {
      {"esc system", 14},           {"roadway departure", 10}, {"predictive prevention", 8},
      {"critical situation", 8},    {"ieee transactions", 7},  {"intelligent transportation", 7},
      {"active safety", 7},         {"departure avoidance", 7}, {"vehicle control", 6},
  };
  return rows;
}

const Rows& final_rows() {
  static const Rows rows = {
      {"roadway departure", 10}, {"predictive prevention", 8}, {"active safety", 7},
      {"departure avoidance", 7}, {"vehicle control", 6},
  };
  return rows;
}

Whitelist generic_whitelist() {
  return Whitelist{"esc system", "critical situation", "ieee transactions",
                   "intelligent transportation"};
}

Document worked_example_document() {
  struct Unit {
    std::vector<std::string> forms;
    int remaining;
  };
  std::vector<Unit> units = {
      {{"of the", "Of the", "of  the"}, 72},
      {{"the vehicle", "The vehicle", "THE VEHICLE"}, 59},
      {{"in the", "In the"}, 37},
      {{"the driver", "The driver,"}, 30},
      {{".."}, 20},
      {{"ESC system", "esc system,"}, 14},
      {{"l and", "l, and"}, 14},
      {{"in Fig.", "in fig"}, 13},
      {{"roadway departure", "Roadway departure."}, 10},
      {{"predictive prevention", "Predictive Prevention"}, 8},
      {{"critical situation", "critical situation?"}, 8},
      {{"IEEE Transactions", "ieee transactions"}, 7},
      {{"intelligent transportation", "Intelligent Transportation"}, 7},
      {{"active safety", "Active safety"}, 7},
      {{"departure avoidance", "departure avoidance;"}, 7},
      {{"vehicle control", "Vehicle control"}, 6},
  };

  std::vector<std::string> sequence;
  bool emitted = true;
  for (int round = 0; emitted; ++round) {
    emitted = false;
    for (auto& unit : units) {
      if (unit.remaining == 0) continue;
      --unit.remaining;
      sequence.push_back(unit.forms[static_cast<std::size_t>(round) % unit.forms.size()]);
      emitted = true;
    }
  }

  constexpr std::size_t kPages = 10;
  Document doc;
  doc.id = "file_example";
  doc.source_path = "file_example.txt";
  for (std::size_t p = 0; p < kPages; ++p) {
    const std::size_t begin = p * sequence.size() / kPages;
    const std::size_t end = (p + 1) * sequence.size() / kPages;
    std::string page;
    for (std::size_t i = begin; i < end; ++i) {
      if (i > begin) page += (i % 7 == 0) ? " a\n" : " a ";
      page += sequence[i];
    }
    doc.byte_size += page.size() + 1;
    doc.pages.push_back(std::move(page));
  }
  return doc;
}

Document synthetic_document(const std::string& id, std::size_t pages, std::size_t bytes_per_page,
                            std::uint32_t seed) {
  static const std::vector<std::string> stopwords = {
      "the", "of", "and", "a", "in", "to", "is", "for", "on", "with", "that", "by", "as", "are"};
  static const std::vector<std::string> syllables = {
      "ve", "hi", "cle", "ro", "ad", "sen", "sor", "con", "trol", "lane", "dri", "ver",
      "tra", "jec", "to", "ry", "mo", "del", "pre", "dic", "tive", "safe", "ty", "net"};
  std::mt19937 rng(seed);
  std::vector<std::string> content;
  for (std::size_t i = 0; i < 600; ++i) {
    std::string w;
    const std::size_t parts = 2 + i % 3;
    std::size_t k = i;
    for (std::size_t s = 0; s < parts; ++s) {
      w += syllables[k % syllables.size()];
      k = k / syllables.size() + 7 * s + 3;
    }
    content.push_back(w);
  }
  std::vector<double> weights;
  for (std::size_t i = 0; i < content.size(); ++i) weights.push_back(1.0 / static_cast<double>(i + 1));
  std::discrete_distribution<std::size_t> pick_content(weights.begin(), weights.end());
  std::uniform_int_distribution<std::size_t> pick_stop(0, stopwords.size() - 1);
  std::uniform_int_distribution<int> coin(0, 99);

  Document doc;
  doc.id = id;
  doc.source_path = id + ".txt";
  for (std::size_t p = 0; p < pages; ++p) {
    std::string page;
    while (page.size() < bytes_per_page) {
      const int roll = coin(rng);
      const std::string& word = roll < 40 ? stopwords[pick_stop(rng)] : content[pick_content(rng)];
      if (!page.empty()) page += (roll % 23 == 0) ? "\n" : " ";
      page += (roll % 31 == 0) ? std::string(1, static_cast<char>(std::toupper(word[0]))) + word.substr(1)
                               : word;
      if (roll % 17 == 0) page += ",";
      if (roll % 29 == 0) page += ".";
    }
    doc.byte_size += page.size() + 1;
    doc.pages.push_back(std::move(page));
  }
  return doc;
}

std::vector<std::string> random_tokens(std::mt19937& rng, std::size_t max_len,
                                       std::size_t alphabet) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<std::size_t> sym(0, alphabet - 1);
  std::vector<std::string> tokens(len(rng));
  for (auto& t : tokens) t = "w" + std::to_string(sym(rng));
  return tokens;
}

NgramTable table_from_rows(const Rows& rows) {
  NgramTable table(GramLengths{2}, TableScope::kDocument);
  for (const auto& [phrase, count] : rows) table.add(phrase, count);
  return table;
}

std::map<std::vector<std::string>, std::uint64_t> oracle_counts(
    const std::vector<std::vector<std::string>>& pages, const std::vector<int>& lengths) {
  std::map<std::vector<std::string>, std::uint64_t> counts;
  for (const auto& page : pages) {
    for (std::size_t start = 0; start < page.size(); ++start) {
      for (int n : lengths) {
        if (start + static_cast<std::size_t>(n) > page.size()) continue;
        std::vector<std::string> key(page.begin() + static_cast<std::ptrdiff_t>(start),
                                     page.begin() + static_cast<std::ptrdiff_t>(start) + n);
        ++counts[key];
      }
    }
  }
  return counts;
}

std::map<std::string, std::uint64_t> oracle_flat(
    const std::vector<std::vector<std::string>>& pages, const std::vector<int>& lengths) {
  std::map<std::string, std::uint64_t> flat;
  for (const auto& [words, count] : oracle_counts(pages, lengths)) {
    std::ostringstream key;
    for (std::size_t i = 0; i < words.size(); ++i) key << (i ? " " : "") << words[i];
    flat[key.str()] += count;
  }
  return flat;
}

std::map<std::string, std::uint64_t> as_map(const NgramTable& table) {
  return {table.counts().begin(), table.counts().end()};
}

TempDir::TempDir() {
  static std::atomic<int> counter{0};
  path_ = fs::temp_directory_path() /
          ("gramtopic-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
  fs::remove_all(path_);
  fs::create_directories(path_);
}

TempDir::~TempDir() {
  std::error_code ec;
  fs::remove_all(path_, ec);
}

fs::path TempDir::write(const std::string& name, const std::string& contents) const {
  const fs::path p = path_ / name;
  fs::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary);
  out << contents;
  return p;
}

}  // namespace gramtopic::testing
