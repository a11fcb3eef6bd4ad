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

#ifndef GRAMTOPIC_NGRAM_HPP_
#define GRAMTOPIC_NGRAM_HPP_

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "gramtopic/textprep.hpp"

namespace gramtopic {

inline constexpr int kMaxGramLength = 5;

// A phrase of 1 to 5 words held in canonical form: lowercase words joined by
// single spaces.
class Phrase {
 public:
  // Throws InvalidN when the word count is outside 1..5.
  static Phrase from_words(std::span<const std::string> words);
  // Canonicalizes `text` with the textprep rules before validating it.
  static Phrase from_text(std::string_view text);

  const std::string& text() const { return text_; }
  int length() const { return length_; }
  std::vector<std::string> words() const;

  friend bool operator==(const Phrase&, const Phrase&) = default;
  friend auto operator<=>(const Phrase& a, const Phrase& b) { return a.text_ <=> b.text_; }

 private:
  Phrase(std::string text, int length) : text_(std::move(text)), length_(length) {}

  std::string text_;
  int length_ = 0;
};

// Set of gram lengths drawn from 1..5.
class GramLengths {
 public:
  GramLengths() = default;
  // Throws InvalidN for any length outside 1..5.
  GramLengths(std::initializer_list<int> lengths);
  static GramLengths from_vector(const std::vector<int>& lengths);

  bool contains(int n) const { return n >= 1 && n <= kMaxGramLength && (bits_ >> n) & 1U; }
  bool empty() const { return bits_ == 0; }
  std::vector<int> to_vector() const;

  friend bool operator==(const GramLengths&, const GramLengths&) = default;

 private:
  unsigned bits_ = 0;
};

// Exact fraction used for thresholds such as the Pa page fraction.
struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  // Accepts "a/b" or a plain decimal such as "0.5" (converted exactly).
  static Fraction parse(std::string_view text);
  // num/den in lowest terms; den must be positive.
  static Fraction reduced(std::int64_t num, std::int64_t den);
  std::string to_string() const;
  // ceil(num * count / den) using integer arithmetic.
  std::int64_t ceil_times(std::int64_t count) const;

  friend bool operator==(const Fraction& a, const Fraction& b) {
    return a.num * b.den == b.num * a.den;
  }
  friend bool operator<(const Fraction& a, const Fraction& b) {
    return a.num * b.den < b.num * a.den;
  }
};

struct ExtractionConfig {
  GramLengths n_set{2, 3};
  int top_k = 5;
  std::uint64_t min_count = 2;
  // Per-page count at which a phrase is "high frequency" on that page.
  std::uint64_t page_high_freq_min = 2;
  // Pa = ceil(pa_fraction * page_count).
  Fraction pa_fraction{1, 2};
  // Documents that must nominate a phrase before it joins the whitelist.
  int doc_min = 2;
  TextprepOptions textprep;
  bool keep_stage_tables = false;

  // Throws InvalidConfig (or InvalidN for n_set) when an invariant is broken.
  void validate() const;
};

enum class TableScope { kDocument, kPage };

// Phrase -> occurrence count for a fixed set of gram lengths. Keys are
// canonical phrase text; every stored count is >= 1.
class NgramTable {
 public:
  using Counts = std::unordered_map<std::string, std::uint64_t>;

  NgramTable() = default;
  NgramTable(GramLengths n_set, TableScope scope) : n_set_(n_set), scope_(scope) {}

  void add(std::string_view phrase, std::uint64_t count = 1);
  void merge(const NgramTable& other);
  // Keeps the entries for which `keep(phrase, count)` holds.
  template <typename Pred>
  NgramTable filtered(Pred keep) const {
    NgramTable out(n_set_, scope_);
    for (const auto& [phrase, count] : counts_) {
      if (keep(phrase, count)) out.counts_.emplace(phrase, count);
    }
    return out;
  }

  std::uint64_t count(std::string_view phrase) const;
  bool contains(std::string_view phrase) const { return counts_.count(std::string(phrase)) > 0; }
  std::size_t size() const { return counts_.size(); }
  bool empty() const { return counts_.empty(); }
  std::uint64_t total() const;

  const Counts& counts() const { return counts_; }
  GramLengths n_set() const { return n_set_; }
  TableScope scope() const { return scope_; }

  // Entries sorted by phrase text.
  std::vector<std::pair<std::string, std::uint64_t>> sorted() const;

  friend bool operator==(const NgramTable& a, const NgramTable& b) {
    return a.counts_ == b.counts_;
  }

 private:
  GramLengths n_set_;
  TableScope scope_ = TableScope::kDocument;
  Counts counts_;
};

// Every window of `n` consecutive tokens, in order, duplicates included.
std::vector<Phrase> enumerate_ngrams(std::span<const std::string> tokens, int n);

NgramTable count_ngrams_per_page(const TokenizedPage& page, const ExtractionConfig& cfg);

// Document-scope table. Windows never span a page boundary. Pages are
// counted in parallel (OpenMP) and merged in page order.
NgramTable count_ngrams(std::span<const TokenizedPage> pages, const ExtractionConfig& cfg);

// Single-threaded reference for count_ngrams.
NgramTable count_ngrams_serial(std::span<const TokenizedPage> pages, const ExtractionConfig& cfg);

}  // namespace gramtopic

#endif  // GRAMTOPIC_NGRAM_HPP_
