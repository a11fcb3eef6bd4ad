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

#include "gramtopic/ngram.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "gramtopic/error.hpp"

namespace gramtopic {

namespace {

void check_length(int n) {
  if (n < 1 || n > kMaxGramLength) {
    throw Error(ErrorCode::kInvalidN, "gram length " + std::to_string(n) + " is outside 1..5");
  }
}

void join_window(std::span<const std::string> tokens, std::size_t start, int n, std::string& out) {
  out.clear();
  for (int k = 0; k < n; ++k) {
    if (k > 0) out.push_back(' ');
    out.append(tokens[start + static_cast<std::size_t>(k)]);
  }
}

std::int64_t parse_int(std::string_view text, std::string_view what) {
  std::int64_t value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw Error(ErrorCode::kInvalidConfig, "cannot parse " + std::string(what) + " '" +
                                               std::string(text) + "'");
  }
  return value;
}

}  // namespace

Phrase Phrase::from_words(std::span<const std::string> words) {
  check_length(static_cast<int>(words.size()));
  std::string text;
  join_window(words, 0, static_cast<int>(words.size()), text);
  return Phrase(std::move(text), static_cast<int>(words.size()));
}

Phrase Phrase::from_text(std::string_view text) {
  const TokenizedPage page = tokenize(text);
  return from_words(page.tokens);
}

std::vector<std::string> Phrase::words() const { return tokenize(text_).tokens; }

GramLengths::GramLengths(std::initializer_list<int> lengths) {
  for (int n : lengths) {
    check_length(n);
    bits_ |= 1U << n;
  }
}

GramLengths GramLengths::from_vector(const std::vector<int>& lengths) {
  GramLengths out;
  for (int n : lengths) {
    check_length(n);
    out.bits_ |= 1U << n;
  }
  return out;
}

std::vector<int> GramLengths::to_vector() const {
  std::vector<int> out;
  for (int n = 1; n <= kMaxGramLength; ++n) {
    if (contains(n)) out.push_back(n);
  }
  return out;
}

Fraction Fraction::parse(std::string_view text) {
  if (!text.empty() && text.front() == '-') {
    Fraction f = parse(text.substr(1));
    f.num = -f.num;
    return f;
  }
  Fraction f;
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    f.num = parse_int(text.substr(0, slash), "fraction numerator");
    f.den = parse_int(text.substr(slash + 1), "fraction denominator");
  } else if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const std::string_view whole = text.substr(0, dot);
    const std::string_view frac = text.substr(dot + 1);
    if (frac.size() > 9) {
      throw Error(ErrorCode::kInvalidConfig, "too many decimals in '" + std::string(text) + "'");
    }
    f.den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) f.den *= 10;
    const std::int64_t w = whole.empty() ? 0 : parse_int(whole, "fraction");
    const std::int64_t d = frac.empty() ? 0 : parse_int(frac, "fraction");
    f.num = w * f.den + d;
  } else {
    f.num = parse_int(text, "fraction");
    f.den = 1;
  }
  if (f.den <= 0) throw Error(ErrorCode::kInvalidConfig, "fraction denominator must be positive");
  return reduced(f.num, f.den);
}

Fraction Fraction::reduced(std::int64_t num, std::int64_t den) {
  if (den <= 0) throw Error(ErrorCode::kInvalidConfig, "fraction denominator must be positive");
  const std::int64_t g = std::gcd(num, den);
  return g > 1 ? Fraction{num / g, den / g} : Fraction{num, den};
}

std::string Fraction::to_string() const { return std::to_string(num) + "/" + std::to_string(den); }

std::int64_t Fraction::ceil_times(std::int64_t count) const {
  const std::int64_t product = num * count;
  return (product + den - 1) / den;
}

void ExtractionConfig::validate() const {
  if (n_set.empty()) throw Error(ErrorCode::kInvalidN, "n_set is empty");
  if (top_k < 1) throw Error(ErrorCode::kInvalidConfig, "top_k must be >= 1");
  if (min_count < 1) throw Error(ErrorCode::kInvalidConfig, "min_count must be >= 1");
  if (page_high_freq_min < 1) {
    throw Error(ErrorCode::kInvalidConfig, "page_high_freq_min must be >= 1");
  }
  if (pa_fraction.den <= 0 || pa_fraction.num <= 0 || pa_fraction.num > pa_fraction.den) {
    throw Error(ErrorCode::kInvalidConfig,
                "pa_fraction must lie in (0, 1], got " + pa_fraction.to_string());
  }
  if (doc_min < 1) throw Error(ErrorCode::kInvalidConfig, "doc_min must be >= 1");
}

void NgramTable::add(std::string_view phrase, std::uint64_t count) {
  if (count == 0) return;
  auto it = counts_.find(std::string(phrase));
  if (it == counts_.end()) {
    counts_.emplace(std::string(phrase), count);
  } else {
    it->second += count;
  }
}

void NgramTable::merge(const NgramTable& other) {
  for (const auto& [phrase, count] : other.counts_) counts_[phrase] += count;
}

std::uint64_t NgramTable::count(std::string_view phrase) const {
  const auto it = counts_.find(std::string(phrase));
  return it == counts_.end() ? 0 : it->second;
}

std::uint64_t NgramTable::total() const {
  std::uint64_t sum = 0;
  for (const auto& entry : counts_) sum += entry.second;
  return sum;
}

std::vector<std::pair<std::string, std::uint64_t>> NgramTable::sorted() const {
  std::vector<std::pair<std::string, std::uint64_t>> out(counts_.begin(), counts_.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Phrase> enumerate_ngrams(std::span<const std::string> tokens, int n) {
  check_length(n);
  std::vector<Phrase> out;
  if (tokens.size() < static_cast<std::size_t>(n)) return out;
  const std::size_t windows = tokens.size() - static_cast<std::size_t>(n) + 1;
  out.reserve(windows);
  for (std::size_t i = 0; i < windows; ++i) {
    out.push_back(Phrase::from_words(tokens.subspan(i, static_cast<std::size_t>(n))));
  }
  return out;
}

NgramTable count_ngrams_per_page(const TokenizedPage& page, const ExtractionConfig& cfg) {
  NgramTable table(cfg.n_set, TableScope::kPage);
  const std::span<const std::string> tokens(page.tokens);
  std::string key;
  for (int n : cfg.n_set.to_vector()) {
    if (tokens.size() < static_cast<std::size_t>(n)) continue;
    const std::size_t windows = tokens.size() - static_cast<std::size_t>(n) + 1;
    for (std::size_t i = 0; i < windows; ++i) {
      join_window(tokens, i, n, key);
      table.add(key);
    }
  }
  return table;
}

NgramTable count_ngrams(std::span<const TokenizedPage> pages, const ExtractionConfig& cfg) {
  std::vector<NgramTable> per_page(pages.size());
  const auto page_count = static_cast<std::ptrdiff_t>(pages.size());
#pragma omp parallel for schedule(dynamic) if (page_count > 1)
  for (std::ptrdiff_t i = 0; i < page_count; ++i) {
    per_page[static_cast<std::size_t>(i)] =
        count_ngrams_per_page(pages[static_cast<std::size_t>(i)], cfg);
  }
  NgramTable table(cfg.n_set, TableScope::kDocument);
  for (const auto& page_table : per_page) table.merge(page_table);
  return table;
}

NgramTable count_ngrams_serial(std::span<const TokenizedPage> pages, const ExtractionConfig& cfg) {
  NgramTable table(cfg.n_set, TableScope::kDocument);
  for (const auto& page : pages) table.merge(count_ngrams_per_page(page, cfg));
  return table;
}

}  // namespace gramtopic
