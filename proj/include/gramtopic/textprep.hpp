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

#ifndef GRAMTOPIC_TEXTPREP_HPP_
#define GRAMTOPIC_TEXTPREP_HPP_

#include <string>
#include <string_view>
#include <vector>

namespace gramtopic {

struct TextprepOptions {
  // Retain '-' between two word characters ("lane-keeping"). Hyphens at a
  // word edge are always stripped.
  bool keep_hyphens = false;
};

// Normalized word sequence of one page. Tokens are lowercase, non-empty, and
// contain neither whitespace nor strip-set characters.
struct TokenizedPage {
  std::vector<std::string> tokens;

  bool empty() const { return tokens.empty(); }
  std::size_t size() const { return tokens.size(); }
  friend bool operator==(const TokenizedPage&, const TokenizedPage&) = default;
};

// True for code points that normalize_text replaces with a space: ASCII
// punctuation and symbols, Latin-1 punctuation and symbols, and the General
// Punctuation block.
bool is_strip_char(char32_t cp);

bool is_space_char(char32_t cp);

// Replaces strip-set characters with spaces, lowercases letters, collapses
// whitespace runs to one space and trims both ends. Idempotent. Invalid
// UTF-8 bytes come out as U+FFFD.
std::string normalize_text(std::string_view raw, const TextprepOptions& options = {});

// Splits on single spaces. The input is normalized first, so raw text is
// accepted as well.
TokenizedPage tokenize(std::string_view text, const TextprepOptions& options = {});

}  // namespace gramtopic

#endif  // GRAMTOPIC_TEXTPREP_HPP_
