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

#include "gramtopic/textprep.hpp"

#include "utf8.hpp"

namespace gramtopic {

namespace {

// Simple (one-to-one) lowercase mapping for the scripts likely to show up in
// converted research articles: Latin, Greek, Cyrillic.
char32_t to_lower(char32_t cp) {
  if (cp < 0x80) {
    return (cp >= 'A' && cp <= 'Z') ? cp + 0x20 : cp;
  }
  if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 0x20;
  if (cp >= 0x100 && cp <= 0x17F) {
    if (cp == 0x130) return 'i';
    if (cp == 0x178) return 0xFF;
    if ((cp >= 0x139 && cp <= 0x148) || (cp >= 0x179 && cp <= 0x17E)) {
      return (cp % 2 == 1) ? cp + 1 : cp;
    }
    if (cp == 0x131 || cp == 0x138 || cp == 0x149 || cp == 0x17F) return cp;
    return (cp % 2 == 0) ? cp + 1 : cp;
  }
  if (cp >= 0x391 && cp <= 0x3A9 && cp != 0x3A2) return cp + 0x20;
  if (cp == 0x386) return 0x3AC;
  if (cp >= 0x388 && cp <= 0x38A) return cp + 0x25;
  if (cp == 0x38C) return 0x3CC;
  if (cp == 0x38E || cp == 0x38F) return cp + 0x3F;
  if (cp >= 0x410 && cp <= 0x42F) return cp + 0x20;
  if (cp >= 0x400 && cp <= 0x40F) return cp + 0x50;
  if (cp >= 0x1E00 && cp <= 0x1EFF && cp != 0x1E9E && (cp < 0x1E96 || cp > 0x1E9F)) {
    return (cp % 2 == 0) ? cp + 1 : cp;
  }
  return cp;
}

bool is_word_char(char32_t cp) { return !is_space_char(cp) && !is_strip_char(cp); }

}  // namespace

bool is_space_char(char32_t cp) {
  switch (cp) {
    case ' ': case '\t': case '\n': case '\v': case '\f': case '\r':
    case 0x85: case 0xA0: case 0x1680: case 0x2028: case 0x2029:
    case 0x202F: case 0x205F: case 0x3000: case 0xFEFF:
      return true;
    default:
      return cp < 0x20 || cp == 0x7F || (cp >= 0x2000 && cp <= 0x200D);
  }
}

bool is_strip_char(char32_t cp) {
  if (cp < 0x80) {
    return (cp >= 0x21 && cp <= 0x2F) || (cp >= 0x3A && cp <= 0x40) ||
           (cp >= 0x5B && cp <= 0x60) || (cp >= 0x7B && cp <= 0x7E);
  }
  if (cp >= 0xA1 && cp <= 0xBF) {
    // ª µ º are letters; ¹ ² ³ ¼ ½ ¾ are numbers.
    switch (cp) {
      case 0xAA: case 0xB5: case 0xBA: case 0xB2: case 0xB3: case 0xB9:
      case 0xBC: case 0xBD: case 0xBE:
        return false;
      default:
        return true;
    }
  }
  if (cp == 0xD7 || cp == 0xF7) return true;
  return cp >= 0x2010 && cp <= 0x205E && !is_space_char(cp);
}

std::string normalize_text(std::string_view raw, const TextprepOptions& options) {
  std::string out;
  out.reserve(raw.size());
  bool pending_space = false;
  std::size_t pos = 0;
  while (pos < raw.size()) {
    char32_t cp = utf8::decode_next(raw, pos);
    if (cp == '-' && options.keep_hyphens && !out.empty() && !pending_space) {
      std::size_t peek = pos;
      if (peek < raw.size() && is_word_char(utf8::decode_next(raw, peek))) {
        out.push_back('-');
        continue;
      }
    }
    if (is_space_char(cp) || is_strip_char(cp)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    utf8::append(out, to_lower(cp));
  }
  return out;
}

TokenizedPage tokenize(std::string_view text, const TextprepOptions& options) {
  const std::string normalized = normalize_text(text, options);
  TokenizedPage page;
  std::size_t start = 0;
  while (start < normalized.size()) {
    std::size_t end = normalized.find(' ', start);
    if (end == std::string::npos) end = normalized.size();
    page.tokens.emplace_back(normalized, start, end - start);
    start = end + 1;
  }
  return page;
}

}  // namespace gramtopic
