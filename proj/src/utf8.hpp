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

#ifndef GRAMTOPIC_SRC_UTF8_HPP_
#define GRAMTOPIC_SRC_UTF8_HPP_

#include <cstddef>
#include <string>
#include <string_view>

namespace gramtopic::utf8 {

inline constexpr char32_t kReplacement = 0xFFFD;

// Decodes one code point starting at `pos`, advancing it. Malformed,
// overlong, surrogate and truncated sequences decode to U+FFFD and consume
// a single byte so that decoding always makes progress.
char32_t decode_next(std::string_view text, std::size_t& pos);

void append(std::string& out, char32_t cp);

// Re-encodes `bytes`, replacing every invalid sequence with U+FFFD.
std::string sanitize(std::string_view bytes);

bool is_valid(std::string_view bytes);

}  // namespace gramtopic::utf8

#endif  // GRAMTOPIC_SRC_UTF8_HPP_
