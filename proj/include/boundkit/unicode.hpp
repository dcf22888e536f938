// Copyright 2026 The boundkit Authors.
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

#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace boundkit {

// Text is held as Unicode scalar values so that every index in the toolkit
// (word spans, sentence spans, tokenizer sidecars) is a character index.
using Text = std::u32string;
using TextView = std::u32string_view;

// Strict decoder: rejects overlong forms, surrogates and values above
// U+10FFFF. Throws Error(kInvalidUtf8) with the byte offset.
Text decode_utf8(std::string_view bytes);
std::string encode_utf8(TextView text);

// Unicode White_Space property.
constexpr bool is_unicode_whitespace(char32_t c) noexcept {
  if (c <= 0x20) return c == 0x20 || (c >= 0x09 && c <= 0x0D);
  if (c < 0x85) return false;
  switch (c) {
    case 0x85: case 0xA0: case 0x1680: case 0x2028: case 0x2029:
    case 0x202F: case 0x205F: case 0x3000:
      return true;
    default:
      return c >= 0x2000 && c <= 0x200A;
  }
}

enum class CharClass : std::uint8_t { kLetter, kDigit, kPunct, kSpace };

// Coarse class used by the fallback tokenizer. Non-ASCII code points are
// letters unless they fall in the common punctuation/symbol blocks.
CharClass classify(char32_t c) noexcept;

}  // namespace boundkit
