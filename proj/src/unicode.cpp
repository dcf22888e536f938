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

#include "boundkit/unicode.hpp"

#include <string>

#include "boundkit/error.hpp"

namespace boundkit {
namespace {

[[noreturn]] void bad_utf8(std::size_t offset) {
  throw Error(ErrorCode::kInvalidUtf8,
              "invalid UTF-8 at byte " + std::to_string(offset));
}

}  // namespace

Text decode_utf8(std::string_view bytes) {
  Text out;
  out.reserve(bytes.size());
  std::size_t i = 0;
  const std::size_t n = bytes.size();
  while (i < n) {
    const auto b0 = static_cast<unsigned char>(bytes[i]);
    if (b0 < 0x80) {
      out.push_back(b0);
      ++i;
      continue;
    }
    std::size_t len;
    char32_t cp;
    char32_t min;
    if ((b0 & 0xE0) == 0xC0) {
      len = 2, cp = b0 & 0x1F, min = 0x80;
    } else if ((b0 & 0xF0) == 0xE0) {
      len = 3, cp = b0 & 0x0F, min = 0x800;
    } else if ((b0 & 0xF8) == 0xF0) {
      len = 4, cp = b0 & 0x07, min = 0x10000;
    } else {
      bad_utf8(i);
    }
    if (i + len > n) bad_utf8(i);
    for (std::size_t k = 1; k < len; ++k) {
      const auto b = static_cast<unsigned char>(bytes[i + k]);
      if ((b & 0xC0) != 0x80) bad_utf8(i);
      cp = (cp << 6) | (b & 0x3F);
    }
    if (cp < min || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) bad_utf8(i);
    out.push_back(cp);
    i += len;
  }
  return out;
}

std::string encode_utf8(TextView text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t c : text) {
    if (c < 0x80) {
      out.push_back(static_cast<char>(c));
    } else if (c < 0x800) {
      out.push_back(static_cast<char>(0xC0 | (c >> 6)));
      out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
    } else if (c < 0x10000) {
      out.push_back(static_cast<char>(0xE0 | (c >> 12)));
      out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
    } else {
      out.push_back(static_cast<char>(0xF0 | (c >> 18)));
      out.push_back(static_cast<char>(0x80 | ((c >> 12) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
    }
  }
  return out;
}

CharClass classify(char32_t c) noexcept {
  if (is_unicode_whitespace(c)) return CharClass::kSpace;
  if (c < 0x80) {
    if ((c >= U'a' && c <= U'z') || (c >= U'A' && c <= U'Z')) return CharClass::kLetter;
    if (c >= U'0' && c <= U'9') return CharClass::kDigit;
    return CharClass::kPunct;
  }
  // Latin-1 punctuation and symbols, ×, ÷.
  if ((c >= 0xA1 && c <= 0xBF) || c == 0xD7 || c == 0xF7) return CharClass::kPunct;
  // General Punctuation, currency, letterlike/arrows/math/box drawing, CJK
  // symbols and punctuation, fullwidth ASCII punctuation.
  if ((c >= 0x2000 && c <= 0x2BFF) || (c >= 0x3000 && c <= 0x303F)) return CharClass::kPunct;
  if ((c >= 0xFF01 && c <= 0xFF0F) || (c >= 0xFF1A && c <= 0xFF20)) return CharClass::kPunct;
  if (c >= 0xFF10 && c <= 0xFF19) return CharClass::kDigit;
  return CharClass::kLetter;
}

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kLabelOutOfRange: return "LabelOutOfRange";
    case ErrorCode::kWindowLacksHumanPrefix: return "WindowLacksHumanPrefix";
    case ErrorCode::kWindowLacksMachineSuffix: return "WindowLacksMachineSuffix";
    case ErrorCode::kNoCoveringSubtoken: return "NoCoveringSubtoken";
    case ErrorCode::kSubtokenOutOfRange: return "SubtokenOutOfRange";
    case ErrorCode::kMissingPrediction: return "MissingPrediction";
    case ErrorCode::kDuplicatePrediction: return "DuplicatePrediction";
    case ErrorCode::kUnknownId: return "UnknownId";
    case ErrorCode::kMissingLabel: return "MissingLabel";
    case ErrorCode::kEmptyTrainingCorpus: return "EmptyTrainingCorpus";
    case ErrorCode::kMissingTokenization: return "MissingTokenization";
    case ErrorCode::kInvalidTokenization: return "InvalidTokenization";
    case ErrorCode::kDuplicateId: return "DuplicateId";
    case ErrorCode::kInvalidUtf8: return "InvalidUtf8";
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kIo: return "IoError";
  }
  return "Unknown";
}

}  // namespace boundkit
