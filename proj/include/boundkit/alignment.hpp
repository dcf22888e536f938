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

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "boundkit/corpus_model.hpp"

namespace boundkit {

enum class TokenizationSource : std::uint8_t { kExternalSidecar, kFallback };

// Subtoken character spans over the original text, as emitted by any
// tokenizer (end-exclusive, ordered, non-overlapping).
struct Tokenization {
  std::string record_ref;
  std::vector<CharSpan> spans;
  TokenizationSource source = TokenizationSource::kExternalSidecar;

  std::size_t size() const noexcept { return spans.size(); }
  friend bool operator==(const Tokenization&, const Tokenization&) = default;
};

// Throws Error(kInvalidTokenization) on overlap, disorder, empty spans or a
// span past `text_length`.
void check_tokenization(const Tokenization& tok, std::size_t text_length);

// The boundary subtoken: the first subtoken starting at the word's first
// character, else the subtoken containing it, else the first subtoken inside
// the word. Throws Error(kNoCoveringSubtoken) or Error(kLabelOutOfRange).
std::size_t word_label_to_boundary_subtoken(const WordMap& words,
                                            std::size_t label,
                                            const Tokenization& tok);

struct WordLabel {
  std::size_t word = 0;
  // The subtoken started after the last word and was clamped to it.
  bool clamped = false;
};

// Word containing the subtoken's first character (the next word if that
// character is in a gap). Throws Error(kSubtokenOutOfRange) for a bad index.
WordLabel subtoken_to_word_label(const WordMap& words, const Tokenization& tok,
                                 std::size_t subtoken);

// Splits every word at letter/digit/punctuation/space class transitions.
Tokenization fallback_tokenize(TextView text,
                               SegmentationMode mode = SegmentationMode::kSpaceOnly);

}  // namespace boundkit
