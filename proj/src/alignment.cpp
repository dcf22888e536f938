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

#include "boundkit/alignment.hpp"

#include <algorithm>
#include <string>

#include "boundkit/error.hpp"

namespace boundkit {

void check_tokenization(const Tokenization& tok, std::size_t text_length) {
  std::size_t prev_end = 0;
  for (std::size_t i = 0; i < tok.spans.size(); ++i) {
    const CharSpan s = tok.spans[i];
    const char* problem = nullptr;
    if (s.start >= s.end) {
      problem = "is empty or reversed";
    } else if (s.start < prev_end) {
      problem = "overlaps or precedes the previous span";
    } else if (s.end > text_length) {
      problem = "extends past the end of the text";
    }
    if (problem) {
      throw Error(ErrorCode::kInvalidTokenization,
                  "tokenization for " + tok.record_ref + ": span " + std::to_string(i) + " [" +
                      std::to_string(s.start) + "," + std::to_string(s.end) + ") " + problem);
    }
    prev_end = s.end;
  }
}

std::size_t word_label_to_boundary_subtoken(const WordMap& words, std::size_t label,
                                            const Tokenization& tok) {
  if (label >= words.total_count()) {
    throw Error(ErrorCode::kLabelOutOfRange,
                "label " + std::to_string(label) + " out of range for " +
                    std::to_string(words.total_count()) + " words");
  }
  const CharSpan word = words.words[label].span;
  const auto it = std::partition_point(tok.spans.begin(), tok.spans.end(),
                                       [&](const CharSpan& s) { return s.end <= word.start; });
  // Spans are ordered and disjoint, so the first span ending after the word
  // start is the one starting there, the one containing it, or the first one
  // after it.
  if (it == tok.spans.end() || it->start >= word.end) {
    throw Error(ErrorCode::kNoCoveringSubtoken,
                "no subtoken covers word " + std::to_string(label) + " of " + tok.record_ref +
                    " (" + std::to_string(tok.spans.size()) + " subtokens)");
  }
  return static_cast<std::size_t>(it - tok.spans.begin());
}

WordLabel subtoken_to_word_label(const WordMap& words, const Tokenization& tok,
                                 std::size_t subtoken) {
  if (subtoken >= tok.spans.size()) {
    throw Error(ErrorCode::kSubtokenOutOfRange,
                "subtoken " + std::to_string(subtoken) + " out of range for " +
                    std::to_string(tok.spans.size()) + " subtokens");
  }
  if (words.words.empty()) {
    throw Error(ErrorCode::kLabelOutOfRange, "text has no words");
  }
  if (auto w = word_at_or_after(words, tok.spans[subtoken].start)) return WordLabel{*w, false};
  return WordLabel{words.total_count() - 1, true};
}

Tokenization fallback_tokenize(TextView text, SegmentationMode mode) {
  Tokenization tok;
  tok.source = TokenizationSource::kFallback;
  for (const Word& word : segment_words(text, mode).words) {
    std::size_t start = word.span.start;
    for (std::size_t k = start + 1; k < word.span.end; ++k) {
      if (classify(text[k]) != classify(text[k - 1])) {
        tok.spans.push_back(CharSpan{start, k});
        start = k;
      }
    }
    tok.spans.push_back(CharSpan{start, word.span.end});
  }
  return tok;
}

}  // namespace boundkit
