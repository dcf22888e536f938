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

#include "boundkit/segmentation.hpp"

#include <string>

#include "boundkit/error.hpp"

namespace boundkit {
namespace {

bool is_terminator(char32_t c, const SentenceOptions& options) {
  return c == U'.' || c == U'!' || c == U'?' ||
         (options.ellipsis_terminates && c == U'…');
}

}  // namespace

std::vector<SentenceSpan> split_sentences(TextView text, SentenceOptions options) {
  std::vector<SentenceSpan> out;
  const std::size_t n = text.size();
  std::size_t i = 0;
  while (true) {
    while (i < n && is_unicode_whitespace(text[i])) ++i;
    if (i == n) break;
    const std::size_t start = i;
    std::size_t end = n;
    while (i < n) {
      if (!is_terminator(text[i], options)) {
        ++i;
        continue;
      }
      while (i < n && is_terminator(text[i], options)) ++i;
      if (i == n || is_unicode_whitespace(text[i])) {
        end = i;
        break;
      }
    }
    if (i == n) {
      // Unterminated (or terminated at end of text) final fragment.
      end = n;
      while (end > start && is_unicode_whitespace(text[end - 1])) --end;
    }
    out.push_back(SentenceSpan{out.size(), CharSpan{start, end}});
  }
  return out;
}

std::string_view to_string(DiscrepancyKind kind) {
  return kind == DiscrepancyKind::kLostWhitespace ? "lost_whitespace"
                                                  : "newline_joined_sequence";
}

ReconciledText reconcile(TextView text, SegmentationMode mode, SentenceOptions options) {
  ReconciledText rec;
  rec.sentences = split_sentences(text, options);
  rec.word_map = segment_words(text, mode);
  rec.words_per_sentence.assign(rec.sentences.size(), 0);
  rec.home_sentence.reserve(rec.word_map.total_count());

  const auto& sentences = rec.sentences;
  const std::size_t sentence_count = sentences.size();
  std::size_t first_open = 0;  // first sentence ending after the current word's start
  for (std::size_t w = 0; w < rec.word_map.words.size(); ++w) {
    Word& word = rec.word_map.words[w];
    while (first_open < sentence_count && sentences[first_open].span.end <= word.span.start) {
      ++first_open;
    }
    word.covered_sentences.clear();
    for (std::size_t s = first_open;
         s < sentence_count && sentences[s].span.start < word.span.end; ++s) {
      word.covered_sentences.push_back(s);
    }

    std::optional<std::size_t> home;
    if (first_open < sentence_count) {
      home = first_open;
    } else if (sentence_count > 0) {
      home = sentence_count - 1;
    }
    rec.home_sentence.push_back(home);
    if (home) {
      ++rec.words_per_sentence[*home];
    } else {
      ++rec.unattributed_words;
    }

    const auto& covered = word.covered_sentences;
    if (covered.empty()) {
      rec.discrepancies.push_back({DiscrepancyKind::kLostWhitespace, word.span, w});
      continue;
    }
    const std::size_t first_start = sentences[covered.front()].span.start;
    const std::size_t last_end = sentences[covered.back()].span.end;
    if (word.span.start < first_start) {
      rec.discrepancies.push_back(
          {DiscrepancyKind::kLostWhitespace, CharSpan{word.span.start, first_start}, w});
    }
    if (covered.size() > 1) {
      rec.discrepancies.push_back({DiscrepancyKind::kNewlineJoinedSequence, word.span, w});
    }
    if (word.span.end > last_end) {
      rec.discrepancies.push_back(
          {DiscrepancyKind::kLostWhitespace, CharSpan{last_end, word.span.end}, w});
    }
  }
  return rec;
}

ReconciledText reconcile(const LabeledText& record, SegmentationMode mode,
                         SentenceOptions options) {
  ReconciledText rec = reconcile(TextView(record.text), mode, options);
  rec.record_ref = record.id;
  return rec;
}

std::size_t locate_boundary_sentence(const ReconciledText& rec, std::size_t label) {
  if (label >= rec.word_map.total_count()) {
    throw Error(ErrorCode::kLabelOutOfRange,
                "label " + std::to_string(label) + " out of range for " +
                    std::to_string(rec.word_map.total_count()) + " words");
  }
  const auto& home = rec.home_sentence[label];
  if (!home) {
    throw Error(ErrorCode::kLabelOutOfRange, "text has no sentences");
  }
  return *home;
}

}  // namespace boundkit
