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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "boundkit/unicode.hpp"

namespace boundkit {

// SpaceOnly: only U+0020 separates words, so "foo\nbar" is one word. This is
// the label convention of the boundary task and the default everywhere.
// AllWhitespace: any Unicode White_Space character separates words.
enum class SegmentationMode : std::uint8_t { kSpaceOnly, kAllWhitespace };

std::string_view to_string(SegmentationMode mode);
std::optional<SegmentationMode> parse_segmentation_mode(std::string_view name);

constexpr bool is_separator(char32_t c, SegmentationMode mode) noexcept {
  return mode == SegmentationMode::kSpaceOnly ? c == U' '
                                              : is_unicode_whitespace(c);
}

// Half-open character range [start, end).
struct CharSpan {
  std::size_t start = 0;
  std::size_t end = 0;

  std::size_t size() const noexcept { return end - start; }
  bool empty() const noexcept { return end == start; }
  bool contains(std::size_t pos) const noexcept {
    return pos >= start && pos < end;
  }
  friend bool operator==(const CharSpan&, const CharSpan&) = default;
  friend auto operator<=>(const CharSpan&, const CharSpan&) = default;
};

struct LabeledText {
  std::string id;
  Text text;
  // Number of words in the human-written prefix, i.e. the index of the first
  // machine-generated word. Absent for unlabeled test files.
  std::optional<std::size_t> label;
  std::optional<std::string> domain_tag;
  std::optional<std::string> generator_tag;

  friend bool operator==(const LabeledText&, const LabeledText&) = default;
};

struct Word {
  CharSpan span;
  // Filled by reconcile(); empty straight out of segment_words().
  std::vector<std::size_t> covered_sentences;

  friend bool operator==(const Word&, const Word&) = default;
};

// Whitespace-split words as spans over the original text. All label
// arithmetic goes through this type.
struct WordMap {
  SegmentationMode mode = SegmentationMode::kSpaceOnly;
  std::vector<Word> words;

  std::size_t total_count() const noexcept { return words.size(); }
  friend bool operator==(const WordMap&, const WordMap&) = default;
};

WordMap segment_words(TextView text,
                      SegmentationMode mode = SegmentationMode::kSpaceOnly);

// Index of the word containing `pos`, or of the first word starting after
// `pos` when it falls in a gap. nullopt if no word ends after `pos`.
std::optional<std::size_t> word_at_or_after(const WordMap& words,
                                            std::size_t pos);

TextView word_text(TextView text, const Word& word);

enum class ViolationKind : std::uint8_t {
  kEmptyText,
  kMissingLabel,
  kLabelExceedsWordCount,
  kNoHumanPrefix,    // label == 0
  kNoMachineSuffix,  // label == word count
};

enum class Severity : std::uint8_t { kWarning, kError };

struct Violation {
  ViolationKind kind;
  Severity severity;
  std::string message;
};

struct ValidationReport {
  std::string id;
  std::size_t word_count = 0;
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
  bool has_errors() const noexcept;
};

std::string_view to_string(ViolationKind kind);

// Never throws; violations are returned as data. Degenerate labels (0 or the
// word count) are warnings, everything else is an error.
ValidationReport validate_record(const LabeledText& record,
                                 SegmentationMode mode,
                                 bool require_label = true);

}  // namespace boundkit
