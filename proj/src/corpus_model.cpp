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

#include "boundkit/corpus_model.hpp"

#include <algorithm>
#include <string>

#include "boundkit/kernels.hpp"

namespace boundkit {

std::string_view to_string(SegmentationMode mode) {
  return mode == SegmentationMode::kSpaceOnly ? "space" : "whitespace";
}

std::optional<SegmentationMode> parse_segmentation_mode(std::string_view name) {
  if (name == "space") return SegmentationMode::kSpaceOnly;
  if (name == "whitespace") return SegmentationMode::kAllWhitespace;
  return std::nullopt;
}

WordMap segment_words(TextView text, SegmentationMode mode) {
  WordMap map;
  map.mode = mode;
  if (text.empty()) return map;

  std::vector<std::uint8_t> sep(text.size());
  kernels::separator_mask(std::span(text.data(), text.size()), mode, sep);

  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    while (i < n && sep[i]) ++i;
    if (i == n) break;
    const std::size_t start = i;
    while (i < n && !sep[i]) ++i;
    map.words.push_back(Word{CharSpan{start, i}, {}});
  }
  return map;
}

std::optional<std::size_t> word_at_or_after(const WordMap& words, std::size_t pos) {
  const auto it = std::partition_point(
      words.words.begin(), words.words.end(),
      [pos](const Word& w) { return w.span.end <= pos; });
  if (it == words.words.end()) return std::nullopt;
  return static_cast<std::size_t>(it - words.words.begin());
}

TextView word_text(TextView text, const Word& word) {
  return text.substr(word.span.start, word.span.size());
}

bool ValidationReport::has_errors() const noexcept {
  return std::any_of(violations.begin(), violations.end(),
                     [](const Violation& v) { return v.severity == Severity::kError; });
}

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kEmptyText: return "empty_text";
    case ViolationKind::kMissingLabel: return "missing_label";
    case ViolationKind::kLabelExceedsWordCount: return "label_exceeds_word_count";
    case ViolationKind::kNoHumanPrefix: return "degenerate_no_human_prefix";
    case ViolationKind::kNoMachineSuffix: return "degenerate_no_machine_suffix";
  }
  return "unknown";
}

ValidationReport validate_record(const LabeledText& record, SegmentationMode mode,
                                 bool require_label) {
  ValidationReport report;
  report.id = record.id;
  report.word_count = segment_words(record.text, mode).total_count();
  auto add = [&](ViolationKind kind, Severity severity, std::string message) {
    report.violations.push_back(Violation{kind, severity, std::move(message)});
  };

  if (record.text.empty()) add(ViolationKind::kEmptyText, Severity::kError, "text is empty");

  if (!record.label) {
    if (require_label) add(ViolationKind::kMissingLabel, Severity::kError, "label is missing");
    return report;
  }
  const std::size_t label = *record.label;
  const std::size_t count = report.word_count;
  if (label > count) {
    add(ViolationKind::kLabelExceedsWordCount, Severity::kError,
        "label " + std::to_string(label) + " exceeds word count " + std::to_string(count));
  } else if (label == count) {
    add(ViolationKind::kNoMachineSuffix, Severity::kWarning,
        "label equals word count " + std::to_string(count) + "; no machine-generated suffix");
  }
  if (label == 0 && !record.text.empty()) {
    add(ViolationKind::kNoHumanPrefix, Severity::kWarning,
        "label 0; no human-written prefix");
  }
  return report;
}

}  // namespace boundkit
