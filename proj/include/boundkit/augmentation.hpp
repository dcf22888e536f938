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
#include <vector>

#include "boundkit/error.hpp"
#include "boundkit/segmentation.hpp"

namespace boundkit {

struct WindowSpec {
  std::size_t left_k = 0;   // sentences kept left of the boundary sentence
  std::size_t right_k = 0;  // sentences kept right of it
  std::size_t min_human_words = 1;
  std::size_t min_machine_words = 1;
};

struct Provenance {
  std::string source_id;
  CharSpan window;
  std::size_t left_k = 0;
  std::size_t right_k = 0;
  std::uint64_t seed = 0;

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct AugmentedRecord {
  std::string id;
  Text text;  // source.text[window.start, window.end)
  std::size_t label = 0;
  std::optional<std::string> domain_tag;
  std::optional<std::string> generator_tag;
  SegmentationMode mode = SegmentationMode::kSpaceOnly;
  Provenance provenance;

  friend bool operator==(const AugmentedRecord&, const AugmentedRecord&) = default;

  LabeledText as_labeled() const;
};

// Either a record or the reason the window was rejected.
struct WindowResult {
  std::optional<AugmentedRecord> record;
  ErrorCode error = ErrorCode::kLabelOutOfRange;

  explicit operator bool() const noexcept { return record.has_value(); }
};

// Character window for sentences [b - left_k, b + right_k] around the
// boundary sentence b, widened to contain the boundary word and snapped
// outward to whole words. Exposed for tests and audits.
CharSpan window_span(const ReconciledText& rec, std::size_t source_label,
                     std::size_t left_k, std::size_t right_k);

WindowResult try_augment_record(const LabeledText& source,
                                const ReconciledText& rec,
                                std::size_t source_label,
                                const WindowSpec& spec,
                                std::uint64_t seed = 0);

// Throwing wrapper: Error(kWindowLacksHumanPrefix | kWindowLacksMachineSuffix
// | kLabelOutOfRange).
AugmentedRecord augment_record(const LabeledText& source,
                               const ReconciledText& rec,
                               std::size_t source_label,
                               const WindowSpec& spec,
                               std::uint64_t seed = 0);

struct AugmentConfig {
  std::size_t per_record = 8;
  std::size_t max_left = 4;
  std::size_t max_right = 4;
  std::size_t min_human_words = 1;
  std::size_t min_machine_words = 1;
  // Always keep the whole human prefix (window starts at sentence 0).
  bool full_prefix = false;
  std::uint64_t seed = 0;
  SegmentationMode mode = SegmentationMode::kSpaceOnly;
  SentenceOptions sentences;
  // Worker threads; 0 means hardware concurrency. Output does not depend on it.
  std::size_t threads = 1;
};

struct SkippedRecord {
  std::string id;
  std::string reason;
};

struct AugmentResult {
  std::vector<AugmentedRecord> records;
  std::vector<SkippedRecord> skipped;
};

// Seed of the RNG stream for one source record, derived from the global seed
// and the record id only.
std::uint64_t record_seed(std::uint64_t global_seed, std::string_view id);

// Windows for one record, in sampling order.
AugmentResult augment_one(const LabeledText& record, const AugmentConfig& config);

AugmentResult generate_corpus(const std::vector<LabeledText>& corpus,
                              const AugmentConfig& config);

}  // namespace boundkit
