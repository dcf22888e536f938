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
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "boundkit/alignment.hpp"
#include "boundkit/corpus_model.hpp"

namespace boundkit {

struct HistogramSummary {
  std::size_t min = 0;
  std::size_t max = 0;
  double mean = 0.0;
  double median = 0.0;
};

struct RecordError {
  std::string id;
  std::string message;
};

struct Histogram {
  std::size_t bin_width = 1;
  std::map<std::size_t, std::size_t> bins;  // bin start -> count
  std::size_t total = 0;
  HistogramSummary summary;
  std::vector<std::pair<std::string, std::size_t>> values;  // raw, corpus order
  std::vector<RecordError> errors;

  // length_histogram: records longer than `limit` subtokens.
  // boundary_histogram: records whose boundary subtoken is < `limit`.
  std::size_t limit = 0;
  std::size_t limit_count = 0;
  std::vector<std::string> over_limit_ids;
  double fraction_within_limit() const noexcept;
};

// Bins from raw values; summary is computed from the values directly.
Histogram make_histogram(std::vector<std::pair<std::string, std::size_t>> values,
                         std::size_t bin_width);

using TokenizationIndex = std::unordered_map<std::string, Tokenization>;

inline constexpr std::size_t kContextLimit = 512;
inline constexpr std::size_t kEarlyBoundaryLimit = 200;

// Throws Error(kMissingTokenization) when a record has no entry.
Histogram length_histogram(const std::vector<LabeledText>& corpus,
                           const TokenizationIndex& tokenizations,
                           std::size_t bin_width,
                           std::size_t context_limit = kContextLimit);

// Unlabeled records and alignment failures are listed in `errors` and left
// out of the bins.
Histogram boundary_histogram(const std::vector<LabeledText>& corpus,
                             const TokenizationIndex& tokenizations,
                             std::size_t bin_width,
                             SegmentationMode mode = SegmentationMode::kSpaceOnly,
                             std::size_t early_limit = kEarlyBoundaryLimit);

}  // namespace boundkit
