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
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "boundkit/anomaly.hpp"
#include "boundkit/corpus_model.hpp"

namespace boundkit {

struct PredictionRecord {
  std::string id;
  std::size_t predicted_label = 0;

  friend bool operator==(const PredictionRecord&, const PredictionRecord&) = default;
};

enum class GroupBy : std::uint8_t { kNone, kDomain, kGenerator };

struct GroupScore {
  double mae = 0.0;
  std::size_t count = 0;
  std::uint64_t abs_error_sum = 0;
};

struct ScoredError {
  std::string id;
  std::uint64_t distance = 0;

  friend bool operator==(const ScoredError&, const ScoredError&) = default;
};

struct ScoreReport {
  double mae = 0.0;
  std::size_t count = 0;
  std::uint64_t abs_error_sum = 0;
  std::size_t exact = 0;
  std::map<std::string, GroupScore> per_group;
  std::uint64_t threshold = 100;
  // |pred - gold| > threshold, largest first.
  std::vector<ScoredError> big_errors;
  // Predictions larger than the gold text's word count. Scored as given.
  std::vector<std::string> out_of_range_ids;
};

struct ScoreOptions {
  GroupBy group_by = GroupBy::kNone;
  std::uint64_t threshold = 100;
  SegmentationMode mode = SegmentationMode::kSpaceOnly;
};

// MAE in word-label units. Predictions are matched to golds by id. Throws
// Error(kMissingPrediction | kDuplicatePrediction | kUnknownId | kMissingLabel).
ScoreReport compute_mae(const std::vector<PredictionRecord>& preds,
                        const std::vector<LabeledText>& golds,
                        const ScoreOptions& options = {});

// Records with |pred - gold| > threshold, sorted by distance descending (gold
// order among ties). Same matching rules and errors as compute_mae.
std::vector<ScoredError> bucket_errors(const std::vector<PredictionRecord>& preds,
                                       const std::vector<LabeledText>& golds,
                                       std::uint64_t threshold = 100);

namespace baseline {

struct Fixed {
  std::size_t k = 0;
};

struct TrainMedian {
  std::vector<LabeledText> train;
};

using Fallback = std::variant<Fixed, TrainMedian>;

struct AnomalyFirst {
  Fallback fallback;
  AnomalyConfig config;
  SegmentationMode mode = SegmentationMode::kSpaceOnly;
};

using Strategy = std::variant<Fixed, TrainMedian, AnomalyFirst>;

// Lower median of the training labels. Throws Error(kEmptyTrainingCorpus).
std::size_t median_label(const std::vector<LabeledText>& train);

}  // namespace baseline

std::vector<PredictionRecord> baseline_predict(const std::vector<LabeledText>& corpus,
                                               const baseline::Strategy& strategy);

}  // namespace boundkit
