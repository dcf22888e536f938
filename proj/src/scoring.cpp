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

#include "boundkit/scoring.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <unordered_map>

#include "boundkit/error.hpp"
#include "boundkit/kernels.hpp"

namespace boundkit {
namespace {

// Predictions and golds lined up in gold order.
struct Matched {
  std::vector<std::int64_t> pred;
  std::vector<std::int64_t> gold;
};

Matched match(const std::vector<PredictionRecord>& preds,
              const std::vector<LabeledText>& golds) {
  std::unordered_map<std::string_view, std::size_t> by_id;
  by_id.reserve(preds.size());
  for (std::size_t i = 0; i < preds.size(); ++i) {
    if (!by_id.emplace(preds[i].id, i).second) {
      throw Error(ErrorCode::kDuplicatePrediction, "duplicate prediction for id " + preds[i].id);
    }
  }
  Matched m;
  m.pred.reserve(golds.size());
  m.gold.reserve(golds.size());
  std::vector<bool> used(preds.size(), false);
  std::unordered_map<std::string_view, bool> seen_gold;
  for (const LabeledText& g : golds) {
    if (!seen_gold.emplace(g.id, true).second) {
      throw Error(ErrorCode::kDuplicateId, "duplicate gold id " + g.id);
    }
    if (!g.label) throw Error(ErrorCode::kMissingLabel, "gold record " + g.id + " has no label");
    const auto it = by_id.find(g.id);
    if (it == by_id.end()) throw Error(ErrorCode::kMissingPrediction, "no prediction for id " + g.id);
    used[it->second] = true;
    m.pred.push_back(static_cast<std::int64_t>(preds[it->second].predicted_label));
    m.gold.push_back(static_cast<std::int64_t>(*g.label));
  }
  for (std::size_t i = 0; i < preds.size(); ++i) {
    if (!used[i]) throw Error(ErrorCode::kUnknownId, "prediction for unknown id " + preds[i].id);
  }
  return m;
}

std::uint64_t distance(std::int64_t a, std::int64_t b) {
  return static_cast<std::uint64_t>(a > b ? a - b : b - a);
}

std::vector<ScoredError> bucket(const Matched& m, const std::vector<LabeledText>& golds,
                                std::uint64_t threshold) {
  std::vector<ScoredError> out;
  for (std::size_t i = 0; i < golds.size(); ++i) {
    const std::uint64_t d = distance(m.pred[i], m.gold[i]);
    if (d > threshold) out.push_back(ScoredError{golds[i].id, d});
  }
  std::stable_sort(out.begin(), out.end(), [](const ScoredError& x, const ScoredError& y) {
    return x.distance > y.distance;
  });
  return out;
}

std::string group_key(const LabeledText& g, GroupBy group_by) {
  const auto& tag = group_by == GroupBy::kDomain ? g.domain_tag : g.generator_tag;
  return tag ? *tag : "unknown";
}

}  // namespace

ScoreReport compute_mae(const std::vector<PredictionRecord>& preds,
                        const std::vector<LabeledText>& golds, const ScoreOptions& options) {
  const Matched m = match(preds, golds);
  ScoreReport report;
  report.count = golds.size();
  report.threshold = options.threshold;
  report.abs_error_sum = kernels::abs_diff_sum(m.pred, m.gold);
  report.mae = report.count == 0 ? 0.0
                                 : static_cast<double>(report.abs_error_sum) /
                                       static_cast<double>(report.count);
  report.exact = report.count - kernels::count_abs_diff_above(m.pred, m.gold, 0);

  if (options.group_by != GroupBy::kNone) {
    for (std::size_t i = 0; i < golds.size(); ++i) {
      GroupScore& g = report.per_group[group_key(golds[i], options.group_by)];
      g.abs_error_sum += distance(m.pred[i], m.gold[i]);
      ++g.count;
    }
    for (auto& [key, g] : report.per_group) {
      g.mae = static_cast<double>(g.abs_error_sum) / static_cast<double>(g.count);
    }
  }

  const auto clamped = std::min<std::uint64_t>(options.threshold,
                                               std::numeric_limits<std::int64_t>::max());
  if (kernels::count_abs_diff_above(m.pred, m.gold, static_cast<std::int64_t>(clamped)) > 0) {
    report.big_errors = bucket(m, golds, options.threshold);
  }

  for (std::size_t i = 0; i < golds.size(); ++i) {
    if (golds[i].text.empty()) continue;
    const auto words = segment_words(golds[i].text, options.mode).total_count();
    if (static_cast<std::uint64_t>(m.pred[i]) > words) report.out_of_range_ids.push_back(golds[i].id);
  }
  return report;
}

std::vector<ScoredError> bucket_errors(const std::vector<PredictionRecord>& preds,
                                       const std::vector<LabeledText>& golds,
                                       std::uint64_t threshold) {
  return bucket(match(preds, golds), golds, threshold);
}

namespace baseline {

std::size_t median_label(const std::vector<LabeledText>& train) {
  std::vector<std::size_t> labels;
  labels.reserve(train.size());
  for (const auto& r : train) {
    if (r.label) labels.push_back(*r.label);
  }
  if (labels.empty()) {
    throw Error(ErrorCode::kEmptyTrainingCorpus, "training corpus has no labeled records");
  }
  const std::size_t mid = (labels.size() - 1) / 2;
  std::nth_element(labels.begin(), labels.begin() + static_cast<std::ptrdiff_t>(mid), labels.end());
  return labels[mid];
}

}  // namespace baseline

std::vector<PredictionRecord> baseline_predict(const std::vector<LabeledText>& corpus,
                                               const baseline::Strategy& strategy) {
  using namespace baseline;
  auto constant = [](const Fallback& f) -> std::size_t {
    if (const auto* fixed = std::get_if<Fixed>(&f)) return fixed->k;
    return median_label(std::get<TrainMedian>(f).train);
  };

  std::vector<PredictionRecord> out;
  out.reserve(corpus.size());
  if (const auto* first = std::get_if<AnomalyFirst>(&strategy)) {
    const std::size_t fallback = constant(first->fallback);
    for (const auto& r : corpus) {
      std::size_t label = fallback;
      const auto spans = detect_anomalies(r.text, first->config);
      if (!spans.empty()) {
        const WordMap words = segment_words(r.text, first->mode);
        if (auto w = word_at_or_after(words, spans.front().span.start)) label = *w;
      }
      out.push_back(PredictionRecord{r.id, label});
    }
    return out;
  }

  const std::size_t k = std::holds_alternative<Fixed>(strategy)
                            ? std::get<Fixed>(strategy).k
                            : median_label(std::get<TrainMedian>(strategy).train);
  for (const auto& r : corpus) out.push_back(PredictionRecord{r.id, k});
  return out;
}

}  // namespace boundkit
