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

#include "boundkit/stats.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "boundkit/error.hpp"

namespace boundkit {
namespace {

const Tokenization& tokenization_for(const TokenizationIndex& index, const LabeledText& r) {
  const auto it = index.find(r.id);
  if (it == index.end()) {
    throw Error(ErrorCode::kMissingTokenization, "no tokenization for record " + r.id);
  }
  return it->second;
}

}  // namespace

double Histogram::fraction_within_limit() const noexcept {
  return total == 0 ? 0.0 : static_cast<double>(limit_count) / static_cast<double>(total);
}

Histogram make_histogram(std::vector<std::pair<std::string, std::size_t>> values,
                         std::size_t bin_width) {
  Histogram h;
  h.bin_width = std::max<std::size_t>(bin_width, 1);
  h.total = values.size();
  if (!values.empty()) {
    std::vector<std::size_t> sorted;
    sorted.reserve(values.size());
    for (const auto& [id, v] : values) {
      ++h.bins[v / h.bin_width * h.bin_width];
      sorted.push_back(v);
    }
    std::sort(sorted.begin(), sorted.end());
    const std::size_t n = sorted.size();
    h.summary.min = sorted.front();
    h.summary.max = sorted.back();
    h.summary.mean = static_cast<double>(std::accumulate(sorted.begin(), sorted.end(), std::uint64_t{0})) /
                     static_cast<double>(n);
    h.summary.median = n % 2 == 1 ? static_cast<double>(sorted[n / 2])
                                  : (static_cast<double>(sorted[n / 2 - 1]) +
                                     static_cast<double>(sorted[n / 2])) / 2.0;
  }
  h.values = std::move(values);
  return h;
}

Histogram length_histogram(const std::vector<LabeledText>& corpus,
                           const TokenizationIndex& tokenizations, std::size_t bin_width,
                           std::size_t context_limit) {
  std::vector<std::pair<std::string, std::size_t>> values;
  values.reserve(corpus.size());
  for (const auto& r : corpus) values.emplace_back(r.id, tokenization_for(tokenizations, r).size());
  Histogram h = make_histogram(std::move(values), bin_width);
  h.limit = context_limit;
  for (const auto& [id, v] : h.values) {
    if (v > context_limit) h.over_limit_ids.push_back(id);
  }
  h.limit_count = h.over_limit_ids.size();
  return h;
}

Histogram boundary_histogram(const std::vector<LabeledText>& corpus,
                             const TokenizationIndex& tokenizations, std::size_t bin_width,
                             SegmentationMode mode, std::size_t early_limit) {
  std::vector<std::pair<std::string, std::size_t>> values;
  std::vector<RecordError> errors;
  for (const auto& r : corpus) {
    if (!r.label) {
      errors.push_back(RecordError{r.id, "unlabeled"});
      continue;
    }
    try {
      const Tokenization& tok = tokenization_for(tokenizations, r);
      const WordMap words = segment_words(r.text, mode);
      values.emplace_back(r.id, word_label_to_boundary_subtoken(words, *r.label, tok));
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kMissingTokenization) throw;
      errors.push_back(RecordError{r.id, e.what()});
    }
  }
  Histogram h = make_histogram(std::move(values), bin_width);
  h.errors = std::move(errors);
  h.limit = early_limit;
  h.limit_count = static_cast<std::size_t>(
      std::count_if(h.values.begin(), h.values.end(),
                    [&](const auto& p) { return p.second < early_limit; }));
  return h;
}

}  // namespace boundkit
