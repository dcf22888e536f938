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
#include <vector>

#include "boundkit/corpus_model.hpp"

namespace boundkit {

enum class AnomalyKind : std::uint8_t { kRepetition, kTripleQuote, kListLoop, kJsonBlob };

std::string_view to_string(AnomalyKind kind);

struct AnomalySpan {
  AnomalyKind kind;
  CharSpan span;
  double score = 0.0;  // in [0, 1]

  friend bool operator==(const AnomalySpan&, const AnomalySpan&) = default;
};

struct AnomalyConfig {
  // Repetition: an n-gram of min_ngram..max_ngram words seen at least
  // min_repeats times within window_words consecutive words.
  std::size_t min_ngram = 2;
  std::size_t max_ngram = 3;
  std::size_t min_repeats = 4;
  std::size_t window_words = 32;
  // ListLoop: at least min_list_lines consecutive lines whose words share a
  // common prefix of at least min_shared_prefix words.
  std::size_t min_list_lines = 4;
  std::size_t min_shared_prefix = 2;
  // JsonBlob: a run of lines where JSON-looking lines ({, }, [, ], or a
  // quoted key followed by ':') make up at least min_json_density of the run
  // and number at least min_json_lines.
  double min_json_density = 0.5;
  std::size_t min_json_lines = 2;
};

// All spans, sorted by start (then kind). Bizarre formatting has no kind of
// its own: it surfaces as TripleQuote and ListLoop spans.
std::vector<AnomalySpan> detect_anomalies(TextView text,
                                          const AnomalyConfig& config = {});

}  // namespace boundkit
