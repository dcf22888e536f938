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
#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "boundkit/alignment.hpp"
#include "boundkit/anomaly.hpp"
#include "boundkit/augmentation.hpp"
#include "boundkit/corpus_model.hpp"
#include "boundkit/scoring.hpp"
#include "boundkit/stats.hpp"

// JSON-lines formats. Files are UTF-8; every character index in them counts
// Unicode scalar values, not bytes or UTF-16 units. Writers emit keys in a
// fixed order with no trailing whitespace, so identical input gives identical
// bytes.

namespace boundkit::io {

// Renames the logical fields id/text/label/domain/generator to the keys used
// by a particular file, e.g. {"label": "boundary"}.
class FieldMap {
 public:
  FieldMap() = default;
  // "label=boundary,text=content". Throws Error(kParse) on bad syntax or an
  // unknown logical field.
  static FieldMap parse(std::string_view spec);

  const std::string& key(std::string_view logical) const;

 private:
  std::map<std::string, std::string, std::less<>> renames_;
};

struct ReadOptions {
  bool require_labels = true;
  FieldMap fields;
  SegmentationMode mode = SegmentationMode::kSpaceOnly;
};

struct Corpus {
  std::vector<LabeledText> records;
  // validate_record findings, one report per record that has any.
  std::vector<ValidationReport> reports;
};

// Blank lines are skipped. Throws Error(kParse) with the 1-based line number,
// Error(kDuplicateId), Error(kMissingLabel) or Error(kInvalidUtf8).
Corpus read_corpus(std::istream& in, const ReadOptions& options = {});
Corpus read_corpus(const std::filesystem::path& path, const ReadOptions& options = {});

std::string corpus_line(const LabeledText& record);
void write_corpus(const std::vector<LabeledText>& records, std::ostream& out);

std::string prediction_line(const PredictionRecord& pred);
std::vector<PredictionRecord> read_predictions(std::istream& in);
std::vector<PredictionRecord> read_predictions(const std::filesystem::path& path);
void write_predictions(const std::vector<PredictionRecord>& preds, std::ostream& out);
void write_predictions(const std::vector<PredictionRecord>& preds,
                       const std::filesystem::path& path);

// Extends the corpus line with provenance; readable back with read_corpus.
std::string augmented_line(const AugmentedRecord& record);
void write_augmented(const std::vector<AugmentedRecord>& records, std::ostream& out);
void write_augmented(const std::vector<AugmentedRecord>& records,
                     const std::filesystem::path& path);
std::vector<AugmentedRecord> read_augmented(std::istream& in);

// {"id": ..., "spans": [[start, end], ...]}
std::string tokenization_line(const Tokenization& tok);
TokenizationIndex read_tokenizations(std::istream& in);
TokenizationIndex read_tokenizations(const std::filesystem::path& path);

// One line per record: {"id": ..., "anomalies": [{"kind", "start", "end", "score"}]}
std::string anomaly_line(std::string_view id, const std::vector<AnomalySpan>& spans);

// Report objects; callers add run-level fields (mode, inputs) before dumping.
nlohmann::ordered_json score_report_json(const ScoreReport& report);
nlohmann::ordered_json histogram_json(const Histogram& histogram);
nlohmann::ordered_json validation_json(const ValidationReport& report);

}  // namespace boundkit::io
