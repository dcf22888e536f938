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

#include <fmt/core.h>
#include <fmt/ostream.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "boundkit/alignment.hpp"
#include "boundkit/anomaly.hpp"
#include "boundkit/augmentation.hpp"
#include "boundkit/corpus_model.hpp"
#include "boundkit/error.hpp"
#include "boundkit/io.hpp"
#include "boundkit/scoring.hpp"
#include "boundkit/stats.hpp"
#include "json.hpp"

namespace {

using namespace boundkit;

constexpr int kExitData = 1;
constexpr int kExitUsage = 2;

struct CommonOptions {
  std::string mode = "space";
  std::uint64_t seed = 0;
  std::string tokenization;
  std::string field_map;
  std::string output;

  SegmentationMode segmentation() const { return *parse_segmentation_mode(mode); }
};

void add_common(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--mode", o.mode, "Word separators: space or whitespace")
      ->check(CLI::IsMember({"space", "whitespace"}))
      ->capture_default_str();
  cmd->add_option("--seed", o.seed, "Global RNG seed")->capture_default_str();
  cmd->add_option("--tokenization", o.tokenization, "Tokenization sidecar (JSONL)")
      ->check(CLI::ExistingFile);
  cmd->add_option("--field-map", o.field_map, "Key renames, e.g. label=boundary,text=content");
  cmd->add_option("-o,--output", o.output, "Output file (default stdout)");
}

io::Corpus load(const std::string& path, const CommonOptions& o, bool require_labels) {
  io::ReadOptions options;
  options.require_labels = require_labels;
  options.fields = io::FieldMap::parse(o.field_map);
  options.mode = o.segmentation();
  return io::read_corpus(std::filesystem::path(path), options);
}

void warn_reports(const io::Corpus& corpus) {
  for (const auto& report : corpus.reports) {
    for (const auto& v : report.violations) {
      fmt::print(stderr, "{}: {}: {}\n", report.id,
                 v.severity == Severity::kError ? "error" : "warning", v.message);
    }
  }
}

// Writes to the -o file when given, else stdout.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw Error(ErrorCode::kIo, "cannot open " + path + " for writing");
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }
  void close() {
    stream().flush();
    if (!stream()) throw Error(ErrorCode::kIo, "write failed");
  }

 private:
  std::unique_ptr<std::ofstream> file_;
};

TokenizationIndex tokenizations_for(const std::vector<LabeledText>& records,
                                    const CommonOptions& o) {
  if (!o.tokenization.empty()) {
    TokenizationIndex index = io::read_tokenizations(std::filesystem::path(o.tokenization));
    for (const auto& r : records) {
      if (auto it = index.find(r.id); it != index.end()) check_tokenization(it->second, r.text.size());
    }
    return index;
  }
  TokenizationIndex index;
  for (const auto& r : records) index.emplace(r.id, fallback_tokenize(r.text, o.segmentation()));
  return index;
}

const char* tokenization_source(const CommonOptions& o) {
  return o.tokenization.empty() ? "fallback" : "sidecar";
}

// validate ---------------------------------------------------------------

struct ValidateOptions {
  std::string corpus;
  bool allow_unlabeled = false;
  bool json = false;
};

int run_validate(const ValidateOptions& v, const CommonOptions& o) {
  const io::Corpus corpus = load(v.corpus, o, !v.allow_unlabeled);
  Output out(o.output);
  std::size_t warnings = 0;
  std::size_t errors = 0;
  for (const auto& report : corpus.reports) {
    for (const auto& violation : report.violations) {
      ++(violation.severity == Severity::kError ? errors : warnings);
    }
    if (v.json) {
      auto j = io::validation_json(report);
      out.stream() << j.dump(-1, ' ', false, nlohmann::ordered_json::error_handler_t::strict) << '\n';
    } else {
      for (const auto& violation : report.violations) {
        fmt::print(out.stream(), "{}\t{}\t{}\t{}\n", report.id,
                   violation.severity == Severity::kError ? "error" : "warning",
                   to_string(violation.kind), violation.message);
      }
    }
  }
  out.close();
  fmt::print(stderr, "{} records, {} warnings, {} errors\n", corpus.records.size(), warnings,
             errors);
  return errors ? kExitData : 0;
}

// stats -----------------------------------------------------------------

struct StatsOptions {
  std::string corpus;
  std::size_t bin_width = 50;
  std::size_t context_limit = kContextLimit;
  std::size_t early_limit = kEarlyBoundaryLimit;
  bool json = false;
};

void print_histogram(std::ostream& out, std::string_view title, const Histogram& h) {
  fmt::print(out, "{} (bin width {}, {} records)\n", title, h.bin_width, h.total);
  for (const auto& [start, count] : h.bins) {
    fmt::print(out, "  [{:>6}, {:>6})  {:>7}\n", start, start + h.bin_width, count);
  }
  if (h.total) {
    fmt::print(out, "  min {}  max {}  mean {:.2f}  median {:.1f}\n", h.summary.min,
               h.summary.max, h.summary.mean, h.summary.median);
  }
}

int run_stats(const StatsOptions& s, const CommonOptions& o) {
  const io::Corpus corpus = load(s.corpus, o, false);
  warn_reports(corpus);
  const TokenizationIndex index = tokenizations_for(corpus.records, o);
  const Histogram lengths = length_histogram(corpus.records, index, s.bin_width, s.context_limit);
  std::vector<LabeledText> labeled;
  for (const auto& r : corpus.records) {
    if (r.label) labeled.push_back(r);
  }
  const Histogram bounds =
      boundary_histogram(labeled, index, s.bin_width, o.segmentation(), s.early_limit);

  Output out(o.output);
  if (s.json) {
    nlohmann::ordered_json j;
    j["mode"] = std::string(to_string(o.segmentation()));
    j["tokenization"] = tokenization_source(o);
    j["records"] = corpus.records.size();
    j["length"] = io::histogram_json(lengths);
    j["boundary"] = io::histogram_json(bounds);
    out.stream() << j.dump(2) << '\n';
  } else {
    fmt::print(out.stream(), "tokenization: {}\n", tokenization_source(o));
    print_histogram(out.stream(), "subtoken length", lengths);
    fmt::print(out.stream(), "  longer than {}: {}\n", s.context_limit, lengths.limit_count);
    print_histogram(out.stream(), "boundary subtoken", bounds);
    fmt::print(out.stream(), "  before {}: {} ({:.1f}%)\n", s.early_limit, bounds.limit_count,
               100.0 * bounds.fraction_within_limit());
  }
  out.close();
  for (const auto& e : bounds.errors) fmt::print(stderr, "{}: {}\n", e.id, e.message);
  return bounds.errors.empty() ? 0 : kExitData;
}

// augment ---------------------------------------------------------------

struct AugmentOptions {
  std::string corpus;
  AugmentConfig config;
};

int run_augment(AugmentOptions a, const CommonOptions& o) {
  const io::Corpus corpus = load(a.corpus, o, true);
  warn_reports(corpus);
  std::vector<LabeledText> usable;
  for (std::size_t i = 0, r = 0; i < corpus.records.size(); ++i) {
    const bool bad = r < corpus.reports.size() && corpus.reports[r].id == corpus.records[i].id &&
                     corpus.reports[r].has_errors();
    if (r < corpus.reports.size() && corpus.reports[r].id == corpus.records[i].id) ++r;
    if (bad) {
      fmt::print(stderr, "{}: skipped (invalid record)\n", corpus.records[i].id);
    } else {
      usable.push_back(corpus.records[i]);
    }
  }
  a.config.seed = o.seed;
  a.config.mode = o.segmentation();
  const AugmentResult result = generate_corpus(usable, a.config);
  for (const auto& s : result.skipped) fmt::print(stderr, "{}: skipped ({})\n", s.id, s.reason);
  Output out(o.output);
  io::write_augmented(result.records, out.stream());
  out.close();
  fmt::print(stderr, "{} sources, {} windows, {} skipped\n", usable.size(),
             result.records.size(), result.skipped.size());
  return 0;
}

// align -----------------------------------------------------------------

struct AlignOptions {
  std::string corpus;
  std::string from_subtokens;
};

int run_align(const AlignOptions& a, const CommonOptions& o) {
  const bool to_words = !a.from_subtokens.empty();
  const io::Corpus corpus = load(a.corpus, o, !to_words);
  const TokenizationIndex index = tokenizations_for(corpus.records, o);
  std::map<std::string, const LabeledText*> by_id;
  for (const auto& r : corpus.records) by_id.emplace(r.id, &r);

  auto tokens_of = [&](const std::string& id) -> const Tokenization& {
    auto it = index.find(id);
    if (it == index.end()) throw Error(ErrorCode::kMissingTokenization, "no tokenization for " + id);
    return it->second;
  };

  Output out(o.output);
  std::size_t failures = 0;
  if (to_words) {
    // Subtoken-index predictions mapped back to word labels.
    const auto preds = io::read_predictions(std::filesystem::path(a.from_subtokens));
    std::vector<PredictionRecord> mapped;
    for (const auto& p : preds) {
      auto it = by_id.find(p.id);
      if (it == by_id.end()) throw Error(ErrorCode::kUnknownId, "prediction for unknown id " + p.id);
      try {
        const WordMap words = segment_words(it->second->text, o.segmentation());
        const WordLabel w = subtoken_to_word_label(words, tokens_of(p.id), p.predicted_label);
        if (w.clamped) fmt::print(stderr, "{}: subtoken {} after last word, clamped\n", p.id, p.predicted_label);
        mapped.push_back(PredictionRecord{p.id, w.word});
      } catch (const Error& e) {
        if (e.code() == ErrorCode::kMissingTokenization) throw;
        fmt::print(stderr, "{}: {}\n", p.id, e.what());
        ++failures;
      }
    }
    io::write_predictions(mapped, out.stream());
  } else {
    for (const auto& r : corpus.records) {
      const Tokenization& tok = tokens_of(r.id);
      try {
        const WordMap words = segment_words(r.text, o.segmentation());
        const std::size_t sub = word_label_to_boundary_subtoken(words, *r.label, tok);
        nlohmann::ordered_json j;
        j["id"] = r.id;
        j["label"] = *r.label;
        j["boundary_subtoken"] = sub;
        j["subtoken_count"] = tok.size();
        j["mode"] = std::string(to_string(o.segmentation()));
        out.stream() << j.dump() << '\n';
      } catch (const Error& e) {
        fmt::print(stderr, "{}: {}\n", r.id, e.what());
        ++failures;
      }
    }
  }
  out.close();
  return failures ? kExitData : 0;
}

// score -----------------------------------------------------------------

struct ScoreCliOptions {
  std::string gold;
  std::string predictions;
  std::uint64_t threshold = 100;
  std::string group_by;
  bool json = false;
};

int run_score(const ScoreCliOptions& s, const CommonOptions& o) {
  const io::Corpus gold = load(s.gold, o, true);
  const auto preds = io::read_predictions(std::filesystem::path(s.predictions));
  ScoreOptions options;
  options.threshold = s.threshold;
  options.mode = o.segmentation();
  if (s.group_by == "domain") options.group_by = GroupBy::kDomain;
  if (s.group_by == "generator") options.group_by = GroupBy::kGenerator;
  const ScoreReport report = compute_mae(preds, gold.records, options);

  Output out(o.output);
  if (s.json) {
    auto j = io::score_report_json(report);
    j["mode"] = std::string(to_string(o.segmentation()));
    out.stream() << j.dump(2) << '\n';
  } else {
    fmt::print(out.stream(), "MAE {:.4f} over {} records ({} exact)\n", report.mae, report.count,
               report.exact);
    for (const auto& [group, g] : report.per_group) {
      fmt::print(out.stream(), "  {:<20} MAE {:>10.4f}  n={}\n", group, g.mae, g.count);
    }
    fmt::print(out.stream(), "errors above {}: {}\n", report.threshold, report.big_errors.size());
    for (const auto& e : report.big_errors) {
      fmt::print(out.stream(), "  {}\t{}\n", e.id, e.distance);
    }
    if (!report.out_of_range_ids.empty()) {
      fmt::print(out.stream(), "predictions past the last word: {}\n",
                 report.out_of_range_ids.size());
    }
  }
  out.close();
  return 0;
}

// anomalies -------------------------------------------------------------

struct AnomalyOptions {
  std::string corpus;
  AnomalyConfig config;
};

void add_anomaly_flags(CLI::App* cmd, AnomalyConfig& c) {
  cmd->add_option("--min-repeats", c.min_repeats, "Repetition: n-gram occurrences")
      ->capture_default_str();
  cmd->add_option("--window-words", c.window_words, "Repetition: window in words")
      ->capture_default_str();
  cmd->add_option("--min-list-lines", c.min_list_lines, "List loop: consecutive lines")
      ->capture_default_str();
  cmd->add_option("--min-shared-prefix", c.min_shared_prefix, "List loop: shared leading words")
      ->capture_default_str();
  cmd->add_option("--min-json-lines", c.min_json_lines, "JSON blob: JSON-like lines")
      ->capture_default_str();
  cmd->add_option("--min-json-density", c.min_json_density, "JSON blob: fraction of lines")
      ->capture_default_str();
}

int run_anomalies(const AnomalyOptions& a, const CommonOptions& o) {
  const io::Corpus corpus = load(a.corpus, o, false);
  Output out(o.output);
  std::map<std::string, std::size_t> per_kind;
  std::size_t flagged = 0;
  for (const auto& r : corpus.records) {
    const auto spans = detect_anomalies(r.text, a.config);
    for (const auto& s : spans) ++per_kind[std::string(to_string(s.kind))];
    flagged += !spans.empty();
    out.stream() << io::anomaly_line(r.id, spans) << '\n';
  }
  out.close();
  fmt::print(stderr, "{} of {} records flagged", flagged, corpus.records.size());
  for (const auto& [kind, n] : per_kind) fmt::print(stderr, ", {} {}", n, kind);
  fmt::print(stderr, "\n");
  return 0;
}

// baseline --------------------------------------------------------------

struct BaselineOptions {
  std::string corpus;
  std::string strategy = "median";
  std::string fallback = "median";
  std::optional<std::size_t> k;
  std::string train;
  AnomalyConfig config;
};

int run_baseline(const BaselineOptions& b, const CommonOptions& o) {
  const io::Corpus corpus = load(b.corpus, o, false);
  auto constant = [&](const std::string& which) -> baseline::Fallback {
    if (which == "fixed") {
      if (!b.k) throw CLI::ValidationError("--k", "required for the fixed strategy");
      return baseline::Fixed{*b.k};
    }
    if (b.train.empty()) throw CLI::ValidationError("--train", "required for the median strategy");
    return baseline::TrainMedian{load(b.train, o, true).records};
  };
  baseline::Strategy strategy;
  if (b.strategy == "anomaly") {
    strategy = baseline::AnomalyFirst{constant(b.fallback), b.config, o.segmentation()};
  } else {
    std::visit([&](auto&& c) { strategy = c; }, constant(b.strategy));
  }
  const auto preds = baseline_predict(corpus.records, strategy);
  Output out(o.output);
  io::write_predictions(preds, out.stream());
  out.close();
  return 0;
}

int run(int argc, char** argv) {
  CLI::App app{"Tools for locating the human/machine authorship boundary in text corpora"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "boundkit 0.1.0");

  CommonOptions common;
  int status = 0;

  auto* validate = app.add_subcommand("validate", "Check a corpus file against the record rules");
  ValidateOptions vo;
  validate->add_option("corpus", vo.corpus, "Corpus JSONL")->required()->check(CLI::ExistingFile);
  validate->add_flag("--allow-unlabeled", vo.allow_unlabeled, "Accept records without a label");
  validate->add_flag("--json", vo.json, "One JSON report per record with findings");
  add_common(validate, common);
  validate->callback([&] { status = run_validate(vo, common); });

  auto* stats = app.add_subcommand("stats", "Subtoken length and boundary position histograms");
  StatsOptions so;
  stats->add_option("corpus", so.corpus, "Corpus JSONL")->required()->check(CLI::ExistingFile);
  stats->add_option("--bin-width", so.bin_width, "Histogram bin width")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  stats->add_option("--context-limit", so.context_limit, "Encoder context in subtokens")
      ->capture_default_str();
  stats->add_option("--early-limit", so.early_limit, "Early boundary cutoff in subtokens")
      ->capture_default_str();
  stats->add_flag("--json", so.json, "JSON output");
  add_common(stats, common);
  stats->callback([&] { status = run_stats(so, common); });

  auto* augment = app.add_subcommand("augment", "Sample sentence windows around each boundary");
  AugmentOptions ao;
  augment->add_option("corpus", ao.corpus, "Labeled corpus JSONL")
      ->required()
      ->check(CLI::ExistingFile);
  augment->add_option("--per-record", ao.config.per_record, "Windows per source record")
      ->capture_default_str();
  augment->add_option("--max-left", ao.config.max_left, "Most sentences kept before the boundary")
      ->capture_default_str();
  augment->add_option("--max-right", ao.config.max_right, "Most sentences kept after the boundary")
      ->capture_default_str();
  augment->add_option("--min-human", ao.config.min_human_words, "Fewest human words in a window")
      ->capture_default_str();
  augment->add_option("--min-machine", ao.config.min_machine_words,
                      "Fewest machine words in a window")
      ->capture_default_str();
  augment->add_flag("--full-prefix", ao.config.full_prefix, "Keep the whole human prefix");
  augment->add_flag("--no-ellipsis", [&](std::int64_t) {
    ao.config.sentences.ellipsis_terminates = false;
  }, "Do not end sentences at U+2026");
  augment->add_option("--threads", ao.config.threads, "Worker threads, 0 for all cores")
      ->capture_default_str();
  add_common(augment, common);
  augment->callback([&] { status = run_augment(ao, common); });

  auto* align = app.add_subcommand("align", "Map word labels to boundary subtokens and back");
  AlignOptions alo;
  align->add_option("corpus", alo.corpus, "Corpus JSONL")->required()->check(CLI::ExistingFile);
  align->add_option("--from-subtokens", alo.from_subtokens,
                    "Predictions holding subtoken indices; emit word-label predictions")
      ->check(CLI::ExistingFile);
  add_common(align, common);
  align->callback([&] { status = run_align(alo, common); });

  auto* score = app.add_subcommand("score", "Mean absolute error of predictions against gold");
  ScoreCliOptions sco;
  score->add_option("gold", sco.gold, "Gold corpus JSONL")->required()->check(CLI::ExistingFile);
  score->add_option("predictions", sco.predictions, "Predictions JSONL")
      ->required()
      ->check(CLI::ExistingFile);
  score->add_option("--threshold", sco.threshold, "List errors larger than this")
      ->capture_default_str();
  score->add_option("--group-by", sco.group_by, "Per-group MAE")
      ->check(CLI::IsMember({"domain", "generator"}));
  score->add_flag("--json", sco.json, "JSON output");
  add_common(score, common);
  score->callback([&] { status = run_score(sco, common); });

  auto* anomalies = app.add_subcommand("anomalies", "Per-record anomaly spans as JSONL");
  AnomalyOptions ano;
  anomalies->add_option("corpus", ano.corpus, "Corpus JSONL")
      ->required()
      ->check(CLI::ExistingFile);
  add_anomaly_flags(anomalies, ano.config);
  add_common(anomalies, common);
  anomalies->callback([&] { status = run_anomalies(ano, common); });

  auto* base = app.add_subcommand("baseline", "Constant and anomaly-first predictions");
  BaselineOptions bo;
  base->add_option("corpus", bo.corpus, "Corpus JSONL")->required()->check(CLI::ExistingFile);
  base->add_option("--strategy", bo.strategy, "fixed, median or anomaly")
      ->check(CLI::IsMember({"fixed", "median", "anomaly"}))
      ->capture_default_str();
  base->add_option("--fallback", bo.fallback, "Constant used by the anomaly strategy")
      ->check(CLI::IsMember({"fixed", "median"}))
      ->capture_default_str();
  base->add_option("--k", bo.k, "Label for the fixed strategy");
  base->add_option("--train", bo.train, "Training corpus for the median")
      ->check(CLI::ExistingFile);
  add_anomaly_flags(base, bo.config);
  add_common(base, common);
  base->callback([&] { status = run_baseline(bo, common); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const boundkit::Error& e) {
    fmt::print(stderr, "boundkit: {}: {}\n", boundkit::to_string(e.code()), e.what());
    return kExitData;
  } catch (const std::exception& e) {
    fmt::print(stderr, "boundkit: {}\n", e.what());
    return kExitData;
  }
}
