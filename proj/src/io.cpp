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

#include "boundkit/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <unordered_set>

#include "boundkit/error.hpp"

namespace boundkit::io {
namespace {

using json = nlohmann::ordered_json;

constexpr std::string_view kLogicalFields[] = {"id", "text", "label", "domain", "generator"};

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::kParse, "line " + std::to_string(line) + ": " + what);
}

bool blank(std::string_view line) {
  return line.find_first_not_of(" \t\r\n") == std::string_view::npos;
}

json parse_object(const std::string& line, std::size_t line_no) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::parse_error& e) {
    parse_error(line_no, e.what());
  }
  if (!j.is_object()) parse_error(line_no, "expected a JSON object");
  return j;
}

// Ids may be strings or integers in the wild; integers are kept as decimal.
std::string read_id(const json& j, const std::string& key, std::size_t line_no) {
  const auto it = j.find(key);
  if (it == j.end()) parse_error(line_no, "missing \"" + key + "\"");
  if (it->is_string()) return it->get<std::string>();
  if (it->is_number_integer()) return std::to_string(it->get<std::int64_t>());
  parse_error(line_no, "\"" + key + "\" must be a string or integer");
}

std::optional<std::size_t> read_count(const json& j, const std::string& key,
                                      std::size_t line_no) {
  const auto it = j.find(key);
  if (it == j.end() || it->is_null()) return std::nullopt;
  if (!it->is_number_integer()) parse_error(line_no, "\"" + key + "\" must be an integer");
  const auto v = it->get<std::int64_t>();
  if (v < 0) parse_error(line_no, "\"" + key + "\" must be non-negative");
  return static_cast<std::size_t>(v);
}

std::optional<std::string> read_tag(const json& j, const std::string& key, std::size_t line_no) {
  const auto it = j.find(key);
  if (it == j.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) parse_error(line_no, "\"" + key + "\" must be a string");
  return it->get<std::string>();
}

Text read_text(const json& j, const std::string& key, std::size_t line_no) {
  const auto it = j.find(key);
  if (it == j.end() || !it->is_string()) parse_error(line_no, "missing string \"" + key + "\"");
  try {
    return decode_utf8(it->get_ref<const std::string&>());
  } catch (const Error& e) {
    throw Error(ErrorCode::kInvalidUtf8, "line " + std::to_string(line_no) + ": " + e.what());
  }
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  return in;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
  return out;
}

void finish(std::ostream& out, const std::string& what) {
  out.flush();
  if (!out) throw Error(ErrorCode::kIo, "write failed: " + what);
}

std::string dump(const json& j) {
  return j.dump(-1, ' ', false, json::error_handler_t::strict);
}

void add_tags(json& j, const std::optional<std::string>& domain,
              const std::optional<std::string>& generator) {
  if (domain) j["domain"] = *domain;
  if (generator) j["generator"] = *generator;
}

}  // namespace

FieldMap FieldMap::parse(std::string_view spec) {
  FieldMap map;
  std::size_t pos = 0;
  while (pos < spec.size()) {
    std::size_t comma = spec.find(',', pos);
    if (comma == std::string_view::npos) comma = spec.size();
    const std::string_view item = spec.substr(pos, comma - pos);
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0 || eq + 1 == item.size()) {
      throw Error(ErrorCode::kParse, "field map entry '" + std::string(item) +
                                         "' must look like field=key");
    }
    const std::string_view logical = item.substr(0, eq);
    if (std::find(std::begin(kLogicalFields), std::end(kLogicalFields), logical) ==
        std::end(kLogicalFields)) {
      throw Error(ErrorCode::kParse, "unknown field '" + std::string(logical) + "' in field map");
    }
    map.renames_[std::string(logical)] = std::string(item.substr(eq + 1));
    pos = comma + 1;
  }
  return map;
}

const std::string& FieldMap::key(std::string_view logical) const {
  static const std::map<std::string, std::string, std::less<>> identity = [] {
    std::map<std::string, std::string, std::less<>> m;
    for (auto f : kLogicalFields) m.emplace(std::string(f), std::string(f));
    return m;
  }();
  if (auto it = renames_.find(logical); it != renames_.end()) return it->second;
  return identity.find(logical)->second;
}

Corpus read_corpus(std::istream& in, const ReadOptions& options) {
  const auto& f = options.fields;
  Corpus corpus;
  std::unordered_set<std::string> ids;
  std::string line;
  for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
    if (blank(line)) continue;
    const json j = parse_object(line, line_no);
    LabeledText r;
    r.id = read_id(j, f.key("id"), line_no);
    r.text = read_text(j, f.key("text"), line_no);
    r.label = read_count(j, f.key("label"), line_no);
    r.domain_tag = read_tag(j, f.key("domain"), line_no);
    r.generator_tag = read_tag(j, f.key("generator"), line_no);
    if (options.require_labels && !r.label) {
      throw Error(ErrorCode::kMissingLabel,
                  "line " + std::to_string(line_no) + ": record " + r.id + " has no label");
    }
    if (!ids.insert(r.id).second) {
      throw Error(ErrorCode::kDuplicateId,
                  "line " + std::to_string(line_no) + ": duplicate id " + r.id);
    }
    ValidationReport report = validate_record(r, options.mode, options.require_labels);
    if (!report.ok()) corpus.reports.push_back(std::move(report));
    corpus.records.push_back(std::move(r));
  }
  if (in.bad()) throw Error(ErrorCode::kIo, "read failed");
  return corpus;
}

Corpus read_corpus(const std::filesystem::path& path, const ReadOptions& options) {
  auto in = open_in(path);
  try {
    return read_corpus(in, options);
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

std::string corpus_line(const LabeledText& record) {
  json j;
  j["id"] = record.id;
  j["text"] = encode_utf8(record.text);
  if (record.label) j["label"] = *record.label;
  add_tags(j, record.domain_tag, record.generator_tag);
  return dump(j);
}

void write_corpus(const std::vector<LabeledText>& records, std::ostream& out) {
  for (const auto& r : records) out << corpus_line(r) << '\n';
  finish(out, "corpus");
}

std::string prediction_line(const PredictionRecord& pred) {
  json j;
  j["id"] = pred.id;
  j["label"] = pred.predicted_label;
  return dump(j);
}

std::vector<PredictionRecord> read_predictions(std::istream& in) {
  std::vector<PredictionRecord> preds;
  std::string line;
  for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
    if (blank(line)) continue;
    const json j = parse_object(line, line_no);
    PredictionRecord p;
    p.id = read_id(j, "id", line_no);
    const auto label = read_count(j, "label", line_no);
    if (!label) parse_error(line_no, "missing \"label\"");
    p.predicted_label = *label;
    preds.push_back(std::move(p));
  }
  return preds;
}

std::vector<PredictionRecord> read_predictions(const std::filesystem::path& path) {
  auto in = open_in(path);
  try {
    return read_predictions(in);
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

void write_predictions(const std::vector<PredictionRecord>& preds, std::ostream& out) {
  for (const auto& p : preds) out << prediction_line(p) << '\n';
  finish(out, "predictions");
}

void write_predictions(const std::vector<PredictionRecord>& preds,
                       const std::filesystem::path& path) {
  auto out = open_out(path);
  write_predictions(preds, out);
}

std::string augmented_line(const AugmentedRecord& record) {
  json j;
  j["id"] = record.id;
  j["text"] = encode_utf8(record.text);
  j["label"] = record.label;
  add_tags(j, record.domain_tag, record.generator_tag);
  j["source_id"] = record.provenance.source_id;
  j["window"] = json::array({record.provenance.window.start, record.provenance.window.end});
  j["left_k"] = record.provenance.left_k;
  j["right_k"] = record.provenance.right_k;
  j["seed"] = record.provenance.seed;
  j["mode"] = std::string(to_string(record.mode));
  return dump(j);
}

void write_augmented(const std::vector<AugmentedRecord>& records, std::ostream& out) {
  for (const auto& r : records) out << augmented_line(r) << '\n';
  finish(out, "augmented records");
}

void write_augmented(const std::vector<AugmentedRecord>& records,
                     const std::filesystem::path& path) {
  auto out = open_out(path);
  write_augmented(records, out);
}

std::vector<AugmentedRecord> read_augmented(std::istream& in) {
  std::vector<AugmentedRecord> records;
  std::string line;
  for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
    if (blank(line)) continue;
    const json j = parse_object(line, line_no);
    AugmentedRecord r;
    r.id = read_id(j, "id", line_no);
    r.text = read_text(j, "text", line_no);
    const auto label = read_count(j, "label", line_no);
    if (!label) parse_error(line_no, "missing \"label\"");
    r.label = *label;
    r.domain_tag = read_tag(j, "domain", line_no);
    r.generator_tag = read_tag(j, "generator", line_no);
    r.provenance.source_id = read_id(j, "source_id", line_no);
    const auto win = j.find("window");
    if (win == j.end() || !win->is_array() || win->size() != 2 ||
        !(*win)[0].is_number_unsigned() || !(*win)[1].is_number_unsigned()) {
      parse_error(line_no, "\"window\" must be [start, end]");
    }
    r.provenance.window = CharSpan{(*win)[0].get<std::size_t>(), (*win)[1].get<std::size_t>()};
    r.provenance.left_k = read_count(j, "left_k", line_no).value_or(0);
    r.provenance.right_k = read_count(j, "right_k", line_no).value_or(0);
    const auto seed = j.find("seed");
    if (seed != j.end() && seed->is_number_unsigned()) r.provenance.seed = seed->get<std::uint64_t>();
    const auto mode = parse_segmentation_mode(read_tag(j, "mode", line_no).value_or("space"));
    if (!mode) parse_error(line_no, "unknown \"mode\"");
    r.mode = *mode;
    records.push_back(std::move(r));
  }
  return records;
}

std::string tokenization_line(const Tokenization& tok) {
  json j;
  j["id"] = tok.record_ref;
  json spans = json::array();
  for (const auto& s : tok.spans) spans.push_back(json::array({s.start, s.end}));
  j["spans"] = std::move(spans);
  return dump(j);
}

TokenizationIndex read_tokenizations(std::istream& in) {
  TokenizationIndex index;
  std::string line;
  for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
    if (blank(line)) continue;
    const json j = parse_object(line, line_no);
    Tokenization tok;
    tok.record_ref = read_id(j, "id", line_no);
    tok.source = TokenizationSource::kExternalSidecar;
    const auto spans = j.find("spans");
    if (spans == j.end() || !spans->is_array()) parse_error(line_no, "missing array \"spans\"");
    tok.spans.reserve(spans->size());
    for (const auto& s : *spans) {
      if (!s.is_array() || s.size() != 2 || !s[0].is_number_unsigned() ||
          !s[1].is_number_unsigned()) {
        parse_error(line_no, "each span must be [start, end] with non-negative integers");
      }
      tok.spans.push_back(CharSpan{s[0].get<std::size_t>(), s[1].get<std::size_t>()});
    }
    std::string id = tok.record_ref;
    if (!index.emplace(std::move(id), std::move(tok)).second) {
      throw Error(ErrorCode::kDuplicateId,
                  "line " + std::to_string(line_no) + ": duplicate tokenization id");
    }
  }
  return index;
}

TokenizationIndex read_tokenizations(const std::filesystem::path& path) {
  auto in = open_in(path);
  try {
    return read_tokenizations(in);
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

std::string anomaly_line(std::string_view id, const std::vector<AnomalySpan>& spans) {
  json j;
  j["id"] = std::string(id);
  json list = json::array();
  for (const auto& s : spans) {
    json a;
    a["kind"] = std::string(to_string(s.kind));
    a["start"] = s.span.start;
    a["end"] = s.span.end;
    a["score"] = s.score;
    list.push_back(std::move(a));
  }
  j["anomalies"] = std::move(list);
  return dump(j);
}

nlohmann::ordered_json score_report_json(const ScoreReport& report) {
  json j;
  j["count"] = report.count;
  j["mae"] = report.mae;
  j["abs_error_sum"] = report.abs_error_sum;
  j["exact"] = report.exact;
  j["threshold"] = report.threshold;
  json big = json::array();
  for (const auto& e : report.big_errors) big.push_back(json{{"id", e.id}, {"distance", e.distance}});
  j["big_error_count"] = report.big_errors.size();
  j["big_errors"] = std::move(big);
  j["out_of_range_ids"] = report.out_of_range_ids;
  json groups = json::object();
  for (const auto& [key, g] : report.per_group) {
    groups[key] = json{{"mae", g.mae}, {"count", g.count}};
  }
  j["per_group"] = std::move(groups);
  return j;
}

nlohmann::ordered_json histogram_json(const Histogram& h) {
  json j;
  j["bin_width"] = h.bin_width;
  j["total"] = h.total;
  json bins = json::array();
  for (const auto& [start, count] : h.bins) bins.push_back(json{{"start", start}, {"count", count}});
  j["bins"] = std::move(bins);
  j["summary"] = json{{"min", h.summary.min},
                      {"max", h.summary.max},
                      {"mean", h.summary.mean},
                      {"median", h.summary.median}};
  j["limit"] = h.limit;
  j["limit_count"] = h.limit_count;
  if (!h.over_limit_ids.empty()) j["over_limit_ids"] = h.over_limit_ids;
  json errors = json::array();
  for (const auto& e : h.errors) errors.push_back(json{{"id", e.id}, {"error", e.message}});
  j["errors"] = std::move(errors);
  return j;
}

nlohmann::ordered_json validation_json(const ValidationReport& report) {
  json j;
  j["id"] = report.id;
  j["word_count"] = report.word_count;
  json list = json::array();
  for (const auto& v : report.violations) {
    list.push_back(json{{"kind", std::string(to_string(v.kind))},
                        {"severity", v.severity == Severity::kError ? "error" : "warning"},
                        {"message", v.message}});
  }
  j["violations"] = std::move(list);
  return j;
}

}  // namespace boundkit::io
