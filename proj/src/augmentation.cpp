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

#include "boundkit/augmentation.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <set>
#include <string>
#include <thread>

namespace boundkit {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xCBF29CE484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001B3ull;
  }
  return h;
}

// Uniform integer in [0, n). std::uniform_int_distribution is not specified
// bit-for-bit across standard libraries; this is.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % n;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

std::size_t words_starting_before(const WordMap& map, std::size_t pos) {
  const auto it = std::partition_point(map.words.begin(), map.words.end(),
                                       [pos](const Word& w) { return w.span.start < pos; });
  return static_cast<std::size_t>(it - map.words.begin());
}

}  // namespace

LabeledText AugmentedRecord::as_labeled() const {
  return LabeledText{id, text, label, domain_tag, generator_tag};
}

CharSpan window_span(const ReconciledText& rec, std::size_t source_label,
                     std::size_t left_k, std::size_t right_k) {
  const std::size_t b = locate_boundary_sentence(rec, source_label);
  const std::size_t last = rec.sentences.size() - 1;
  const std::size_t lo = b >= left_k ? b - left_k : 0;
  const std::size_t hi = std::min(last, b + std::min(right_k, last));

  const auto& words = rec.word_map;
  const CharSpan boundary = words.words[source_label].span;
  CharSpan win{std::min(rec.sentences[lo].span.start, boundary.start),
               std::max(rec.sentences[hi].span.end, boundary.end)};

  // Outward snap: a window edge inside a word moves to that word's edge.
  if (auto w = word_at_or_after(words, win.start)) {
    win.start = std::min(win.start, words.words[*w].span.start);
  }
  if (auto w = word_at_or_after(words, win.end - 1)) {
    const CharSpan s = words.words[*w].span;
    if (s.contains(win.end - 1)) win.end = std::max(win.end, s.end);
  }
  return win;
}

WindowResult try_augment_record(const LabeledText& source, const ReconciledText& rec,
                                std::size_t source_label, const WindowSpec& spec,
                                std::uint64_t seed) {
  WindowResult result;
  const WordMap& words = rec.word_map;
  if (source_label >= words.total_count() || rec.sentences.empty()) {
    result.error = ErrorCode::kLabelOutOfRange;
    return result;
  }
  const CharSpan win = window_span(rec, source_label, spec.left_k, spec.right_k);
  const std::size_t before = words_starting_before(words, win.start);
  const std::size_t inside = words_starting_before(words, win.end) - before;
  const std::size_t label = source_label - before;
  if (label < spec.min_human_words) {
    result.error = ErrorCode::kWindowLacksHumanPrefix;
    return result;
  }
  if (inside - label < spec.min_machine_words) {
    result.error = ErrorCode::kWindowLacksMachineSuffix;
    return result;
  }

  AugmentedRecord out;
  out.id = source.id + "#" + std::to_string(win.start) + "-" + std::to_string(win.end) +
           "@s" + std::to_string(seed);
  out.text = source.text.substr(win.start, win.size());
  out.label = label;
  out.domain_tag = source.domain_tag;
  out.generator_tag = source.generator_tag;
  out.mode = words.mode;
  out.provenance = Provenance{source.id, win, spec.left_k, spec.right_k, seed};
  result.record = std::move(out);
  return result;
}

AugmentedRecord augment_record(const LabeledText& source, const ReconciledText& rec,
                               std::size_t source_label, const WindowSpec& spec,
                               std::uint64_t seed) {
  WindowResult r = try_augment_record(source, rec, source_label, spec, seed);
  if (!r) {
    throw Error(r.error, std::string(to_string(r.error)) + " for record " + source.id +
                             " (left_k=" + std::to_string(spec.left_k) +
                             ", right_k=" + std::to_string(spec.right_k) + ")");
  }
  return std::move(*r.record);
}

std::uint64_t record_seed(std::uint64_t global_seed, std::string_view id) {
  return splitmix64(fnv1a64(id) ^ splitmix64(global_seed));
}

AugmentResult augment_one(const LabeledText& record, const AugmentConfig& config) {
  AugmentResult result;
  auto skip = [&](std::string reason) {
    result.skipped.push_back(SkippedRecord{record.id, std::move(reason)});
    return result;
  };
  if (!record.label) return skip("unlabeled");
  const ValidationReport report = validate_record(record, config.mode);
  if (report.has_errors()) return skip(report.violations.front().message);

  const ReconciledText rec = reconcile(record, config.mode, config.sentences);
  const std::size_t label = *record.label;
  if (label >= rec.word_map.total_count() || rec.sentences.empty()) {
    return skip("boundary word outside the text");
  }
  const std::size_t b = locate_boundary_sentence(rec, label);
  const std::size_t last = rec.sentences.size() - 1;

  // Left/right counts past the text edge give the same window as the edge
  // itself, so the grid stops there.
  std::vector<std::pair<std::size_t, std::size_t>> grid;
  const std::size_t left_lo = config.full_prefix ? b : 0;
  const std::size_t left_hi = config.full_prefix ? b : std::min(config.max_left, b);
  const std::size_t right_hi = std::min(config.max_right, last - b);
  for (std::size_t l = left_lo; l <= left_hi; ++l) {
    for (std::size_t r = 0; r <= right_hi; ++r) grid.emplace_back(l, r);
  }

  // Sampling without replacement over (left_k, right_k): the first draw is
  // uniform on the grid, rejected windows move on to the next draw.
  std::mt19937_64 rng(record_seed(config.seed, record.id));
  const WindowSpec base{0, 0, config.min_human_words, config.min_machine_words};
  std::set<CharSpan> seen;
  for (std::size_t i = 0; i < grid.size() && result.records.size() < config.per_record; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(uniform_below(rng, grid.size() - i));
    std::swap(grid[i], grid[j]);
    WindowSpec spec = base;
    spec.left_k = grid[i].first;
    spec.right_k = grid[i].second;
    WindowResult w = try_augment_record(record, rec, label, spec, config.seed);
    if (!w || !seen.insert(w.record->provenance.window).second) continue;
    if (validate_record(w.record->as_labeled(), config.mode).has_errors()) continue;
    result.records.push_back(std::move(*w.record));
  }
  if (result.records.empty()) return skip("no window satisfies the word minimums");
  return result;
}

AugmentResult generate_corpus(const std::vector<LabeledText>& corpus,
                              const AugmentConfig& config) {
  std::vector<AugmentResult> per_record(corpus.size());
  std::size_t threads = config.threads == 0 ? std::thread::hardware_concurrency()
                                            : config.threads;
  threads = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(corpus.size(), 1));

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < corpus.size(); i = next++) {
      per_record[i] = augment_one(corpus[i], config);
    }
  };
  if (threads == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work);
  }

  AugmentResult out;
  for (auto& r : per_record) {
    std::move(r.records.begin(), r.records.end(), std::back_inserter(out.records));
    std::move(r.skipped.begin(), r.skipped.end(), std::back_inserter(out.skipped));
  }
  return out;
}

}  // namespace boundkit
