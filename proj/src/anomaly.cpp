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

#include "boundkit/anomaly.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

namespace boundkit {
namespace {

struct Line {
  CharSpan span;  // trimmed of surrounding whitespace; may be empty
};

std::vector<Line> split_lines(TextView text) {
  std::vector<Line> lines;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size() && text[i] != U'\n') continue;
    std::size_t a = start;
    std::size_t b = i;
    while (a < b && is_unicode_whitespace(text[a])) ++a;
    while (b > a && is_unicode_whitespace(text[b - 1])) --b;
    lines.push_back(Line{CharSpan{a, b}});
    start = i + 1;
  }
  return lines;
}

char32_t ascii_lower(char32_t c) { return (c >= U'A' && c <= U'Z') ? c + 32 : c; }

bool is_ascii_punct(char32_t c) {
  return c < 0x80 && classify(c) == CharClass::kPunct;
}

// Lowercased, with surrounding ASCII punctuation stripped unless nothing
// else is left.
Text normalize_word(TextView word) {
  std::size_t a = 0;
  std::size_t b = word.size();
  while (a < b && is_ascii_punct(word[a])) ++a;
  while (b > a && is_ascii_punct(word[b - 1])) --b;
  if (a == b) a = 0, b = word.size();
  Text out;
  out.reserve(b - a);
  for (std::size_t i = a; i < b; ++i) out.push_back(ascii_lower(word[i]));
  return out;
}

double capped_ratio(std::size_t count, std::size_t threshold) {
  return std::min(1.0, static_cast<double>(count) / (2.0 * static_cast<double>(std::max<std::size_t>(threshold, 1))));
}

// Merges overlapping or touching spans of one kind, keeping the max score.
void merge_into(std::vector<AnomalySpan>& out, std::vector<AnomalySpan> spans) {
  std::sort(spans.begin(), spans.end(),
            [](const AnomalySpan& x, const AnomalySpan& y) { return x.span < y.span; });
  std::vector<AnomalySpan> merged;
  for (auto& s : spans) {
    if (!merged.empty() && s.span.start <= merged.back().span.end) {
      merged.back().span.end = std::max(merged.back().span.end, s.span.end);
      merged.back().score = std::max(merged.back().score, s.score);
    } else {
      merged.push_back(s);
    }
  }
  out.insert(out.end(), merged.begin(), merged.end());
}

void detect_triple_quotes(TextView text, std::vector<AnomalySpan>& out) {
  for (std::size_t i = 0; i + 3 <= text.size();) {
    if (text[i] == U'"' && text[i + 1] == U'"' && text[i + 2] == U'"') {
      out.push_back(AnomalySpan{AnomalyKind::kTripleQuote, CharSpan{i, i + 3}, 1.0});
      i += 3;
    } else {
      ++i;
    }
  }
}

void detect_repetition(TextView text, const AnomalyConfig& config,
                       std::vector<AnomalySpan>& out) {
  if (config.min_repeats == 0 || config.min_ngram == 0) return;
  const WordMap words = segment_words(text, SegmentationMode::kAllWhitespace);
  const std::size_t count = words.total_count();
  std::vector<Text> norm;
  norm.reserve(count);
  for (const Word& w : words.words) norm.push_back(normalize_word(word_text(text, w)));

  std::vector<AnomalySpan> found;
  for (std::size_t n = config.min_ngram; n <= config.max_ngram && n <= count; ++n) {
    // n-gram key -> word positions, in text order.
    std::unordered_map<Text, std::vector<std::size_t>> positions;
    for (std::size_t i = 0; i + n <= count; ++i) {
      Text key = norm[i];
      for (std::size_t k = 1; k < n; ++k) {
        key.push_back(U'\x1F');
        key += norm[i + k];
      }
      positions[std::move(key)].push_back(i);
    }
    for (const auto& [key, pos] : positions) {
      if (pos.size() < config.min_repeats) continue;
      std::size_t lo = 0;
      for (std::size_t hi = 0; hi < pos.size(); ++hi) {
        while (pos[hi] + n - pos[lo] > config.window_words) ++lo;
        const std::size_t repeats = hi - lo + 1;
        if (repeats < config.min_repeats) continue;
        const CharSpan span{words.words[pos[lo]].span.start,
                            words.words[pos[hi] + n - 1].span.end};
        found.push_back(AnomalySpan{AnomalyKind::kRepetition, span,
                                    capped_ratio(repeats, config.min_repeats)});
      }
    }
  }
  merge_into(out, std::move(found));
}

void detect_list_loops(TextView text, const std::vector<Line>& lines,
                       const AnomalyConfig& config, std::vector<AnomalySpan>& out) {
  if (config.min_shared_prefix == 0) return;
  std::vector<std::vector<Text>> line_words(lines.size());
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const TextView body = text.substr(lines[i].span.start, lines[i].span.size());
    for (const Word& w : segment_words(body, SegmentationMode::kAllWhitespace).words) {
      Text word;
      for (char32_t c : word_text(body, w)) word.push_back(ascii_lower(c));
      line_words[i].push_back(std::move(word));
    }
  }

  std::vector<AnomalySpan> found;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::size_t prefix = line_words[i].size();
    if (prefix < config.min_shared_prefix) continue;
    std::size_t j = i + 1;
    for (; j < lines.size(); ++j) {
      const auto& next = line_words[j];
      std::size_t common = 0;
      const std::size_t limit = std::min(prefix, next.size());
      while (common < limit && line_words[i][common] == next[common]) ++common;
      if (common < config.min_shared_prefix) break;
      prefix = common;
    }
    const std::size_t run = j - i;
    if (run >= std::max<std::size_t>(config.min_list_lines, 2)) {
      found.push_back(AnomalySpan{AnomalyKind::kListLoop,
                                  CharSpan{lines[i].span.start, lines[j - 1].span.end},
                                  capped_ratio(run, config.min_list_lines)});
    }
  }
  merge_into(out, std::move(found));
}

bool json_like(TextView line) {
  if (line.empty()) return false;
  switch (line.front()) {
    case U'{': case U'}': case U'[': case U']':
      return true;
    case U'"':
      return line.find(U"\":") != TextView::npos;
    default:
      return false;
  }
}

void detect_json_blobs(TextView text, const std::vector<Line>& lines,
                       const AnomalyConfig& config, std::vector<AnomalySpan>& out) {
  // Up to this many non-JSON lines may sit between two JSON lines of a blob.
  constexpr std::size_t kMaxGap = 2;
  std::vector<std::size_t> hits;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (json_like(text.substr(lines[i].span.start, lines[i].span.size()))) hits.push_back(i);
  }
  std::vector<AnomalySpan> found;
  for (std::size_t a = 0; a < hits.size();) {
    std::size_t b = a;
    while (b + 1 < hits.size() && hits[b + 1] - hits[b] - 1 <= kMaxGap) ++b;
    const std::size_t json_lines = b - a + 1;
    const std::size_t total_lines = hits[b] - hits[a] + 1;
    const double density = static_cast<double>(json_lines) / static_cast<double>(total_lines);
    if (json_lines >= std::max<std::size_t>(config.min_json_lines, 1) &&
        density >= config.min_json_density) {
      found.push_back(AnomalySpan{AnomalyKind::kJsonBlob,
                                  CharSpan{lines[hits[a]].span.start, lines[hits[b]].span.end},
                                  density});
    }
    a = b + 1;
  }
  merge_into(out, std::move(found));
}

}  // namespace

std::string_view to_string(AnomalyKind kind) {
  switch (kind) {
    case AnomalyKind::kRepetition: return "repetition";
    case AnomalyKind::kTripleQuote: return "triple_quote";
    case AnomalyKind::kListLoop: return "list_loop";
    case AnomalyKind::kJsonBlob: return "json_blob";
  }
  return "unknown";
}

std::vector<AnomalySpan> detect_anomalies(TextView text, const AnomalyConfig& config) {
  std::vector<AnomalySpan> out;
  const std::vector<Line> lines = split_lines(text);
  detect_repetition(text, config, out);
  detect_triple_quotes(text, out);
  detect_list_loops(text, lines, config, out);
  detect_json_blobs(text, lines, config, out);
  std::stable_sort(out.begin(), out.end(), [](const AnomalySpan& x, const AnomalySpan& y) {
    if (x.span.start != y.span.start) return x.span.start < y.span.start;
    return x.kind < y.kind;
  });
  return out;
}

}  // namespace boundkit
