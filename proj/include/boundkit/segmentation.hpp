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
#include <optional>
#include <string>
#include <vector>

#include "boundkit/corpus_model.hpp"

namespace boundkit {

struct SentenceSpan {
  std::size_t index = 0;
  // Terminator punctuation is inside the span; the whitespace between two
  // sentences is not.
  CharSpan span;

  friend bool operator==(const SentenceSpan&, const SentenceSpan&) = default;
};

struct SentenceOptions {
  // U+2026 HORIZONTAL ELLIPSIS counts as a terminator alongside . ! ?
  bool ellipsis_terminates = true;
};

// A sentence ends after a maximal run of terminators that is followed by
// whitespace or the end of the text. Abbreviations are not special-cased, so
// "Dr. Smith" splits after "Dr.".
std::vector<SentenceSpan> split_sentences(TextView text,
                                          SentenceOptions options = {});

enum class DiscrepancyKind : std::uint8_t {
  // A word reaches into inter-sentence whitespace that a per-sentence split
  // would drop (e.g. the "\n" of "\nThere" in SpaceOnly mode).
  kLostWhitespace,
  // A word spans two or more sentences because the gap between them holds no
  // separator of the active mode (terminator followed by a line break only).
  kNewlineJoinedSequence,
};

std::string_view to_string(DiscrepancyKind kind);

struct Discrepancy {
  DiscrepancyKind kind;
  CharSpan span;
  std::size_t word = 0;

  friend bool operator==(const Discrepancy&, const Discrepancy&) = default;
};

// Sentence-level and whole-text views of one record, agreed on a single set of
// word spans. The text itself is never edited.
struct ReconciledText {
  std::string record_ref;
  std::vector<SentenceSpan> sentences;
  WordMap word_map;
  // home_sentence[w]: the sentence word w is attributed to, i.e. the first
  // sentence ending after the word's start (the last sentence for trailing
  // whitespace words). nullopt only when the text has no sentences at all.
  std::vector<std::optional<std::size_t>> home_sentence;
  // words_per_sentence[s]: number of words attributed to sentence s.
  std::vector<std::size_t> words_per_sentence;
  std::size_t unattributed_words = 0;
  std::vector<Discrepancy> discrepancies;

  friend bool operator==(const ReconciledText&, const ReconciledText&) = default;
};

ReconciledText reconcile(TextView text, SegmentationMode mode,
                         SentenceOptions options = {});
ReconciledText reconcile(const LabeledText& record, SegmentationMode mode,
                         SentenceOptions options = {});

// Sentence containing the start of word[label]; for a word starting in a gap,
// the sentence it is attributed to. Throws Error(kLabelOutOfRange).
std::size_t locate_boundary_sentence(const ReconciledText& rec,
                                     std::size_t label);

}  // namespace boundkit
