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

#include "boundkit/segmentation.hpp"

#include <gtest/gtest.h>

#include "boundkit/error.hpp"
#include "test_support.hpp"

namespace boundkit {
namespace {

using testing::oracle_words;
using testing::U;

std::vector<Text> sentence_texts(const Text& text) {
  std::vector<Text> out;
  for (const auto& s : split_sentences(text)) out.push_back(text.substr(s.span.start, s.span.size()));
  return out;
}

TEST(SplitSentencesTest, BasicTerminators) {
  EXPECT_EQ(sentence_texts(U"Alpha beta. Gamma delta! Eps?"),
            (std::vector<Text>{U"Alpha beta.", U"Gamma delta!", U"Eps?"}));
}

TEST(SplitSentencesTest, TerminatorNeedsFollowingWhitespace) {
  EXPECT_EQ(sentence_texts(U"Hi.There"), (std::vector<Text>{U"Hi.There"}));
}

TEST(SplitSentencesTest, MaximalTerminatorRun) {
  EXPECT_EQ(sentence_texts(U"Wait... ok."), (std::vector<Text>{U"Wait...", U"ok."}));
  EXPECT_EQ(sentence_texts(U"Really?! Yes"), (std::vector<Text>{U"Really?!", U"Yes"}));
}

TEST(SplitSentencesTest, AbbreviationsAreNotSpecialCased) {
  EXPECT_EQ(sentence_texts(U"Dr. Smith came."), (std::vector<Text>{U"Dr.", U"Smith came."}));
}

TEST(SplitSentencesTest, ColonsSemicolonsCommasDoNotTerminate) {
  EXPECT_EQ(sentence_texts(U"a: b; c, d."), (std::vector<Text>{U"a: b; c, d."}));
}

TEST(SplitSentencesTest, EllipsisCharacterIsConfigurable) {
  const Text text = U("Hmm… fine.");
  EXPECT_EQ(split_sentences(text).size(), 2u);
  EXPECT_EQ(split_sentences(text, SentenceOptions{.ellipsis_terminates = false}).size(), 1u);
}

TEST(SplitSentencesTest, GapsExcludeWhitespace) {
  const auto s = split_sentences(U"  One. \n Two  ");
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0].span, (CharSpan{2, 6}));
  EXPECT_EQ(s[1].span, (CharSpan{9, 12}));
  EXPECT_EQ(s[1].index, 1u);
}

TEST(SplitSentencesTest, EmptyAndWhitespaceOnly) {
  EXPECT_TRUE(split_sentences(U"").empty());
  EXPECT_TRUE(split_sentences(U" \n\t").empty());
}

TEST(ReconcileTest, NewlineJoinedWordCoversTwoSentences) {
  const Text text = U"Alpha beta.\nGamma.";
  const ReconciledText rec = reconcile(text, SegmentationMode::kSpaceOnly);
  ASSERT_EQ(oracle_words(text, SegmentationMode::kSpaceOnly).size(), 2u);
  ASSERT_EQ(rec.sentences.size(), 2u);
  ASSERT_EQ(rec.word_map.total_count(), 2u);
  EXPECT_EQ(word_text(text, rec.word_map.words[1]), U"beta.\nGamma.");
  EXPECT_EQ(rec.word_map.words[1].covered_sentences, (std::vector<std::size_t>{0, 1}));
  ASSERT_EQ(rec.discrepancies.size(), 1u);
  EXPECT_EQ(rec.discrepancies[0].kind, DiscrepancyKind::kNewlineJoinedSequence);
  EXPECT_EQ(rec.discrepancies[0].span, (CharSpan{6, 18}));
  EXPECT_EQ(rec.words_per_sentence, (std::vector<std::size_t>{2, 0}));
}

TEST(ReconcileTest, SameTextInAllWhitespaceModeHasNoDiscrepancy) {
  const ReconciledText rec = reconcile(U"Alpha beta.\nGamma.", SegmentationMode::kAllWhitespace);
  EXPECT_EQ(rec.word_map.total_count(), 3u);
  EXPECT_TRUE(rec.discrepancies.empty());
}

TEST(ReconcileTest, CleanText) {
  const Text text = U"Alpha beta. Gamma.";
  const ReconciledText rec = reconcile(text, SegmentationMode::kSpaceOnly);
  ASSERT_EQ(oracle_words(text, SegmentationMode::kSpaceOnly).size(), 3u);
  EXPECT_EQ(rec.sentences.size(), 2u);
  EXPECT_EQ(rec.word_map.total_count(), 3u);
  EXPECT_TRUE(rec.discrepancies.empty());
  EXPECT_EQ(rec.words_per_sentence, (std::vector<std::size_t>{2, 1}));
}

TEST(ReconcileTest, LeadingGapWhitespaceIsLostWhitespace) {
  const Text text = U"Hi. \nThere.";
  const ReconciledText rec = reconcile(text, SegmentationMode::kSpaceOnly);
  ASSERT_EQ(rec.word_map.total_count(), 2u);
  ASSERT_EQ(rec.discrepancies.size(), 1u);
  EXPECT_EQ(rec.discrepancies[0].kind, DiscrepancyKind::kLostWhitespace);
  EXPECT_EQ(rec.discrepancies[0].span, (CharSpan{4, 5}));
  EXPECT_EQ(rec.home_sentence[1], 1u);
}

TEST(ReconcileTest, WhitespaceOnlyWordInGap) {
  // SpaceOnly: "\t" between two spaces is a word of its own.
  const Text text = U"One. \t Two.";
  const ReconciledText rec = reconcile(text, SegmentationMode::kSpaceOnly);
  ASSERT_EQ(rec.word_map.total_count(), 3u);
  EXPECT_TRUE(rec.word_map.words[1].covered_sentences.empty());
  EXPECT_EQ(rec.home_sentence[1], 1u);
  ASSERT_EQ(rec.discrepancies.size(), 1u);
  EXPECT_EQ(rec.discrepancies[0].span, (CharSpan{5, 6}));
}

TEST(ReconcileTest, EmptyText) {
  const ReconciledText rec = reconcile(U"", SegmentationMode::kSpaceOnly);
  EXPECT_TRUE(rec.sentences.empty());
  EXPECT_EQ(rec.word_map.total_count(), 0u);
  EXPECT_TRUE(rec.discrepancies.empty());
}

TEST(ReconcileTest, WhitespaceOnlyTextLeavesWordsUnattributed) {
  const ReconciledText rec = reconcile(U"\n", SegmentationMode::kSpaceOnly);
  EXPECT_TRUE(rec.sentences.empty());
  EXPECT_EQ(rec.word_map.total_count(), 1u);
  EXPECT_EQ(rec.unattributed_words, 1u);
  EXPECT_THROW(locate_boundary_sentence(rec, 0), Error);
}

TEST(ReconcileTest, RecordOverloadCarriesId) {
  const LabeledText r{"doc-7", U"A b. C d.", 2, {}, {}};
  EXPECT_EQ(reconcile(r, SegmentationMode::kSpaceOnly).record_ref, "doc-7");
}

const Text kThreeSentences = U"Alpha beta. Gamma delta epsilon. Zeta eta.";

TEST(LocateBoundarySentenceTest, Examples) {
  const ReconciledText rec = reconcile(kThreeSentences, SegmentationMode::kSpaceOnly);
  ASSERT_EQ(rec.word_map.total_count(), 7u);
  ASSERT_EQ(rec.sentences.size(), 3u);
  // Manual span check: "delta" starts at 18, sentence 1 is [12, 32).
  EXPECT_EQ(rec.word_map.words[3].span.start, 18u);
  EXPECT_EQ(rec.sentences[1].span, (CharSpan{12, 32}));
  EXPECT_EQ(locate_boundary_sentence(rec, 3), 1u);
  EXPECT_EQ(locate_boundary_sentence(rec, 0), 0u);
  try {
    locate_boundary_sentence(rec, 7);
    FAIL() << "expected LabelOutOfRange";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kLabelOutOfRange);
  }
}

// Text rebuilt from the reconciled spans: sentence bodies and gaps in order.
Text rebuild(const Text& text, const ReconciledText& rec) {
  Text out;
  std::size_t prev = 0;
  for (const auto& s : rec.sentences) {
    out += text.substr(prev, s.span.start - prev);
    out += text.substr(s.span.start, s.span.size());
    prev = s.span.end;
  }
  out += text.substr(prev);
  return out;
}

TEST(ReconcileProperty, CoverageAgreementIdempotence) {
  testing::TextGenerator gen(23);
  for (int trial = 0; trial < 600; ++trial) {
    const Text text = gen.text(1 + gen.below(7));
    for (auto mode : {SegmentationMode::kSpaceOnly, SegmentationMode::kAllWhitespace}) {
      const ReconciledText rec = reconcile(text, mode);

      // Coverage: sentences are ordered and disjoint; everything between
      // them is whitespace; sentence edges are not.
      std::size_t prev = 0;
      for (const auto& s : rec.sentences) {
        ASSERT_LE(prev, s.span.start);
        ASSERT_LT(s.span.start, s.span.end);
        for (std::size_t i = prev; i < s.span.start; ++i) ASSERT_TRUE(is_unicode_whitespace(text[i]));
        ASSERT_FALSE(is_unicode_whitespace(text[s.span.start]));
        ASSERT_FALSE(is_unicode_whitespace(text[s.span.end - 1]));
        prev = s.span.end;
      }
      for (std::size_t i = prev; i < text.size(); ++i) ASSERT_TRUE(is_unicode_whitespace(text[i]));

      // Words are never split relative to whole-text segmentation.
      WordMap plain = rec.word_map;
      for (auto& w : plain.words) w.covered_sentences.clear();
      ASSERT_EQ(plain, segment_words(text, mode));

      // Agreement, against an oracle attribution by linear scan.
      const auto oracle = oracle_words(text, mode);
      std::vector<std::size_t> per_sentence(rec.sentences.size(), 0);
      for (const auto& w : oracle) {
        std::size_t s = 0;
        while (s < rec.sentences.size() && rec.sentences[s].span.end <= w.start) ++s;
        if (s == rec.sentences.size()) s = rec.sentences.size() - 1;
        ++per_sentence[s];
      }
      ASSERT_EQ(per_sentence, rec.words_per_sentence);
      std::size_t sum = rec.unattributed_words;
      for (auto c : rec.words_per_sentence) sum += c;
      ASSERT_EQ(sum, rec.word_map.total_count());

      // Multi-sentence words are flagged.
      for (std::size_t w = 0; w < rec.word_map.words.size(); ++w) {
        if (rec.word_map.words[w].covered_sentences.size() < 2) continue;
        const bool flagged = std::any_of(rec.discrepancies.begin(), rec.discrepancies.end(),
                                         [&](const Discrepancy& d) {
                                           return d.word == w &&
                                                  d.kind == DiscrepancyKind::kNewlineJoinedSequence;
                                         });
        ASSERT_TRUE(flagged);
      }
      if (mode == SegmentationMode::kAllWhitespace) ASSERT_TRUE(rec.discrepancies.empty());

      // Fixed point.
      const Text again = rebuild(text, rec);
      ASSERT_EQ(again, text);
      ASSERT_EQ(reconcile(again, mode), rec);
    }
  }
}

}  // namespace
}  // namespace boundkit
