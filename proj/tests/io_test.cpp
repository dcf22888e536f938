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

#include <gtest/gtest.h>

#include <sstream>

#include "boundkit/error.hpp"
#include "test_support.hpp"

namespace boundkit {
namespace {

using testing::U;

ErrorCode read_error(const std::string& content, io::ReadOptions options = {}) {
  std::istringstream in(content);
  try {
    io::read_corpus(in, options);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error for: " << content;
  return ErrorCode::kIo;
}

TEST(ReadCorpusTest, TwoLines) {
  std::istringstream in(
      "{\"id\": \"a\", \"text\": \"Alpha beta. Gamma.\", \"label\": 2, \"domain\": \"peerread\"}\n"
      "\n"
      "{\"id\": 7, \"text\": \"caf\\u00e9 au lait\", \"label\": 1, \"generator\": \"gpt4\"}\n");
  const io::Corpus corpus = io::read_corpus(in);
  ASSERT_EQ(corpus.records.size(), 2u);
  EXPECT_EQ(corpus.records[0].domain_tag, "peerread");
  EXPECT_EQ(corpus.records[1].id, "7");
  EXPECT_EQ(corpus.records[1].text, U("café au lait"));
  EXPECT_EQ(corpus.records[1].generator_tag, "gpt4");
  EXPECT_TRUE(corpus.reports.empty());
}

TEST(ReadCorpusTest, MissingLabelNamesLine) {
  std::istringstream in("{\"id\": \"a\", \"text\": \"x y\", \"label\": 1}\n{\"id\": \"b\", \"text\": \"x y\"}\n");
  try {
    io::read_corpus(in);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMissingLabel);
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
  std::istringstream again("{\"id\": \"b\", \"text\": \"x y\"}\n");
  EXPECT_EQ(io::read_corpus(again, {.require_labels = false}).records.size(), 1u);
}

TEST(ReadCorpusTest, Errors) {
  EXPECT_EQ(read_error("{\"id\": \"a\", \"text\": \"x y\", \"label\": 1}\n{\"id\": \"a\", \"text\": \"z w\", \"label\": 1}\n"),
            ErrorCode::kDuplicateId);
  EXPECT_EQ(read_error("{\"id\": \"a\", \"text\": \"x\""), ErrorCode::kParse);
  EXPECT_EQ(read_error("[1, 2]"), ErrorCode::kParse);
  EXPECT_EQ(read_error("{\"id\": \"a\", \"text\": \"x y\", \"label\": -1}"), ErrorCode::kParse);
  EXPECT_EQ(read_error("{\"id\": \"a\", \"text\": \"x y\", \"label\": 1.5}"), ErrorCode::kParse);
  EXPECT_EQ(read_error("{\"id\": \"a\", \"label\": 1}"), ErrorCode::kParse);
}

TEST(ReadCorpusTest, ValidationWarningsAreCollected) {
  std::istringstream in("{\"id\": \"a\", \"text\": \"x y\", \"label\": 2}\n{\"id\": \"b\", \"text\": \"x y\", \"label\": 9}\n");
  const io::Corpus corpus = io::read_corpus(in);
  ASSERT_EQ(corpus.reports.size(), 2u);
  EXPECT_FALSE(corpus.reports[0].has_errors());
  EXPECT_TRUE(corpus.reports[1].has_errors());
}

TEST(ReadCorpusTest, FieldMapRenamesKeys) {
  std::istringstream in("{\"uid\": \"a\", \"content\": \"x y z\", \"boundary\": 1}\n");
  const auto fields = io::FieldMap::parse("id=uid,text=content,label=boundary");
  const io::Corpus corpus = io::read_corpus(in, {.fields = fields});
  ASSERT_EQ(corpus.records.size(), 1u);
  EXPECT_EQ(corpus.records[0].label, 1u);
  EXPECT_THROW(io::FieldMap::parse("colour=x"), Error);
  EXPECT_THROW(io::FieldMap::parse("label"), Error);
}

TEST(WriteTest, CorpusRoundTripPreservesEveryField) {
  testing::TextGenerator gen(2);
  std::vector<LabeledText> records;
  for (int i = 0; i < 50; ++i) {
    LabeledText r{"r" + std::to_string(i), gen.text(3), {}, {}, {}};
    if (i % 3) r.label = static_cast<std::size_t>(i);
    if (i % 2) r.domain_tag = "d" + std::to_string(i);
    if (i % 5) r.generator_tag = "g";
    records.push_back(r);
  }
  std::ostringstream out;
  io::write_corpus(records, out);
  std::istringstream in(out.str());
  EXPECT_EQ(io::read_corpus(in, {.require_labels = false}).records, records);
}

TEST(WriteTest, AugmentedRoundTripAndStableBytes) {
  const LabeledText src{"s", U("Один два. Three four five. Six seven."), 3, std::string("dom"), {}};
  AugmentConfig config;
  config.seed = 9;
  const auto result = generate_corpus({src}, config);
  ASSERT_FALSE(result.records.empty());
  std::ostringstream a, b;
  io::write_augmented(result.records, a);
  io::write_augmented(generate_corpus({src}, config).records, b);
  EXPECT_EQ(a.str(), b.str());
  EXPECT_EQ(a.str().find(" \n"), std::string::npos);
  std::istringstream in(a.str());
  EXPECT_EQ(io::read_augmented(in), result.records);
  std::istringstream as_corpus(a.str());
  EXPECT_EQ(io::read_corpus(as_corpus).records.size(), result.records.size());
}

TEST(WriteTest, PredictionsRoundTripAndEmpty) {
  const std::vector<PredictionRecord> preds = {{"a", 3}, {"b", 0}};
  std::ostringstream out;
  io::write_predictions(preds, out);
  EXPECT_EQ(out.str(), "{\"id\":\"a\",\"label\":3}\n{\"id\":\"b\",\"label\":0}\n");
  std::istringstream in(out.str());
  EXPECT_EQ(io::read_predictions(in), preds);

  std::ostringstream empty;
  io::write_predictions({}, empty);
  EXPECT_TRUE(empty.str().empty());
}

TEST(TokenizationSidecarTest, RoundTrip) {
  const Tokenization tok{"r1", {{0, 3}, {4, 9}}, TokenizationSource::kExternalSidecar};
  EXPECT_EQ(io::tokenization_line(tok), "{\"id\":\"r1\",\"spans\":[[0,3],[4,9]]}");
  std::istringstream in(io::tokenization_line(tok) + "\n");
  const auto index = io::read_tokenizations(in);
  ASSERT_EQ(index.count("r1"), 1u);
  EXPECT_EQ(index.at("r1"), tok);

  std::istringstream bad("{\"id\":\"r1\",\"spans\":[[0]]}\n");
  EXPECT_THROW(io::read_tokenizations(bad), Error);
}

TEST(AnomalyLineTest, Format) {
  const std::vector<AnomalySpan> spans = {{AnomalyKind::kTripleQuote, {4, 7}, 1.0}};
  EXPECT_EQ(io::anomaly_line("x", spans),
            "{\"id\":\"x\",\"anomalies\":[{\"kind\":\"triple_quote\",\"start\":4,\"end\":7,\"score\":1.0}]}");
}

}  // namespace
}  // namespace boundkit
