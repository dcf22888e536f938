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

// Runs the boundkit binary end to end on small files in a scratch directory.
#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "boundkit/io.hpp"

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code = -1;
  std::string out;
};

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("boundkit_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
    write("gold.jsonl",
          "{\"id\":\"a\",\"text\":\"One two. Three four five. Six seven eight.\",\"label\":4,"
          "\"domain\":\"peerread\",\"generator\":\"gpt\"}\n"
          "{\"id\":\"b\",\"text\":\"Alpha beta.\\nGamma delta. Epsilon zeta eta.\",\"label\":2,"
          "\"domain\":\"peerread\",\"generator\":\"llama\"}\n"
          "{\"id\":\"c\",\"text\":\"Uno dos tres. Cuatro cinco. Seis siete ocho nueve.\",\"label\":5,"
          "\"generator\":\"gpt\"}\n");
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path path(const std::string& name) const { return dir_ / name; }

  void write(const std::string& name, const std::string& content) const {
    std::ofstream(path(name), std::ios::binary) << content;
  }

  std::string read(const std::string& name) const {
    std::ifstream in(path(name), std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }

  RunResult run(const std::string& args) const {
    const std::string cmd =
        "cd '" + dir_.string() + "' && '" BOUNDKIT_CLI_PATH "' " + args + " 2>/dev/null";
    RunResult r;
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    const int status = ::pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
  }

  fs::path dir_;
};

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(run("validate gold.jsonl").exit_code, 0);
  EXPECT_EQ(run("--help").exit_code, 0);
  EXPECT_EQ(run("").exit_code, 2);
  EXPECT_EQ(run("frobnicate").exit_code, 2);
  EXPECT_EQ(run("validate gold.jsonl --mode tabs").exit_code, 2);
  EXPECT_EQ(run("validate missing.jsonl").exit_code, 2);
  EXPECT_EQ(run("score gold.jsonl").exit_code, 2);

  write("broken.jsonl", "{\"id\":\"a\",\"text\":\"x\",\"label\":0}\n{not json\n");
  EXPECT_EQ(run("validate broken.jsonl").exit_code, 1);
  write("over.jsonl", "{\"id\":\"a\",\"text\":\"x y\",\"label\":7}\n");
  EXPECT_EQ(run("validate over.jsonl").exit_code, 1);
  write("unlabeled.jsonl", "{\"id\":\"a\",\"text\":\"x y\"}\n");
  EXPECT_EQ(run("validate unlabeled.jsonl").exit_code, 1);
  EXPECT_EQ(run("validate unlabeled.jsonl --allow-unlabeled").exit_code, 0);
}

TEST_F(CliTest, AugmentIsByteIdenticalAcrossRunsAndThreads) {
  ASSERT_EQ(run("augment gold.jsonl --seed 11 --per-record 6 -o a1.jsonl").exit_code, 0);
  ASSERT_EQ(run("augment gold.jsonl --seed 11 --per-record 6 -o a2.jsonl").exit_code, 0);
  ASSERT_EQ(run("augment gold.jsonl --seed 11 --per-record 6 --threads 4 -o a3.jsonl").exit_code, 0);
  const std::string first = read("a1.jsonl");
  EXPECT_FALSE(first.empty());
  EXPECT_EQ(first, read("a2.jsonl"));
  EXPECT_EQ(first, read("a3.jsonl"));
  EXPECT_NE(first, run("augment gold.jsonl --seed 12 --per-record 6").out);

  // Augmented files are valid gold corpora.
  EXPECT_EQ(run("validate a1.jsonl").exit_code, 0);
}

TEST_F(CliTest, ScoreAcceptsBaselinePredictions) {
  ASSERT_EQ(run("baseline gold.jsonl --strategy fixed --k 3 -o pred.jsonl").exit_code, 0);
  const RunResult r = run("score gold.jsonl pred.jsonl --json --group-by generator");
  ASSERT_EQ(r.exit_code, 0);
  const auto j = nlohmann::json::parse(r.out);
  // |3-4| + |3-2| + |3-5| = 4 over 3 records.
  EXPECT_DOUBLE_EQ(j.at("mae").get<double>(), 4.0 / 3.0);
  EXPECT_EQ(j.at("count"), 3);
  EXPECT_EQ(j.at("per_group").size(), 2u);

  ASSERT_EQ(run("baseline gold.jsonl --strategy median --train gold.jsonl -o med.jsonl").exit_code, 0);
  EXPECT_EQ(read("med.jsonl"), "{\"id\":\"a\",\"label\":4}\n{\"id\":\"b\",\"label\":4}\n{\"id\":\"c\",\"label\":4}\n");
}

TEST_F(CliTest, ScoreRejectsMismatchedIds) {
  write("short.jsonl", "{\"id\":\"a\",\"label\":1}\n");
  EXPECT_EQ(run("score gold.jsonl short.jsonl").exit_code, 1);
  write("extra.jsonl",
        "{\"id\":\"a\",\"label\":1}\n{\"id\":\"b\",\"label\":1}\n{\"id\":\"c\",\"label\":1}\n"
        "{\"id\":\"z\",\"label\":1}\n");
  EXPECT_EQ(run("score gold.jsonl extra.jsonl").exit_code, 1);
}

TEST_F(CliTest, FieldMapRenames) {
  write("renamed.jsonl", "{\"uid\":\"a\",\"body\":\"x y z\",\"boundary\":1}\n");
  EXPECT_EQ(run("validate renamed.jsonl").exit_code, 1);
  EXPECT_EQ(run("validate renamed.jsonl --field-map id=uid,text=body,label=boundary").exit_code, 0);
}

TEST_F(CliTest, AlignRoundTripsThroughSidecar) {
  // Sidecar tiles every word of record a with one subtoken per word.
  write("one.jsonl", "{\"id\":\"a\",\"text\":\"ab cd ef\",\"label\":2}\n");
  write("tok.jsonl", "{\"id\":\"a\",\"spans\":[[0,1],[1,2],[3,5],[6,8]]}\n");
  const RunResult r = run("align one.jsonl --tokenization tok.jsonl");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "{\"id\":\"a\",\"label\":2,\"boundary_subtoken\":3,\"subtoken_count\":4,\"mode\":\"space\"}\n");

  write("sub.jsonl", "{\"id\":\"a\",\"label\":1}\n");
  const RunResult back = run("align one.jsonl --tokenization tok.jsonl --from-subtokens sub.jsonl");
  ASSERT_EQ(back.exit_code, 0);
  EXPECT_EQ(back.out, "{\"id\":\"a\",\"label\":0}\n");

  write("bad_tok.jsonl", "{\"id\":\"a\",\"spans\":[[0,3],[2,5]]}\n");
  EXPECT_EQ(run("align one.jsonl --tokenization bad_tok.jsonl").exit_code, 1);
}

TEST_F(CliTest, StatsAndAnomaliesEmitJson) {
  const RunResult s = run("stats gold.jsonl --json --bin-width 5");
  ASSERT_EQ(s.exit_code, 0);
  const auto j = nlohmann::json::parse(s.out);
  EXPECT_EQ(j.at("tokenization"), "fallback");
  EXPECT_EQ(j.at("boundary").at("total"), 3);

  write("loop.jsonl", "{\"id\":\"q\",\"text\":\"Fine. \\\"\\\"\\\" done\"}\n");
  const RunResult a = run("anomalies loop.jsonl");
  ASSERT_EQ(a.exit_code, 0);
  EXPECT_EQ(a.out, "{\"id\":\"q\",\"anomalies\":[{\"kind\":\"triple_quote\",\"start\":6,\"end\":9,\"score\":1.0}]}\n");
}

}  // namespace
