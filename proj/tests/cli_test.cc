// Copyright 2026 The News Placer Authors.
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

#include "cli.h"

#include <filesystem>
#include <sstream>

#include <gtest/gtest.h>

#include "news_placer/csv.h"
#include "test_util.h"

namespace news_placer {
namespace {

int run(std::vector<std::string> args, std::string* output = nullptr) {
  args.insert(args.begin(), "news_placer");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out);
  if (output != nullptr) *output = out.str();
  return code;
}

class CliTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    dir_ = new testing::TempDir("cli");
    write_file(dir_->path("config.json"),
               R"({"synth_entities": 60, "synth_articles": 200, "synth_last_year": 2010,)"
               R"( "lda_iterations": 30, "rf_trees": 20})");
    ASSERT_EQ(run({"--config", dir_->path("config.json"), "synth", "--out", dir_->path("data")}),
              kExitOk);
  }
  static void TearDownTestSuite() { delete dir_; }
  static std::string path(const std::string& child) { return dir_->path(child); }
  static testing::TempDir* dir_;
};

testing::TempDir* CliTest::dir_ = nullptr;

TEST_F(CliTest, SynthThenEvaluateWritesAReport) {
  EXPECT_TRUE(std::filesystem::exists(path("data/news.jsonl")));
  ASSERT_EQ(run({"evaluate", "--config", path("config.json"), "--task", "aep", "--data",
                 path("data"), "--out", path("report"), "--train-year", "2009"}),
            kExitOk);
  for (const char* f : {"report.json", "metrics.csv", "pr_curve.csv", "per_class.csv",
                        "expansion.csv"}) {
    EXPECT_TRUE(std::filesystem::exists(path(std::string("report/") + f))) << f;
  }
}

TEST_F(CliTest, UsageErrorsExitTwo) {
  EXPECT_EQ(run({"synth", "--out", path("x"), "--no-such-flag"}), kExitUsage);
  EXPECT_EQ(run({}), kExitUsage);
  EXPECT_EQ(run({"evaluate", "--task", "xyz", "--data", path("data"), "--out", path("y")}),
            kExitUsage);
  EXPECT_EQ(run({"evaluate", "--task", "aep", "--data", path("nowhere"), "--out", path("y")}),
            kExitUsage);
}

TEST_F(CliTest, BadDataExitsOne) {
  std::filesystem::create_directories(path("empty"));
  EXPECT_EQ(run({"evaluate", "--task", "aep", "--data", path("empty"), "--out", path("z")}),
            kExitDataError);
}

TEST_F(CliTest, SuggestWithoutLinkedEntitiesIsEmpty) {
  const std::string config = path("config.json");
  ASSERT_EQ(run({"train", "--config", config, "--task", "aep", "--data", path("data"), "--out",
                 path("models")}),
            kExitOk);
  ASSERT_EQ(run({"train", "--config", config, "--task", "asp", "--data", path("data"), "--out",
                 path("models")}),
            kExitOk);
  write_file(path("article.jsonl"),
             R"({"id":"q1","url":"http://q.example/1","date":"2010-05-01",)"
             R"("paragraphs":["zzz qqq xxx"]})"
             "\n");
  std::string output = "unset";
  EXPECT_EQ(run({"suggest", "--config", config, "--data", path("data"), "--models",
                 path("models"), "--article", path("article.jsonl"), "--year", "2010"},
                &output),
            kExitOk);
  EXPECT_EQ(output, "entity\tconfidence\tsection\n");  // header only
}

}  // namespace
}  // namespace news_placer
