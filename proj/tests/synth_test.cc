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

#include "news_placer/synth.h"

#include <filesystem>
#include <map>

#include <gtest/gtest.h>

#include "news_placer/common.h"
#include "news_placer/csv.h"
#include "test_util.h"

namespace news_placer {
namespace {

SyntheticSpec small_spec() {
  SyntheticSpec spec;
  spec.entities = 60;
  spec.articles = 200;
  spec.last_year = 2010;
  return spec;
}

TEST(SyntheticCorpusTest, SameSeedSameFiles) {
  testing::TempDir dir("synth");
  write_dataset(generate_synthetic_corpus(small_spec()), dir.path("a"));
  write_dataset(generate_synthetic_corpus(small_spec()), dir.path("b"));
  std::size_t files = 0;
  for (const auto& entry : std::filesystem::directory_iterator(dir.path("a"))) {
    const auto name = entry.path().filename().string();
    EXPECT_EQ(read_file(entry.path().string()), read_file(dir.path("b/" + name))) << name;
    ++files;
  }
  EXPECT_GT(files, 3u);

  SyntheticSpec other = small_spec();
  other.seed = 2;
  testing::TempDir dir2("synth_other");
  write_dataset(generate_synthetic_corpus(other), dir2.path());
  EXPECT_NE(read_file(dir.path("a/news.jsonl")), read_file(dir2.path("news.jsonl")));
}

TEST(SyntheticCorpusTest, TwoOfThirtyPairsPerArticleAreRelevant) {
  const Dataset data = generate_synthetic_corpus(small_spec());
  const auto pairs = build_aep_ground_truth(data.corpus, data.snapshot(2009), data.snapshot(2008));
  ASSERT_FALSE(pairs.empty());
  std::map<std::string, std::pair<int, int>> per_article;  // relevant, total
  for (const auto& p : pairs) {
    auto& [relevant, total] = per_article[p.news_id];
    relevant += p.label == Relevance::kRelevant;
    ++total;
  }
  for (const auto& [id, counts] : per_article) {
    EXPECT_EQ(counts.first, 2) << id;
    EXPECT_EQ(counts.second, 30) << id;
  }
}

TEST(SyntheticCorpusTest, SnapshotsAndLinksAreConsistent) {
  const Dataset data = generate_synthetic_corpus(small_spec());
  EXPECT_EQ(data.snapshots.size(), 3u);
  for (const auto& a : data.corpus) {
    ASSERT_EQ(a.tokens.size(), a.paragraphs.size());
    for (const auto& m : a.mentions) {
      EXPECT_TRUE(data.snapshot(2008).find(m.entity_id) != nullptr);
      std::string surface;
      for (std::size_t i = m.start; i < m.end; ++i) {
        surface += (i > m.start ? " " : "") + a.tokens[m.paragraph][i].text;
      }
      EXPECT_EQ(surface, m.surface);
    }
  }
}

TEST(SyntheticCorpusTest, InfeasibleSpecsAreErrors) {
  SyntheticSpec spec = small_spec();
  spec.cited = 40;
  EXPECT_THROW(generate_synthetic_corpus(spec), Error);
  spec = small_spec();
  spec.mentions = 100;
  EXPECT_THROW(generate_synthetic_corpus(spec), Error);
  spec = small_spec();
  spec.salience = 1.5;
  EXPECT_THROW(generate_synthetic_corpus(spec), Error);
  spec = small_spec();
  spec.last_year = 2000;
  EXPECT_THROW(generate_synthetic_corpus(spec), Error);
}

}  // namespace
}  // namespace news_placer
