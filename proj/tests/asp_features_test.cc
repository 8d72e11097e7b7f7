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

#include "news_placer/asp_features.h"

#include <cmath>

#include <gtest/gtest.h>

#include "news_placer/config.h"
#include "news_placer/pipeline.h"
#include "news_placer/synth.h"
#include "news_placer/templates.h"
#include "test_util.h"

namespace news_placer {
namespace {

using testing::link_token;
using testing::make_article;
using testing::make_profile;
using testing::make_section;

TEST(SyntacticFeaturesTest, UnigramOverlap) {
  const auto a = pos_ngrams({"NNP", "VB", "CD"});
  const auto b = pos_ngrams({"NNP", "VB"});
  const auto f = syntactic_features(a, b);
  EXPECT_NEAR(f[0], 2.0 / 3.0, 1e-12);
  EXPECT_NEAR(f[1], 1.0 / 2.0, 1e-12);  // {NNP VB, VB CD} vs {NNP VB}
  EXPECT_NEAR(f[2], 0.0, 1e-12);
  for (double x : syntactic_features(a, a)) EXPECT_EQ(x, 1.0);
  for (double x : syntactic_features(a, pos_ngrams({"JJ", "NN"}))) EXPECT_EQ(x, 0.0);
}

TEST(ParagraphKlTest, EqualTextIsZeroAndHandValue) {
  const std::vector<std::string> same = {"goal", "match", "goal"};
  EXPECT_NEAR(*paragraph_kl(same, same, Smoothing{}), 0.0, 1e-12);
  const std::vector<std::string> p = {"a", "b"};
  const std::vector<std::string> q = {"a", "b", "b", "b"};
  EXPECT_NEAR(*paragraph_kl(p, q, Smoothing{SmoothingKind::kJelinekMercer, 0.0}), 0.14384, 1e-5);
  EXPECT_FALSE(paragraph_kl({}, q, Smoothing{}).has_value());
}

TEST(EntityFeaturesTest, EntityAndClassOverlap) {
  WikipediaSnapshot s;
  s.year = 2008;
  s.entities["E1"] = make_profile("E1", {"P"}, {}, 2008);
  s.entities["E2"] = make_profile("E2", {"L"}, {}, 2008);
  s.entities["E3"] = make_profile("E3", {"P"}, {}, 2008);
  std::size_t classless = 0;
  const auto f = entity_features({"E1", "E2"}, {"E2", "E3"}, s, &classless);
  EXPECT_NEAR(f[0], 1.0 / 3.0, 1e-12);
  // Article classes {P, L}; anchor classes {L, P}.
  EXPECT_NEAR(f[1], 1.0, 1e-12);
  EXPECT_EQ(classless, 0u);

  const auto g = entity_features({"E1", "E2"}, {"E3", "E9"}, s, &classless);
  EXPECT_NEAR(g[0], 0.0, 1e-12);
  EXPECT_NEAR(g[1], 0.5, 1e-12);  // {P, L} vs {P}
  EXPECT_EQ(classless, 1u);
}

TEST(FrequencyFeaturesTest, HandTaggedCounts) {
  NewsArticle a = make_article("n1", {"Obama met 3 senators", "Big news"});
  a.tokens = {{{"Obama", "NNP"}, {"met", "VB"}, {"3", "CD"}, {"senators", "NN"}},
              {{"Big", "JJ"}, {"news", "NN"}}};
  link_token(a, "Obama", "E1");
  WikipediaSnapshot s;
  s.year = 2008;
  s.entities["E1"] = make_profile("E1", {"P"}, {}, 2008);
  AspGlobalTables tables;
  tables.entities = {"E1"};
  const auto f = frequency_features(a, tables, s, kAspTopK);
  ASSERT_EQ(f.size(), kTagCount + 3 + 2 * kAspTopK);
  // NNP, NN, CD, VB, JJ, OTHER.
  EXPECT_EQ(std::vector<double>(f.begin(), f.begin() + 6),
            (std::vector<double>{1, 2, 1, 1, 1, 0}));
  EXPECT_EQ(f[6], 2.0);  // paragraphs
  EXPECT_EQ(f[7], 6.0);  // tokens
  EXPECT_EQ(f[8], 1.0);  // linked entities
  EXPECT_EQ(f[9], 1.0);  // top entity is in the global table
  EXPECT_EQ(f[9 + kAspTopK], 0.0);  // its class is not

  const NewsArticle bare = make_article("n2", {"a b c", "d e f"});
  const auto g = frequency_features(bare, tables, s, kAspTopK);
  EXPECT_EQ(g[7], 6.0);
  EXPECT_EQ(g[8], 0.0);
}

TEST(FeatureNamesTest, WidthAndCosineColumn) {
  EXPECT_EQ(asp_feature_names().size(), kAspFeatureCount);
  EXPECT_EQ(asp_feature_names()[kAspCosineColumn], "cosine");
}

class SyntheticAspTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    config_ = new RunConfig;
    config_->synth_entities = 40;
    config_->synth_articles = 150;
    config_->synth_mentions = 10;
    config_->synth_last_year = 2009;
    config_->lda_iterations = 30;
    data_ = new Dataset(generate_synthetic_corpus(SyntheticSpec::from_config(*config_)));
    indexes_ = new AspIndexes(build_asp_indexes(*data_, 2009, *config_));
    const auto pairs =
        build_aep_ground_truth(data_->corpus, data_->snapshot(2009), data_->snapshot(2008));
    year_ = new AspYear(compute_asp_year(*data_, 2009, *config_, pairs, *indexes_));
  }
  static void TearDownTestSuite() {
    delete year_;
    delete indexes_;
    delete data_;
    delete config_;
  }
  static RunConfig* config_;
  static Dataset* data_;
  static AspIndexes* indexes_;
  static AspYear* year_;
};

RunConfig* SyntheticAspTest::config_ = nullptr;
Dataset* SyntheticAspTest::data_ = nullptr;
AspIndexes* SyntheticAspTest::indexes_ = nullptr;
AspYear* SyntheticAspTest::year_ = nullptr;

TEST_F(SyntheticAspTest, OnePositivePerTripleAndEverySlotScored) {
  ASSERT_FALSE(year_->triples.empty());
  for (std::size_t t = 0; t < year_->triples.size(); ++t) {
    const auto& rows = year_->rows[t];
    const auto* tmpl = template_for(*indexes_, *data_, year_->triples[t].entity_id, 2009);
    ASSERT_NE(tmpl, nullptr);
    EXPECT_GE(rows.size(), tmpl->slots.size());
    int positives = 0;
    for (const auto& row : rows) {
      positives += row.label;
      if (row.label == 1) {
        EXPECT_EQ(row.candidate_id, year_->truth[t]);
      }
      for (double x : row.values) EXPECT_TRUE(std::isfinite(x));
      EXPECT_GE(row.values[kAspCosineColumn], 0.0);
      EXPECT_LE(row.values[kAspCosineColumn], 1.0 + 1e-12);
    }
    EXPECT_EQ(positives, 1);
  }
}

TEST_F(SyntheticAspTest, PlantedSlotHasTheHighestCosine) {
  std::size_t best = 0;
  for (std::size_t t = 0; t < year_->triples.size(); ++t) {
    const auto& rows = year_->rows[t];
    const auto top = std::max_element(rows.begin(), rows.end(), [](const AspRow& a, const AspRow& b) {
      return a.values[kAspCosineColumn] < b.values[kAspCosineColumn];
    });
    best += top->label == 1;
  }
  EXPECT_GE(static_cast<double>(best), 0.9 * static_cast<double>(year_->triples.size()));
}

TEST(PrivateCandidatesTest, UncoveredSectionAddsOneRow) {
  SectionTemplate tmpl;
  tmpl.class_id = "C";
  TemplateSlot slot;
  slot.slot_id = "C#00";
  slot.member_titles = {"Career"};
  tmpl.slots = {slot};
  const EntityProfile p = make_profile(
      "E1", {"C"},
      {make_section("Career", "goal match"), make_section("Accidents", "crash road crash")}, 2008);
  const std::vector<std::vector<std::string>> docs = {{"goal", "match", "crash", "road"}};
  TopicConfig tc;
  tc.topics = 1;
  const TopicModel topics = fit_topics(docs, tc);
  const std::vector<NewsArticle> none;
  const ArticleIndex articles(none);
  const auto extra = private_candidates(p, tmpl, topics, articles, AspConfig{});
  ASSERT_EQ(extra.size(), 1u);
  EXPECT_EQ(extra[0].id, "E1/" + normalize_section_title("Accidents"));
  EXPECT_FALSE(extra[0].is_slot);
}

}  // namespace
}  // namespace news_placer
