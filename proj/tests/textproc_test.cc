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

#include "news_placer/textproc.h"

#include <cmath>
#include <numeric>

#include <gtest/gtest.h>

#include "news_placer/common.h"
#include "test_util.h"

namespace news_placer {
namespace {

std::vector<std::string> tags_of(const TaggedParagraph& p) {
  std::vector<std::string> out;
  for (const auto& t : p) out.push_back(t.tag);
  return out;
}

TEST(TokenizeTest, SplitsPunctuationIntoTokens) {
  EXPECT_EQ(tokenize("Obama met 3 senators."),
            (std::vector<std::string>{"Obama", "met", "3", "senators", "."}));
  EXPECT_TRUE(tokenize("").empty());
  EXPECT_EQ(tokenize("state-of-the-art isn't"),
            (std::vector<std::string>{"state-of-the-art", "isn't"}));
}

TEST(TagTest, RuleTable) {
  const std::vector<std::string> text = {"Obama met 3 senators."};
  const auto tagged = tokenize_and_tag(text);
  ASSERT_EQ(tagged.size(), 1u);
  const auto tags = tags_of(tagged[0]);
  EXPECT_EQ(tags[0], "NNP");
  EXPECT_TRUE(tags[1] == "VB" || tags[1] == "OTHER");
  EXPECT_EQ(tags[2], "CD");
  EXPECT_EQ(tags[4], "OTHER");
  for (const auto& t : tags) {
    EXPECT_NE(std::find(std::begin(kTagSet), std::end(kTagSet), t), std::end(kTagSet));
  }
}

TEST(TagTest, EmptyParagraphList) {
  EXPECT_TRUE(tokenize_and_tag(std::vector<std::string>{}).empty());
  const auto one = tokenize_and_tag(std::vector<std::string>{""});
  ASSERT_EQ(one.size(), 1u);
  EXPECT_TRUE(one[0].empty());
}

TEST(TagTest, PreTaggedArticlesPassThrough) {
  NewsArticle a = testing::make_article("n1", {"Obama met 3 senators."});
  a.tokens[0][1].tag = "JJ";
  const auto before = a.tokens;
  ensure_tagged(a);
  EXPECT_EQ(a.tokens, before);
}

TEST(TermVectorTest, RawCounts) {
  const TermVector v = term_vector(std::string_view("a b a"));
  EXPECT_DOUBLE_EQ(v.weight("a"), 2.0);
  EXPECT_DOUBLE_EQ(v.weight("b"), 1.0);
}

TEST(TermVectorTest, ZeroIdfRemovesWeight) {
  IdfTable idf;
  idf.document_count = 1;
  idf.idf = {{"a", 0.0}, {"b", 1.0}};
  const TermVector v = term_vector(std::string_view("a b a"), &idf);
  EXPECT_DOUBLE_EQ(v.weight("a"), 0.0);
  EXPECT_DOUBLE_EQ(v.weight("b"), 1.0);
}

TEST(IdfTest, TwoDocuments) {
  const std::vector<std::vector<std::string>> docs = {{"x"}, {"x", "y"}};
  const IdfTable idf = build_idf(docs);
  EXPECT_EQ(idf.document_count, 2u);
  EXPECT_DOUBLE_EQ(idf.lookup("x"), 0.0);
  EXPECT_NEAR(idf.lookup("y"), 0.693147, 1e-6);
}

TEST(IdfTest, FileRoundTrip) {
  testing::TempDir dir("idf");
  const std::vector<std::vector<std::string>> docs = {{"x"}, {"x", "y"}, {"z"}};
  const IdfTable idf = build_idf(docs);
  write_idf_table(idf, dir.path("idf.tsv"));
  const IdfTable back = read_idf_table(dir.path("idf.tsv"));
  EXPECT_EQ(back.document_count, idf.document_count);
  ASSERT_EQ(back.idf.size(), idf.idf.size());
  for (const auto& [t, w] : idf.idf) EXPECT_DOUBLE_EQ(back.lookup(t), w);
}

TEST(LanguageModelTest, MaximumLikelihoodWithoutSmoothing) {
  const std::vector<std::string> text = {"a", "a", "b"};
  const LanguageModel m = language_model(text, {"a", "b"}, Smoothing{SmoothingKind::kJelinekMercer, 0.0});
  EXPECT_DOUBLE_EQ(m.probability("a"), 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(m.probability("b"), 1.0 / 3.0);
}

TEST(LanguageModelTest, SmoothingGivesMassToUnseenTerms) {
  const std::vector<std::string> text = {"a"};
  const LanguageModel m = language_model(text, {"a", "b"}, Smoothing{SmoothingKind::kJelinekMercer, 0.1});
  EXPECT_NEAR(m.probability("b"), 0.05, 1e-15);
  EXPECT_NEAR(m.probability("a"), 0.95, 1e-15);
}

TEST(LanguageModelTest, EmptyTextIsAnError) {
  const std::vector<std::string> empty;
  EXPECT_THROW(language_model(empty, {"a", "b"}), Error);
  const std::vector<std::string> text = {"a"};
  EXPECT_THROW(language_model(text, {}), Error);
}

TEST(LanguageModelTest, SumsToOne) {
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::string> text;
    for (int i = 0; i < 30; ++i) text.push_back("w" + std::to_string(rng.below(12)));
    std::vector<std::string> vocab;
    for (int i = 0; i < 15; ++i) vocab.push_back("w" + std::to_string(i));
    const LanguageModel m = language_model(text, vocab);
    EXPECT_NEAR(std::accumulate(m.probabilities.begin(), m.probabilities.end(), 0.0), 1.0,
                1e-12);
  }
}

LanguageModel two_term(double p) {
  LanguageModel m;
  m.vocabulary = {"a", "b"};
  m.probabilities = {p, 1.0 - p};
  return m;
}

TEST(KlDivergenceTest, HandValues) {
  EXPECT_DOUBLE_EQ(kl_divergence(two_term(0.5), two_term(0.5)), 0.0);
  EXPECT_NEAR(kl_divergence(two_term(0.5), two_term(0.25)), 0.14384, 1e-5);
  EXPECT_NEAR(kl_divergence(two_term(0.25), two_term(0.5)), 0.13081, 1e-5);
}

TEST(KlDivergenceTest, VocabularyMismatchIsAnError) {
  LanguageModel other;
  other.vocabulary = {"a", "c"};
  other.probabilities = {0.5, 0.5};
  EXPECT_THROW(kl_divergence(two_term(0.5), other), Error);
}

TEST(KlDivergenceTest, MatchesDirectSummationOnRandomModels) {
  Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::string> vocab;
    for (int i = 0; i < 50; ++i) vocab.push_back("t" + std::to_string(100 + i));
    std::vector<std::string> tp, tq;
    for (int i = 0; i < 80; ++i) {
      tp.push_back(vocab[rng.below(50)]);
      tq.push_back(vocab[rng.below(50)]);
    }
    const LanguageModel p = language_model(tp, vocab);
    const LanguageModel q = language_model(tq, vocab);
    // Independent oracle: recount frequencies and sum term by term.
    double direct = 0.0;
    for (const auto& w : vocab) {
      const double cp = static_cast<double>(std::count(tp.begin(), tp.end(), w));
      const double cq = static_cast<double>(std::count(tq.begin(), tq.end(), w));
      const double pw = 0.9 * cp / 80.0 + 0.1 / 50.0;
      const double qw = 0.9 * cq / 80.0 + 0.1 / 50.0;
      direct += pw * std::log(pw / qw);
    }
    EXPECT_NEAR(kl_divergence(p, q), direct, 1e-12);
    EXPECT_GE(kl_divergence(p, q), 0.0);
  }
}

TEST(JaccardTest, Examples) {
  EXPECT_NEAR(jaccard(std::set<std::string>{"a", "b"}, std::set<std::string>{"b", "c"}),
              1.0 / 3.0, 1e-15);
  EXPECT_DOUBLE_EQ(jaccard(std::set<int>{1, 2}, std::set<int>{1, 2}), 1.0);
  EXPECT_DOUBLE_EQ(jaccard(std::set<int>{1}, std::set<int>{2}), 0.0);
  EXPECT_DOUBLE_EQ(jaccard(std::set<int>{}, std::set<int>{}), 0.0);
}

TEST(CosineTest, Examples) {
  const TermVector u({{"x", 1.0}, {"y", 1.0}});
  const TermVector v({{"x", 1.0}});
  const TermVector w({{"z", 2.0}});
  EXPECT_NEAR(cosine(u, u), 1.0, 1e-15);
  EXPECT_DOUBLE_EQ(cosine(v, w), 0.0);
  EXPECT_NEAR(cosine(u, v), 0.70711, 1e-5);
  EXPECT_DOUBLE_EQ(cosine(u, TermVector{}), 0.0);
}

}  // namespace
}  // namespace news_placer
