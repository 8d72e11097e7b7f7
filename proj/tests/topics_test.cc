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

#include "news_placer/topics.h"

#include <set>

#include <gtest/gtest.h>

#include "news_placer/common.h"

namespace news_placer {
namespace {

std::vector<std::string> repeat(std::vector<std::string> words, int times) {
  std::vector<std::string> out;
  for (int i = 0; i < times; ++i) out.insert(out.end(), words.begin(), words.end());
  return out;
}

TEST(TopicsTest, DisjointVocabulariesSeparate) {
  const std::vector<std::string> va = {"apple", "banana", "cherry", "date"};
  const std::vector<std::string> vb = {"engine", "piston", "gear", "valve"};
  std::vector<std::vector<std::string>> docs;
  for (int i = 0; i < 6; ++i) {
    docs.push_back(repeat(va, 5));
    docs.push_back(repeat(vb, 5));
  }
  TopicConfig config;
  config.topics = 2;
  config.iterations = 200;
  config.seed = 5;
  const TopicModel model = fit_topics(docs, config);
  for (std::size_t d = 0; d < docs.size(); ++d) {
    const auto top = model.top_terms(model.dominant_topic(d), 4);
    const std::set<std::string> own(docs[d].begin(), docs[d].end());
    for (const auto& t : top) EXPECT_TRUE(own.count(t)) << "doc " << d << " term " << t;
  }
}

TEST(TopicsTest, SingleTopicCollapses) {
  const std::vector<std::vector<std::string>> docs = {
      {"a", "a", "a", "b"}, {"a", "c"}, {"b", "b"}};
  TopicConfig config;
  config.topics = 1;
  const TopicModel model = fit_topics(docs, config);
  for (std::size_t d = 0; d < docs.size(); ++d) EXPECT_EQ(model.dominant_topic(d), 0);
  // Global counts: a=4, b=3, c=1.
  EXPECT_EQ(model.top_terms(0, 3), (std::vector<std::string>{"a", "b", "c"}));
}

TEST(TopicsTest, SameSeedSameAssignments) {
  std::vector<std::vector<std::string>> docs;
  Rng rng(2);
  for (int d = 0; d < 20; ++d) {
    std::vector<std::string> doc;
    for (int i = 0; i < 30; ++i) doc.push_back("w" + std::to_string(rng.below(40)));
    docs.push_back(doc);
  }
  TopicConfig config;
  config.topics = 5;
  config.iterations = 50;
  const TopicModel a = fit_topics(docs, config);
  const TopicModel b = fit_topics(docs, config);
  for (std::size_t d = 0; d < docs.size(); ++d) EXPECT_EQ(a.assignments(d), b.assignments(d));
  EXPECT_EQ(a.topic_term_counts(), b.topic_term_counts());
}

TEST(TopicsTest, MoreTopicsThanTermsIsAnError) {
  const std::vector<std::vector<std::string>> docs = {{"a", "b"}};
  TopicConfig config;
  config.topics = 3;
  EXPECT_THROW(fit_topics(docs, config), Error);
  const std::vector<std::vector<std::string>> none;
  EXPECT_THROW(fit_topics(none, config), Error);
}

}  // namespace
}  // namespace news_placer
