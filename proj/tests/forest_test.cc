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

#include "news_placer/forest.h"

#include <numeric>

#include <gtest/gtest.h>

#include "news_placer/common.h"

namespace news_placer {
namespace {

// Two Gaussian-ish blobs around (0, 0) and (4, 4).
void blobs(Eigen::MatrixXd* rows, std::vector<int>* labels, int per_class, std::uint64_t seed) {
  Rng rng(seed);
  *rows = Eigen::MatrixXd(2 * per_class, 2);
  labels->clear();
  for (int i = 0; i < 2 * per_class; ++i) {
    const int label = i < per_class ? 0 : 1;
    rows->row(i) << 4.0 * label + rng.uniform() - 0.5, 4.0 * label + rng.uniform() - 0.5;
    labels->push_back(label);
  }
}

TEST(RandomForestTest, SingleClassIsConstant) {
  Eigen::MatrixXd rows(3, 2);
  rows << 1, 2, 3, 4, 5, 6;
  const std::vector<int> labels = {7, 7, 7};
  const RandomForest model = train_random_forest(rows, labels, ForestConfig{});
  const std::vector<double> probe = {100.0, -3.0};
  const Prediction p = model.predict(probe);
  EXPECT_EQ(model.classes(), std::vector<int>{7});
  EXPECT_EQ(p.label, 7);
  EXPECT_DOUBLE_EQ(p.confidence[0], 1.0);
  EXPECT_EQ(model.confidence(probe, 3), 0.0);
}

TEST(RandomForestTest, SeparableBlobsAreLearned) {
  Eigen::MatrixXd rows;
  std::vector<int> labels;
  blobs(&rows, &labels, 30, 7);
  ForestConfig config;
  config.seed = 7;
  const RandomForest model = train_random_forest(rows, labels, config);
  for (Eigen::Index r = 0; r < rows.rows(); ++r) {
    EXPECT_EQ(model.predict(rows, r).label, labels[static_cast<std::size_t>(r)]);
  }
  const std::vector<double> near_one = {3.9, 4.2};
  EXPECT_EQ(model.predict(near_one).label, 1);
}

TEST(RandomForestTest, XorNeedsDepthTwo) {
  Eigen::MatrixXd rows(4, 2);
  rows << 0, 0, 0, 1, 1, 0, 1, 1;
  const std::vector<int> labels = {0, 1, 1, 0};
  ForestConfig config;
  config.n_trees = 50;
  config.max_depth = 3;
  config.min_leaf = 1;
  config.features_per_split = 2;
  const RandomForest model = train_random_forest(rows, labels, config);
  int correct = 0;
  for (Eigen::Index r = 0; r < 4; ++r) {
    correct += model.predict(rows, r).label == labels[static_cast<std::size_t>(r)];
  }
  EXPECT_EQ(correct, 4);
}

TEST(RandomForestTest, ConfidencesSumToOne) {
  Eigen::MatrixXd rows;
  std::vector<int> labels;
  blobs(&rows, &labels, 20, 3);
  labels[0] = 2;
  const RandomForest model = train_random_forest(rows, labels, ForestConfig{});
  for (Eigen::Index r = 0; r < rows.rows(); ++r) {
    const auto c = model.predict(rows, r).confidence;
    EXPECT_NEAR(std::accumulate(c.begin(), c.end(), 0.0), 1.0, 1e-9);
  }
}

TEST(RandomForestTest, TiesGoToTheSmallerClass) {
  // Identical rows with opposite labels: every leaf is 50/50.
  Eigen::MatrixXd rows = Eigen::MatrixXd::Zero(4, 1);
  const std::vector<int> labels = {1, 0, 1, 0};
  ForestConfig config;
  config.n_trees = 2;
  const RandomForest model = train_random_forest(rows, labels, config);
  const std::vector<double> probe = {0.0};
  const Prediction p = model.predict(probe);
  EXPECT_EQ(p.label, 0);
}

TEST(RandomForestTest, Errors) {
  EXPECT_THROW(train_random_forest(Eigen::MatrixXd(0, 2), std::vector<int>{}, ForestConfig{}),
               Error);
  Eigen::MatrixXd rows(2, 2);
  rows << 0, 1, 1, 0;
  EXPECT_THROW(train_random_forest(rows, std::vector<int>{1}, ForestConfig{}), Error);
  const RandomForest model = train_random_forest(rows, std::vector<int>{0, 1}, ForestConfig{});
  const std::vector<double> wrong = {1.0, 2.0, 3.0};
  EXPECT_THROW(model.predict(wrong), Error);
}

TEST(RandomForestTest, JsonRoundTrip) {
  Eigen::MatrixXd rows;
  std::vector<int> labels;
  blobs(&rows, &labels, 15, 5);
  ForestConfig config;
  config.n_trees = 10;
  const RandomForest model = train_random_forest(rows, labels, config);
  const RandomForest back = RandomForest::from_json(model.to_json());
  EXPECT_EQ(back.to_json(), model.to_json());
  for (Eigen::Index r = 0; r < rows.rows(); ++r) {
    EXPECT_EQ(back.predict(rows, r).confidence, model.predict(rows, r).confidence);
  }
  EXPECT_THROW(RandomForest::from_json("{}"), Error);
}

TEST(RandomForestTest, ThreadCountDoesNotChangeTheModel) {
  Eigen::MatrixXd rows;
  std::vector<int> labels;
  blobs(&rows, &labels, 40, 11);
  ForestConfig one;
  one.n_trees = 30;
  one.class_weighting = true;
  ForestConfig eight = one;
  eight.threads = 8;
  EXPECT_EQ(train_random_forest(rows, labels, one).to_json(),
            train_random_forest(rows, labels, eight).to_json());
  ForestConfig reseeded = one;
  reseeded.seed = 2;
  EXPECT_NE(train_random_forest(rows, labels, one).to_json(),
            train_random_forest(rows, labels, reseeded).to_json());
}

}  // namespace
}  // namespace news_placer
