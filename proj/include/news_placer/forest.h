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

// Random forest of axis-aligned Gini trees over dense feature rows.

#ifndef NEWS_PLACER_FOREST_H_
#define NEWS_PLACER_FOREST_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace news_placer {

struct ForestConfig {
  int n_trees = 100;
  int max_depth = 12;
  int features_per_split = 0;  // 0 means floor(sqrt(d)), at least 1
  int min_leaf = 2;
  std::uint64_t seed = 1;
  // Weight every class by n / (classes * n_c) in the impurity and leaves.
  bool class_weighting = false;
  int threads = 1;
};

struct TreeNode {
  int feature = -1;  // -1 marks a leaf
  double threshold = 0.0;  // go left when value <= threshold
  int left = -1;
  int right = -1;
  std::vector<double> distribution;  // leaves only, sums to 1
};

struct DecisionTree {
  std::vector<TreeNode> nodes;  // nodes[0] is the root

  const std::vector<double>& leaf(std::span<const double> row) const;
};

struct Prediction {
  std::vector<double> confidence;  // aligned with the model's classes
  int label = 0;                   // argmax, ties to the smaller class
};

class RandomForest {
 public:
  const std::vector<int>& classes() const { return classes_; }
  const std::vector<DecisionTree>& trees() const { return trees_; }
  const ForestConfig& config() const { return config_; }
  std::size_t dimension() const { return dimension_; }

  // Throws on dimension mismatch.
  Prediction predict(std::span<const double> row) const;
  Prediction predict(const Eigen::MatrixXd& rows, Eigen::Index r) const;
  // Confidence of `label`; 0 when the label never occurred in training.
  double confidence(std::span<const double> row, int label) const;

  std::string to_json() const;
  static RandomForest from_json(std::string_view json);

 private:
  friend RandomForest train_random_forest(const Eigen::MatrixXd&, std::span<const int>,
                                          const ForestConfig&);
  std::vector<int> classes_;
  std::vector<DecisionTree> trees_;
  ForestConfig config_;
  std::size_t dimension_ = 0;
};

// Throws on zero rows or a label count that differs from the row count.
RandomForest train_random_forest(const Eigen::MatrixXd& rows, std::span<const int> labels,
                                 const ForestConfig& config);

}  // namespace news_placer

#endif  // NEWS_PLACER_FOREST_H_
