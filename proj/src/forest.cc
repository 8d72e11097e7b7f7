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

#include <algorithm>
#include <cmath>
#include <numeric>

#include <json.hpp>

#include "news_placer/common.h"

namespace news_placer {
namespace {

using Json = nlohmann::json;

constexpr double kMinGain = 1e-12;

struct TreeBuilder {
  const Eigen::MatrixXd& x;
  const std::vector<int>& y;  // class indices
  const std::vector<double>& class_weight;
  const ForestConfig& config;
  int features_per_split;
  std::size_t n_classes;
  Rng rng;
  DecisionTree tree;

  double gini(const std::vector<double>& w, double total) const {
    if (total <= 0.0) return 0.0;
    double s = 0.0;
    for (double v : w) s += (v / total) * (v / total);
    return 1.0 - s;
  }

  std::vector<double> histogram(std::span<const std::size_t> idx) const {
    std::vector<double> h(n_classes, 0.0);
    for (std::size_t i : idx) h[static_cast<std::size_t>(y[i])] += class_weight[static_cast<std::size_t>(y[i])];
    return h;
  }

  int make_leaf(std::span<const std::size_t> idx) {
    TreeNode node;
    node.distribution = histogram(idx);
    const double total = std::accumulate(node.distribution.begin(), node.distribution.end(), 0.0);
    for (double& v : node.distribution) v /= total;
    tree.nodes.push_back(std::move(node));
    return static_cast<int>(tree.nodes.size()) - 1;
  }

  std::vector<int> feature_subset() {
    std::vector<int> all(static_cast<std::size_t>(x.cols()));
    std::iota(all.begin(), all.end(), 0);
    const auto k = static_cast<std::size_t>(features_per_split);
    for (std::size_t i = 0; i < k; ++i) {
      std::swap(all[i], all[i + rng.below(all.size() - i)]);
    }
    all.resize(k);
    std::sort(all.begin(), all.end());
    return all;
  }

  int build(std::vector<std::size_t> idx, int depth) {
    const auto parent = histogram(idx);
    const double parent_total = std::accumulate(parent.begin(), parent.end(), 0.0);
    const double parent_gini = gini(parent, parent_total);
    const auto min_leaf = static_cast<std::size_t>(std::max(1, config.min_leaf));
    if (depth >= config.max_depth || parent_gini <= 0.0 || idx.size() < 2 * min_leaf) {
      return make_leaf(idx);
    }

    int best_feature = -1;
    double best_threshold = 0.0;
    double best_gain = kMinGain;
    std::vector<std::pair<double, std::size_t>> values(idx.size());
    for (int f : feature_subset()) {
      for (std::size_t i = 0; i < idx.size(); ++i) values[i] = {x(static_cast<Eigen::Index>(idx[i]), f), idx[i]};
      std::sort(values.begin(), values.end());
      std::vector<double> left(n_classes, 0.0);
      double left_total = 0.0;
      for (std::size_t i = 0; i + 1 < values.size(); ++i) {
        const auto c = static_cast<std::size_t>(y[values[i].second]);
        left[c] += class_weight[c];
        left_total += class_weight[c];
        if (values[i].first == values[i + 1].first) continue;
        if (i + 1 < min_leaf || values.size() - i - 1 < min_leaf) continue;
        std::vector<double> right(n_classes);
        for (std::size_t k = 0; k < n_classes; ++k) right[k] = parent[k] - left[k];
        const double right_total = parent_total - left_total;
        const double gain = parent_gini - (left_total * gini(left, left_total) +
                                           right_total * gini(right, right_total)) /
                                              parent_total;
        if (gain > best_gain) {
          best_gain = gain;
          best_feature = f;
          best_threshold = 0.5 * (values[i].first + values[i + 1].first);
        }
      }
    }
    if (best_feature < 0) return make_leaf(idx);

    std::vector<std::size_t> left_idx;
    std::vector<std::size_t> right_idx;
    for (std::size_t i : idx) {
      (x(static_cast<Eigen::Index>(i), best_feature) <= best_threshold ? left_idx : right_idx)
          .push_back(i);
    }
    idx.clear();
    idx.shrink_to_fit();
    tree.nodes.push_back(TreeNode{best_feature, best_threshold, -1, -1, {}});
    const int self = static_cast<int>(tree.nodes.size()) - 1;
    const int l = build(std::move(left_idx), depth + 1);
    const int r = build(std::move(right_idx), depth + 1);
    tree.nodes[static_cast<std::size_t>(self)].left = l;
    tree.nodes[static_cast<std::size_t>(self)].right = r;
    return self;
  }
};

}  // namespace

const std::vector<double>& DecisionTree::leaf(std::span<const double> row) const {
  std::size_t n = 0;
  while (nodes[n].feature >= 0) {
    n = static_cast<std::size_t>(row[static_cast<std::size_t>(nodes[n].feature)] <=
                                         nodes[n].threshold
                                     ? nodes[n].left
                                     : nodes[n].right);
  }
  return nodes[n].distribution;
}

Prediction RandomForest::predict(std::span<const double> row) const {
  if (row.size() != dimension_) {
    throw Error("forest: row has " + std::to_string(row.size()) + " features, model expects " +
                std::to_string(dimension_));
  }
  Prediction p;
  p.confidence.assign(classes_.size(), 0.0);
  for (const auto& tree : trees_) {
    const auto& leaf = tree.leaf(row);
    for (std::size_t c = 0; c < leaf.size(); ++c) p.confidence[c] += leaf[c];
  }
  for (double& c : p.confidence) c /= static_cast<double>(trees_.size());
  std::size_t best = 0;
  for (std::size_t c = 1; c < p.confidence.size(); ++c) {
    if (p.confidence[c] > p.confidence[best]) best = c;
  }
  p.label = classes_[best];
  return p;
}

Prediction RandomForest::predict(const Eigen::MatrixXd& rows, Eigen::Index r) const {
  std::vector<double> row(static_cast<std::size_t>(rows.cols()));
  for (Eigen::Index c = 0; c < rows.cols(); ++c) row[static_cast<std::size_t>(c)] = rows(r, c);
  return predict(row);
}

double RandomForest::confidence(std::span<const double> row, int label) const {
  const auto p = predict(row);
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    if (classes_[c] == label) return p.confidence[c];
  }
  return 0.0;
}

RandomForest train_random_forest(const Eigen::MatrixXd& rows, std::span<const int> labels,
                                 const ForestConfig& config) {
  if (rows.rows() == 0) throw Error("forest: no training rows");
  if (static_cast<std::size_t>(rows.rows()) != labels.size()) {
    throw Error("forest: label count does not match row count");
  }
  if (config.n_trees < 1 || config.max_depth < 0) throw Error("forest: invalid configuration");

  RandomForest model;
  model.config_ = config;
  model.dimension_ = static_cast<std::size_t>(rows.cols());
  model.classes_.assign(labels.begin(), labels.end());
  std::sort(model.classes_.begin(), model.classes_.end());
  model.classes_.erase(std::unique(model.classes_.begin(), model.classes_.end()),
                       model.classes_.end());

  std::vector<int> y(labels.size());
  std::vector<double> counts(model.classes_.size(), 0.0);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    y[i] = static_cast<int>(std::lower_bound(model.classes_.begin(), model.classes_.end(),
                                             labels[i]) -
                            model.classes_.begin());
    counts[static_cast<std::size_t>(y[i])] += 1.0;
  }
  std::vector<double> weight(model.classes_.size(), 1.0);
  if (config.class_weighting) {
    for (std::size_t c = 0; c < weight.size(); ++c) {
      weight[c] = static_cast<double>(labels.size()) /
                  (static_cast<double>(weight.size()) * counts[c]);
    }
  }
  int per_split = config.features_per_split;
  if (per_split <= 0) {
    per_split = static_cast<int>(std::floor(std::sqrt(static_cast<double>(rows.cols()))));
  }
  per_split = std::clamp(per_split, 1, std::max<int>(1, static_cast<int>(rows.cols())));

  model.trees_.resize(static_cast<std::size_t>(config.n_trees));
  const std::size_t n = labels.size();
  parallel_for(model.trees_.size(), config.threads, [&](std::size_t t) {
    TreeBuilder builder{rows, y, weight, config, per_split, model.classes_.size(),
                        Rng(mix_seed(config.seed, static_cast<std::uint64_t>(t))), {}};
    std::vector<std::size_t> sample(n);
    for (auto& s : sample) s = builder.rng.below(n);
    std::sort(sample.begin(), sample.end());
    builder.build(std::move(sample), 0);
    model.trees_[t] = std::move(builder.tree);
  });
  return model;
}

std::string RandomForest::to_json() const {
  Json j;
  j["format"] = "news_placer.forest/1";
  j["classes"] = classes_;
  j["dimension"] = dimension_;
  j["config"] = {{"n_trees", config_.n_trees},
                 {"max_depth", config_.max_depth},
                 {"features_per_split", config_.features_per_split},
                 {"min_leaf", config_.min_leaf},
                 {"seed", config_.seed},
                 {"class_weighting", config_.class_weighting}};
  Json trees = Json::array();
  for (const auto& tree : trees_) {
    Json nodes = Json::array();
    for (const auto& node : tree.nodes) {
      if (node.feature < 0) {
        nodes.push_back({{"leaf", node.distribution}});
      } else {
        nodes.push_back({{"feature", node.feature},
                         {"threshold", node.threshold},
                         {"left", node.left},
                         {"right", node.right}});
      }
    }
    trees.push_back(std::move(nodes));
  }
  j["trees"] = std::move(trees);
  return j.dump();
}

RandomForest RandomForest::from_json(std::string_view json) {
  try {
    const Json j = Json::parse(json);
    if (j.at("format") != "news_placer.forest/1") throw Error("forest: unknown model format");
    RandomForest model;
    model.classes_ = j.at("classes").get<std::vector<int>>();
    model.dimension_ = j.at("dimension").get<std::size_t>();
    const auto& c = j.at("config");
    model.config_.n_trees = c.at("n_trees");
    model.config_.max_depth = c.at("max_depth");
    model.config_.features_per_split = c.at("features_per_split");
    model.config_.min_leaf = c.at("min_leaf");
    model.config_.seed = c.at("seed");
    model.config_.class_weighting = c.at("class_weighting");
    for (const auto& nodes : j.at("trees")) {
      DecisionTree tree;
      for (const auto& node : nodes) {
        TreeNode n;
        if (node.contains("leaf")) {
          n.distribution = node.at("leaf").get<std::vector<double>>();
        } else {
          n.feature = node.at("feature");
          n.threshold = node.at("threshold");
          n.left = node.at("left");
          n.right = node.at("right");
        }
        tree.nodes.push_back(std::move(n));
      }
      model.trees_.push_back(std::move(tree));
    }
    return model;
  } catch (const Json::exception& e) {
    throw Error(std::string("forest: malformed model: ") + e.what());
  }
}

}  // namespace news_placer
