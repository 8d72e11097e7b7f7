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

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

#include "news_placer/common.h"

namespace news_placer {

int TopicModel::dominant_topic(std::size_t doc) const {
  int best = 0;
  for (int t = 1; t < topic_count(); ++t) {
    if (doc_topic_(static_cast<Eigen::Index>(doc), t) >
        doc_topic_(static_cast<Eigen::Index>(doc), best)) {
      best = t;
    }
  }
  return best;
}

int TopicModel::dominant_topic(std::span<const std::string> terms) const {
  const auto vocab_size = static_cast<double>(vocabulary_.size());
  Eigen::VectorXd score = Eigen::VectorXd::Zero(topic_count());
  Eigen::VectorXd totals = topic_term_.rowwise().sum().cast<double>();
  bool any = false;
  for (const auto& term : terms) {
    auto it = std::lower_bound(vocabulary_.begin(), vocabulary_.end(), term);
    if (it == vocabulary_.end() || *it != term) continue;
    any = true;
    const auto w = static_cast<Eigen::Index>(it - vocabulary_.begin());
    for (int t = 0; t < topic_count(); ++t) {
      score(t) += std::log((topic_term_(t, w) + eta_) /
                           (totals(t) + eta_ * vocab_size));
    }
  }
  if (!any) return 0;
  int best = 0;
  for (int t = 1; t < topic_count(); ++t) {
    if (score(t) > score(best)) best = t;
  }
  return best;
}

std::vector<std::string> TopicModel::top_terms(int topic, std::size_t m) const {
  std::vector<std::size_t> order(vocabulary_.size());
  std::iota(order.begin(), order.end(), 0);
  auto row = topic_term_.row(topic);
  // Vocabulary is sorted, so index order is lexicographic order.
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return row(static_cast<Eigen::Index>(a)) > row(static_cast<Eigen::Index>(b));
  });
  std::vector<std::string> out;
  for (std::size_t i = 0; i < order.size() && out.size() < m; ++i) {
    if (row(static_cast<Eigen::Index>(order[i])) == 0) break;
    out.push_back(vocabulary_[order[i]]);
  }
  return out;
}

TopicModel fit_topics(std::span<const std::vector<std::string>> docs,
                      const TopicConfig& config) {
  if (docs.empty()) throw Error("topic model: no documents");
  if (config.topics < 1) throw Error("topic model: topic count must be >= 1");

  std::set<std::string> terms;
  for (const auto& doc : docs) terms.insert(doc.begin(), doc.end());
  if (static_cast<std::size_t>(config.topics) > terms.size()) {
    throw Error("topic model: " + std::to_string(config.topics) +
                " topics exceed vocabulary size " +
                std::to_string(terms.size()));
  }

  TopicModel model;
  model.vocabulary_.assign(terms.begin(), terms.end());
  model.eta_ = config.eta;
  model.seed_ = config.seed;
  const int topics = config.topics;
  const double alpha = config.alpha > 0.0 ? config.alpha : 50.0 / topics;
  const double eta = config.eta;
  const auto vocab_size = static_cast<Eigen::Index>(model.vocabulary_.size());

  std::vector<std::vector<Eigen::Index>> word_ids(docs.size());
  for (std::size_t d = 0; d < docs.size(); ++d) {
    word_ids[d].reserve(docs[d].size());
    for (const auto& term : docs[d]) {
      auto it = std::lower_bound(model.vocabulary_.begin(),
                                 model.vocabulary_.end(), term);
      word_ids[d].push_back(
          static_cast<Eigen::Index>(it - model.vocabulary_.begin()));
    }
  }

  model.topic_term_ = Eigen::MatrixXi::Zero(topics, vocab_size);
  model.doc_topic_ =
      Eigen::MatrixXi::Zero(static_cast<Eigen::Index>(docs.size()), topics);
  Eigen::VectorXi topic_totals = Eigen::VectorXi::Zero(topics);
  model.assignments_.resize(docs.size());

  Rng rng(config.seed);
  for (std::size_t d = 0; d < docs.size(); ++d) {
    auto& z = model.assignments_[d];
    z.resize(word_ids[d].size());
    for (std::size_t i = 0; i < z.size(); ++i) {
      const int t = static_cast<int>(rng.below(static_cast<std::size_t>(topics)));
      z[i] = t;
      model.topic_term_(t, word_ids[d][i]) += 1;
      model.doc_topic_(static_cast<Eigen::Index>(d), t) += 1;
      topic_totals(t) += 1;
    }
  }

  std::vector<double> weights(static_cast<std::size_t>(topics));
  const double eta_sum = eta * static_cast<double>(vocab_size);
  for (int iter = 0; iter < config.iterations; ++iter) {
    for (std::size_t d = 0; d < docs.size(); ++d) {
      const auto row = static_cast<Eigen::Index>(d);
      auto& z = model.assignments_[d];
      for (std::size_t i = 0; i < z.size(); ++i) {
        const Eigen::Index w = word_ids[d][i];
        const int old = z[i];
        model.topic_term_(old, w) -= 1;
        model.doc_topic_(row, old) -= 1;
        topic_totals(old) -= 1;

        double total = 0.0;
        for (int t = 0; t < topics; ++t) {
          total += (model.doc_topic_(row, t) + alpha) *
                   (model.topic_term_(t, w) + eta) / (topic_totals(t) + eta_sum);
          weights[static_cast<std::size_t>(t)] = total;
        }
        const double u = rng.uniform() * total;
        int chosen = topics - 1;
        for (int t = 0; t < topics; ++t) {
          if (u < weights[static_cast<std::size_t>(t)]) {
            chosen = t;
            break;
          }
        }
        z[i] = chosen;
        model.topic_term_(chosen, w) += 1;
        model.doc_topic_(row, chosen) += 1;
        topic_totals(chosen) += 1;
      }
    }
  }
  return model;
}

}  // namespace news_placer
