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

#ifndef NEWS_PLACER_TOPICS_H_
#define NEWS_PLACER_TOPICS_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace news_placer {

struct TopicConfig {
  int topics = 50;
  int iterations = 200;
  std::uint64_t seed = 1;
  // Symmetric priors; alpha <= 0 means 50 / topics.
  double alpha = -1.0;
  double eta = 0.01;
};

// LDA point estimate from a single collapsed Gibbs sample.
class TopicModel {
 public:
  int topic_count() const { return static_cast<int>(topic_term_.rows()); }
  const std::vector<std::string>& vocabulary() const { return vocabulary_; }
  std::uint64_t seed() const { return seed_; }

  // Per-token topic assignments of fitted document `doc`.
  const std::vector<int>& assignments(std::size_t doc) const {
    return assignments_[doc];
  }
  std::size_t document_count() const { return assignments_.size(); }

  // argmax of the doc-topic counts of a fitted document; ties go to the
  // lowest topic id.
  int dominant_topic(std::size_t doc) const;

  // Single most likely topic for an arbitrary bag of terms under the fitted
  // topic-term distributions. Unknown terms are ignored; an empty bag gets
  // topic 0.
  int dominant_topic(std::span<const std::string> terms) const;

  // The m highest-count terms of a topic; ties break lexicographically.
  std::vector<std::string> top_terms(int topic, std::size_t m) const;

  const Eigen::MatrixXi& topic_term_counts() const { return topic_term_; }
  const Eigen::MatrixXi& doc_topic_counts() const { return doc_topic_; }

 private:
  friend TopicModel fit_topics(std::span<const std::vector<std::string>>,
                               const TopicConfig&);

  std::vector<std::string> vocabulary_;
  Eigen::MatrixXi topic_term_;  // topics x terms
  Eigen::MatrixXi doc_topic_;   // docs x topics
  std::vector<std::vector<int>> assignments_;
  double eta_ = 0.01;
  std::uint64_t seed_ = 0;
};

// Collapsed Gibbs sampling. Throws when docs is empty, topics < 1, or
// topics exceeds the vocabulary size.
TopicModel fit_topics(std::span<const std::vector<std::string>> docs,
                      const TopicConfig& config);

}  // namespace news_placer

#endif  // NEWS_PLACER_TOPICS_H_
