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

// Spherical k-means and x-means over unit-normalized rows.
//
// x-means grows the number of clusters by tentatively splitting every
// centroid in two and keeping a split only when the Bayesian information
// criterion of the local two-cluster model beats the one-cluster model.
// The likelihood is that of a spherical Gaussian mixture with a shared
// per-dimension variance; each cluster costs (dim + 1) free parameters,
// where dim counts the dimensions that are non-zero somewhere in the data
// being scored.

#ifndef NEWS_PLACER_CLUSTERING_H_
#define NEWS_PLACER_CLUSTERING_H_

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "news_placer/textproc.h"

namespace news_placer {

struct Clustering {
  int k = 0;
  std::vector<int> assignments;  // one cluster id per row
  Eigen::MatrixXd centroids;     // k x dim, unit rows
  double bic = 0.0;

  std::vector<std::size_t> cluster_sizes() const;
};

struct XMeansConfig {
  int k_min = 2;
  int k_max = 12;
  std::uint64_t seed = 1;
  int max_iterations = 100;
};

// Rows scaled to unit L2 norm; throws if any row is all zero.
Eigen::MatrixXd normalize_rows(const Eigen::MatrixXd& points);

// Lloyd iterations with cosine similarity, starting from `initial`
// (k x dim, unit rows). Empty clusters are re-seeded from the point least
// similar to its own centroid.
Clustering spherical_kmeans(const Eigen::MatrixXd& points,
                            Eigen::MatrixXd initial, int max_iterations = 100);

// k-means++ seeding on cosine distance.
Eigen::MatrixXd kmeans_plus_plus(const Eigen::MatrixXd& points, int k,
                                 std::uint64_t seed);

// BIC of a hard clustering under the spherical Gaussian model.
double bic_score(const Eigen::MatrixXd& points,
                 std::span<const int> assignments, int k);

// Requires 1 <= k_min <= k_max <= rows. Throws when every row is zero.
Clustering xmeans(const Eigen::MatrixXd& points, const XMeansConfig& config);

// Builds a dense matrix over the union of terms and runs xmeans.
Clustering xmeans(std::span<const TermVector> vectors, int k_min, int k_max,
                  std::uint64_t seed);

// Dense matrix of the given vectors over a sorted term list.
Eigen::MatrixXd to_dense(std::span<const TermVector> vectors,
                         std::vector<std::string>* terms = nullptr);

}  // namespace news_placer

#endif  // NEWS_PLACER_CLUSTERING_H_
