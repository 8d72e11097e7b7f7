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

#include "news_placer/clustering.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <set>

#include "news_placer/common.h"

namespace news_placer {
namespace {

constexpr double kVarianceFloor = 1e-12;

int active_dimensions(const Eigen::MatrixXd& points) {
  int active = 0;
  for (Eigen::Index c = 0; c < points.cols(); ++c) {
    if (points.col(c).cwiseAbs().maxCoeff() > 0.0) ++active;
  }
  return std::max(active, 1);
}

Eigen::MatrixXd select_rows(const Eigen::MatrixXd& points,
                            std::span<const Eigen::Index> rows) {
  Eigen::MatrixXd out(static_cast<Eigen::Index>(rows.size()), points.cols());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out.row(static_cast<Eigen::Index>(i)) = points.row(rows[i]);
  }
  return out;
}

void assign(const Eigen::MatrixXd& points, const Eigen::MatrixXd& centroids,
            std::vector<int>& assignments, Eigen::VectorXd& similarity) {
  const Eigen::MatrixXd sims = points * centroids.transpose();
  for (Eigen::Index i = 0; i < points.rows(); ++i) {
    Eigen::Index best = 0;
    for (Eigen::Index c = 1; c < sims.cols(); ++c) {
      if (sims(i, c) > sims(i, best)) best = c;
    }
    assignments[static_cast<std::size_t>(i)] = static_cast<int>(best);
    similarity(i) = sims(i, best);
  }
}

}  // namespace

std::vector<std::size_t> Clustering::cluster_sizes() const {
  std::vector<std::size_t> sizes(static_cast<std::size_t>(k), 0);
  for (int a : assignments) ++sizes[static_cast<std::size_t>(a)];
  return sizes;
}

Eigen::MatrixXd normalize_rows(const Eigen::MatrixXd& points) {
  Eigen::MatrixXd out = points;
  for (Eigen::Index i = 0; i < out.rows(); ++i) {
    const double norm = out.row(i).norm();
    if (norm == 0.0) throw Error("clustering: zero vector at row " + std::to_string(i));
    out.row(i) /= norm;
  }
  return out;
}

Eigen::MatrixXd kmeans_plus_plus(const Eigen::MatrixXd& points, int k,
                                 std::uint64_t seed) {
  const Eigen::Index n = points.rows();
  Rng rng(seed);
  Eigen::MatrixXd centroids(k, points.cols());
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  Eigen::Index first = static_cast<Eigen::Index>(rng.below(static_cast<std::size_t>(n)));
  centroids.row(0) = points.row(first);
  used[static_cast<std::size_t>(first)] = true;
  Eigen::VectorXd distance =
      (1.0 - (points * points.row(first).transpose()).array()).max(0.0).matrix();
  for (int c = 1; c < k; ++c) {
    const double total = distance.sum();
    Eigen::Index chosen = -1;
    if (total > 0.0) {
      const double u = rng.uniform() * total;
      double acc = 0.0;
      for (Eigen::Index i = 0; i < n; ++i) {
        acc += distance(i);
        if (u < acc && distance(i) > 0.0) {
          chosen = i;
          break;
        }
      }
      if (chosen < 0) {
        for (Eigen::Index i = n - 1; i >= 0; --i) {
          if (distance(i) > 0.0) {
            chosen = i;
            break;
          }
        }
      }
    }
    if (chosen < 0) {
      // Every point coincides with a chosen centroid.
      for (Eigen::Index i = 0; i < n && chosen < 0; ++i) {
        if (!used[static_cast<std::size_t>(i)]) chosen = i;
      }
      if (chosen < 0) chosen = 0;
    }
    used[static_cast<std::size_t>(chosen)] = true;
    centroids.row(c) = points.row(chosen);
    const Eigen::VectorXd d =
        (1.0 - (points * points.row(chosen).transpose()).array()).max(0.0).matrix();
    distance = distance.cwiseMin(d);
  }
  return centroids;
}

Clustering spherical_kmeans(const Eigen::MatrixXd& points,
                            Eigen::MatrixXd initial, int max_iterations) {
  const Eigen::Index n = points.rows();
  const int k = static_cast<int>(initial.rows());
  Clustering result;
  result.k = k;
  result.centroids = std::move(initial);
  result.assignments.assign(static_cast<std::size_t>(n), -1);
  Eigen::VectorXd similarity(n);
  std::vector<int> previous;

  for (int iter = 0; iter < max_iterations; ++iter) {
    assign(points, result.centroids, result.assignments, similarity);

    // Re-seed empty clusters from the worst-fitting point of a cluster that
    // can spare one.
    auto sizes = result.cluster_sizes();
    for (int c = 0; c < k; ++c) {
      if (sizes[static_cast<std::size_t>(c)] > 0) continue;
      Eigen::Index worst = -1;
      for (Eigen::Index i = 0; i < n; ++i) {
        const int owner = result.assignments[static_cast<std::size_t>(i)];
        if (sizes[static_cast<std::size_t>(owner)] < 2) continue;
        if (worst < 0 || similarity(i) < similarity(worst)) worst = i;
      }
      if (worst < 0) break;
      --sizes[static_cast<std::size_t>(result.assignments[static_cast<std::size_t>(worst)])];
      ++sizes[static_cast<std::size_t>(c)];
      result.assignments[static_cast<std::size_t>(worst)] = c;
      similarity(worst) = 1.0;
    }

    Eigen::MatrixXd sums = Eigen::MatrixXd::Zero(k, points.cols());
    for (Eigen::Index i = 0; i < n; ++i) {
      sums.row(result.assignments[static_cast<std::size_t>(i)]) += points.row(i);
    }
    for (int c = 0; c < k; ++c) {
      const double norm = sums.row(c).norm();
      if (norm > 0.0) result.centroids.row(c) = sums.row(c) / norm;
    }
    if (result.assignments == previous) break;
    previous = result.assignments;
  }
  return result;
}

double bic_score(const Eigen::MatrixXd& points, std::span<const int> assignments,
                 int k) {
  const auto n = static_cast<double>(points.rows());
  // Unit rows lie on a sphere, which removes one degree of freedom.
  const double dim = std::max(active_dimensions(points) - 1, 1);
  std::vector<double> counts(static_cast<std::size_t>(k), 0.0);
  Eigen::MatrixXd means = Eigen::MatrixXd::Zero(k, points.cols());
  for (Eigen::Index i = 0; i < points.rows(); ++i) {
    const int c = assignments[static_cast<std::size_t>(i)];
    counts[static_cast<std::size_t>(c)] += 1.0;
    means.row(c) += points.row(i);
  }
  int occupied = 0;
  for (int c = 0; c < k; ++c) {
    if (counts[static_cast<std::size_t>(c)] > 0) {
      means.row(c) /= counts[static_cast<std::size_t>(c)];
      ++occupied;
    }
  }
  double sse = 0.0;
  for (Eigen::Index i = 0; i < points.rows(); ++i) {
    sse += (points.row(i) - means.row(assignments[static_cast<std::size_t>(i)]))
               .squaredNorm();
  }
  const double dof = std::max(n - occupied, 1.0);
  const double variance = std::max(sse / dof, kVarianceFloor);

  double log_likelihood = -0.5 * n * std::log(2.0 * std::numbers::pi) -
                          0.5 * n * dim * std::log(variance) - 0.5 * dof;
  for (double count : counts) {
    if (count > 0) log_likelihood += count * std::log(count / n);
  }
  const double parameters = occupied * (dim + 1.0);
  return log_likelihood - 0.5 * parameters * std::log(n);
}

Clustering xmeans(const Eigen::MatrixXd& raw_points, const XMeansConfig& config) {
  const Eigen::Index n = raw_points.rows();
  if (config.k_min < 1 || config.k_min > config.k_max ||
      config.k_max > static_cast<int>(n)) {
    throw Error("xmeans: need 1 <= k_min <= k_max <= number of vectors");
  }
  if (raw_points.size() == 0 || raw_points.cwiseAbs().maxCoeff() == 0.0) {
    throw Error("xmeans: all vectors are zero");
  }
  const Eigen::MatrixXd points = normalize_rows(raw_points);

  Clustering current = spherical_kmeans(
      points, kmeans_plus_plus(points, config.k_min, mix_seed(config.seed, 0)),
      config.max_iterations);
  current.bic = bic_score(points, current.assignments, current.k);
  Clustering best = current;

  for (int round = 1; current.k < config.k_max; ++round) {
    struct Split {
      double gain;
      int cluster;
      Eigen::MatrixXd children;
    };
    std::vector<Split> splits;
    for (int c = 0; c < current.k; ++c) {
      std::vector<Eigen::Index> members;
      for (Eigen::Index i = 0; i < n; ++i) {
        if (current.assignments[static_cast<std::size_t>(i)] == c) members.push_back(i);
      }
      if (members.size() < 2) continue;
      const Eigen::MatrixXd local = select_rows(points, members);
      const std::vector<int> one(members.size(), 0);
      const double parent_bic = bic_score(local, one, 1);
      const auto seed = mix_seed(config.seed, static_cast<std::uint64_t>(round) * 7919u +
                                                  static_cast<std::uint64_t>(c));
      Clustering children = spherical_kmeans(local, kmeans_plus_plus(local, 2, seed),
                                             config.max_iterations);
      const auto sizes = children.cluster_sizes();
      if (sizes[0] == 0 || sizes[1] == 0) continue;
      const double child_bic = bic_score(local, children.assignments, 2);
      if (child_bic > parent_bic) {
        splits.push_back({child_bic - parent_bic, c, children.centroids});
      }
    }
    if (splits.empty()) break;

    // Largest gains first when the budget cannot take every split.
    std::stable_sort(splits.begin(), splits.end(),
                     [](const Split& a, const Split& b) { return a.gain > b.gain; });
    const auto budget = static_cast<std::size_t>(config.k_max - current.k);
    if (splits.size() > budget) splits.resize(budget);
    std::set<int> split_clusters;
    for (const auto& s : splits) split_clusters.insert(s.cluster);

    Eigen::MatrixXd centroids(current.k + static_cast<int>(splits.size()), points.cols());
    Eigen::Index row = 0;
    for (int c = 0; c < current.k; ++c) {
      if (split_clusters.count(c)) {
        const auto it = std::find_if(splits.begin(), splits.end(),
                                     [c](const Split& s) { return s.cluster == c; });
        centroids.row(row++) = it->children.row(0);
        centroids.row(row++) = it->children.row(1);
      } else {
        centroids.row(row++) = current.centroids.row(c);
      }
    }
    current = spherical_kmeans(points, std::move(centroids), config.max_iterations);
    current.bic = bic_score(points, current.assignments, current.k);
    if (current.bic > best.bic) best = current;
  }
  return best;
}

Eigen::MatrixXd to_dense(std::span<const TermVector> vectors,
                         std::vector<std::string>* terms) {
  std::set<std::string> all;
  for (const auto& v : vectors) {
    for (const auto& [term, w] : v.weights()) {
      if (w != 0.0) all.insert(term);
    }
  }
  std::map<std::string, Eigen::Index> column;
  for (const auto& term : all) {
    column.emplace(term, static_cast<Eigen::Index>(column.size()));
  }
  Eigen::MatrixXd dense = Eigen::MatrixXd::Zero(
      static_cast<Eigen::Index>(vectors.size()), static_cast<Eigen::Index>(all.size()));
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    for (const auto& [term, w] : vectors[i].weights()) {
      if (w != 0.0) dense(static_cast<Eigen::Index>(i), column.at(term)) = w;
    }
  }
  if (terms != nullptr) terms->assign(all.begin(), all.end());
  return dense;
}

Clustering xmeans(std::span<const TermVector> vectors, int k_min, int k_max,
                  std::uint64_t seed) {
  XMeansConfig config;
  config.k_min = k_min;
  config.k_max = k_max;
  config.seed = seed;
  return xmeans(to_dense(vectors), config);
}

}  // namespace news_placer
