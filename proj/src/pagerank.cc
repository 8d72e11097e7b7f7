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

#include "news_placer/pagerank.h"

#include <algorithm>

#include <fmt/format.h>

namespace news_placer {

ConvergenceError::ConvergenceError(int iterations, double residual)
    : Error(fmt::format("pagerank did not converge in {} iterations (residual {})",
                        iterations, residual)),
      residual_(residual) {}

Eigen::SparseMatrix<double> transition_matrix(const DirectedGraph& graph) {
  auto edges = graph.edges;
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  std::vector<double> out_degree(graph.vertex_count, 0.0);
  for (const auto& [from, to] : edges) {
    if (from >= graph.vertex_count || to >= graph.vertex_count) {
      throw Error("pagerank: edge endpoint outside the graph");
    }
    if (from == to) throw Error("pagerank: self-loop");
    out_degree[from] += 1.0;
  }
  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(edges.size());
  for (const auto& [from, to] : edges) {
    triplets.emplace_back(static_cast<int>(to), static_cast<int>(from),
                          1.0 / out_degree[from]);
  }
  const auto n = static_cast<Eigen::Index>(graph.vertex_count);
  Eigen::SparseMatrix<double> m(n, n);
  m.setFromTriplets(triplets.begin(), triplets.end());
  return m;
}

Eigen::VectorXd pagerank(const DirectedGraph& graph, const PageRankConfig& config) {
  if (graph.vertex_count == 0) throw Error("pagerank: empty graph");
  const Eigen::SparseMatrix<double> m = transition_matrix(graph);
  const auto n = static_cast<Eigen::Index>(graph.vertex_count);
  const double inv_n = 1.0 / static_cast<double>(n);

  Eigen::VectorXd dangling = Eigen::VectorXd::Zero(n);
  for (Eigen::Index c = 0; c < m.outerSize(); ++c) {
    if (m.col(c).nonZeros() == 0) dangling(c) = 1.0;
  }

  Eigen::VectorXd scores = Eigen::VectorXd::Constant(n, inv_n);
  double residual = 0.0;
  for (int iter = 0; iter < config.max_iterations; ++iter) {
    const double dangling_mass = dangling.dot(scores);
    Eigen::VectorXd next = config.damping * (m * scores);
    next.array() += config.damping * dangling_mass * inv_n + (1.0 - config.damping) * inv_n;
    residual = (next - scores).lpNorm<1>();
    scores = std::move(next);
    if (residual < config.tolerance) return scores / scores.sum();
  }
  throw ConvergenceError(config.max_iterations, residual);
}

}  // namespace news_placer
