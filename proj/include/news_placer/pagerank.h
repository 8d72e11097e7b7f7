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

#ifndef NEWS_PLACER_PAGERANK_H_
#define NEWS_PLACER_PAGERANK_H_

#include <cstddef>
#include <utility>
#include <vector>

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include "news_placer/common.h"

namespace news_placer {

struct DirectedGraph {
  std::size_t vertex_count = 0;
  // Duplicate edges collapse to one; self-loops are rejected.
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

struct PageRankConfig {
  double damping = 0.85;
  double tolerance = 1e-9;
  int max_iterations = 200;
};

class ConvergenceError : public Error {
 public:
  ConvergenceError(int iterations, double residual);
  double residual() const { return residual_; }

 private:
  double residual_;
};

// Column-stochastic transition matrix: entry (j, i) = 1 / outdeg(i) for
// each edge i -> j. Dangling columns are all zero.
Eigen::SparseMatrix<double> transition_matrix(const DirectedGraph& graph);

// Power iteration with uniform teleport; dangling mass is spread
// uniformly. Stops once the L1 change drops below the tolerance and
// returns scores summing to 1.
Eigen::VectorXd pagerank(const DirectedGraph& graph, const PageRankConfig& config = {});

}  // namespace news_placer

#endif  // NEWS_PLACER_PAGERANK_H_
