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

#include <set>

#include <gtest/gtest.h>

#include "news_placer/common.h"

namespace news_placer {
namespace {

// Plain dense power iteration with uniform teleport and dangling mass
// spread evenly; no convergence test, just a fixed number of steps.
std::vector<double> power_iteration(const DirectedGraph& g, double d, int steps) {
  const std::size_t n = g.vertex_count;
  const std::set<std::pair<std::size_t, std::size_t>> edges(g.edges.begin(), g.edges.end());
  std::vector<std::vector<std::size_t>> out(n);
  for (const auto& [a, b] : edges) out[a].push_back(b);
  std::vector<double> s(n, 1.0 / static_cast<double>(n));
  for (int step = 0; step < steps; ++step) {
    std::vector<double> next(n, (1.0 - d) / static_cast<double>(n));
    for (std::size_t v = 0; v < n; ++v) {
      if (out[v].empty()) {
        for (auto& x : next) x += d * s[v] / static_cast<double>(n);
      } else {
        for (auto w : out[v]) next[w] += d * s[v] / static_cast<double>(out[v].size());
      }
    }
    s = next;
  }
  return s;
}

TEST(PageRankTest, SingleVertex) {
  DirectedGraph g;
  g.vertex_count = 1;
  const auto s = pagerank(g);
  ASSERT_EQ(s.size(), 1);
  EXPECT_NEAR(s(0), 1.0, 1e-12);
}

TEST(PageRankTest, DanglingSinkRanksHighest) {
  DirectedGraph g;
  g.vertex_count = 3;
  g.edges = {{0, 1}, {0, 2}, {1, 2}};
  const auto s = pagerank(g);
  EXPECT_GT(s(2), s(1));
  EXPECT_GT(s(1), s(0));
  EXPECT_NEAR(s.sum(), 1.0, 1e-12);
  const auto oracle = power_iteration(g, 0.85, 100);
  for (int v = 0; v < 3; ++v) EXPECT_NEAR(s(v), oracle[static_cast<std::size_t>(v)], 1e-9);
}

TEST(PageRankTest, RingIsUniform) {
  for (std::size_t k : {3u, 7u}) {
    DirectedGraph g;
    g.vertex_count = k;
    for (std::size_t v = 0; v < k; ++v) g.edges.emplace_back(v, (v + 1) % k);
    const auto s = pagerank(g);
    for (std::size_t v = 0; v < k; ++v) {
      EXPECT_NEAR(s(static_cast<Eigen::Index>(v)), 1.0 / static_cast<double>(k), 1e-12);
    }
  }
}

TEST(PageRankTest, DuplicateEdgesCollapse) {
  DirectedGraph a;
  a.vertex_count = 3;
  a.edges = {{0, 1}, {1, 2}};
  DirectedGraph b = a;
  b.edges.push_back({0, 1});
  EXPECT_TRUE(pagerank(a).isApprox(pagerank(b), 1e-15));
}

TEST(PageRankTest, BadGraphsAreErrors) {
  DirectedGraph loop;
  loop.vertex_count = 2;
  loop.edges = {{1, 1}};
  EXPECT_THROW(pagerank(loop), Error);
  EXPECT_THROW(pagerank(DirectedGraph{}), Error);
  DirectedGraph outside;
  outside.vertex_count = 2;
  outside.edges = {{0, 5}};
  EXPECT_THROW(pagerank(outside), Error);
}

TEST(PageRankTest, IterationCapRaises) {
  DirectedGraph g;
  g.vertex_count = 3;
  g.edges = {{0, 1}, {1, 2}};
  PageRankConfig config;
  config.max_iterations = 1;
  EXPECT_THROW(pagerank(g, config), ConvergenceError);
}

TEST(PageRankTest, MatchesPowerIterationOnRandomGraphs) {
  // The default stopping rule leaves up to tol * d / (1 - d) of error, so
  // the comparison runs with a tighter tolerance.
  PageRankConfig config;
  config.tolerance = 1e-12;
  Rng rng(21);
  for (int trial = 0; trial < 25; ++trial) {
    DirectedGraph g;
    g.vertex_count = 50;
    for (std::size_t a = 0; a < 50; ++a) {
      for (std::size_t b = 0; b < 50; ++b) {
        if (a != b && rng.bernoulli(0.06)) g.edges.emplace_back(a, b);
      }
    }
    const auto s = pagerank(g, config);
    const auto oracle = power_iteration(g, 0.85, 100);
    double l1 = 0.0;
    for (std::size_t v = 0; v < 50; ++v) {
      l1 += std::abs(s(static_cast<Eigen::Index>(v)) - oracle[v]);
    }
    EXPECT_LE(l1, 1e-9) << "graph " << trial;
  }
}

}  // namespace
}  // namespace news_placer
