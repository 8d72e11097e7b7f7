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

#include "news_placer/metrics.h"

#include <gtest/gtest.h>

#include "news_placer/common.h"

namespace news_placer {
namespace {

std::vector<int> repeat(std::initializer_list<std::pair<int, int>> runs) {
  std::vector<int> out;
  for (const auto& [value, count] : runs) out.insert(out.end(), count, value);
  return out;
}

TEST(F1Test, HarmonicMean) {
  EXPECT_NEAR(f1_score(0.930, 0.550), 0.691, 0.001);
  EXPECT_EQ(f1_score(0.0, 0.0), 0.0);
  EXPECT_EQ(f1_score(1.0, 1.0), 1.0);
}

TEST(PrecisionRecallTest, HandCounts) {
  // tp = 1, fp = 1, fn = 3, plus one true negative.
  const std::vector<int> predicted = {1, 1, 0, 0, 0, 0};
  const std::vector<int> truth = {1, 0, 1, 1, 1, 0};
  const PrfScore s = precision_recall_f1(predicted, truth, 1);
  EXPECT_DOUBLE_EQ(s.precision, 0.5);
  EXPECT_DOUBLE_EQ(s.recall, 0.25);
  EXPECT_NEAR(s.f1, 0.3333, 1e-4);
  const PrfScore perfect = precision_recall_f1(truth, truth, 1);
  EXPECT_EQ(perfect.f1, 1.0);
  const PrfScore none = precision_recall_f1(std::vector<int>(6, 0), truth, 1);
  EXPECT_EQ(none.precision, 0.0);
  EXPECT_EQ(none.f1, 0.0);
  EXPECT_THROW(precision_recall_f1(predicted, std::vector<int>{1}, 1), Error);
}

TEST(KappaTest, HandValues) {
  // Confusion (40, 10; 10, 40): p_o = 0.8, p_e = 0.5.
  const auto predicted = repeat({{1, 40}, {0, 10}, {1, 10}, {0, 40}});
  const auto truth = repeat({{1, 50}, {0, 50}});
  EXPECT_NEAR(cohen_kappa(predicted, truth), 0.6, 1e-12);
  EXPECT_EQ(cohen_kappa(truth, truth), 1.0);
}

TEST(KappaTest, MajorityPredictorScoresZero) {
  const auto truth = repeat({{0, 90}, {1, 10}});
  EXPECT_EQ(cohen_kappa(std::vector<int>(100, 0), truth), 0.0);
  // Constant prediction against constant truth agrees by chance alone.
  EXPECT_EQ(cohen_kappa(std::vector<int>(5, 0), std::vector<int>(5, 0)), 1.0);
}

TEST(AccuracyTest, Fraction) {
  EXPECT_DOUBLE_EQ(accuracy(std::vector<int>{1, 2, 3, 4}, std::vector<int>{1, 2, 0, 0}), 0.5);
}

// Reference implementation from an explicit confusion matrix.
struct Confusion {
  std::vector<std::vector<long>> m;
  long n = 0;
  Confusion(std::span<const int> predicted, std::span<const int> truth, int classes)
      : m(static_cast<std::size_t>(classes), std::vector<long>(static_cast<std::size_t>(classes))) {
    for (std::size_t i = 0; i < predicted.size(); ++i) {
      ++m[static_cast<std::size_t>(truth[i])][static_cast<std::size_t>(predicted[i])];
      ++n;
    }
  }
  double kappa() const {
    long diag = 0, chance = 0;
    for (std::size_t a = 0; a < m.size(); ++a) {
      diag += m[a][a];
      long row = 0, col = 0;
      for (std::size_t b = 0; b < m.size(); ++b) {
        row += m[a][b];
        col += m[b][a];
      }
      chance += row * col;
    }
    const long nn = n * n;
    if (chance == nn) return diag == n ? 1.0 : 0.0;
    return static_cast<double>(n * diag - chance) / static_cast<double>(nn - chance);
  }
};

TEST(MetricsOracleTest, MatchConfusionMatrixOnRandomLabels) {
  Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const int classes = 2 + static_cast<int>(rng.below(3));
    const std::size_t n = 20 + rng.below(200);
    std::vector<int> predicted(n), truth(n);
    for (std::size_t i = 0; i < n; ++i) {
      predicted[i] = static_cast<int>(rng.below(static_cast<std::size_t>(classes)));
      truth[i] = rng.bernoulli(0.6) ? predicted[i]
                                    : static_cast<int>(rng.below(static_cast<std::size_t>(classes)));
    }
    const Confusion c(predicted, truth, classes);
    const long tp = c.m[1][1];
    long fp = 0, fn = 0;
    for (int k = 0; k < classes; ++k) {
      if (k == 1) continue;
      fp += c.m[static_cast<std::size_t>(k)][1];
      fn += c.m[1][static_cast<std::size_t>(k)];
    }
    const double p = tp + fp == 0 ? 0.0 : static_cast<double>(tp) / static_cast<double>(tp + fp);
    const double r = tp + fn == 0 ? 0.0 : static_cast<double>(tp) / static_cast<double>(tp + fn);
    const PrfScore s = precision_recall_f1(predicted, truth, 1);
    EXPECT_EQ(s.precision, p);
    EXPECT_EQ(s.recall, r);
    EXPECT_EQ(s.f1, p + r == 0.0 ? 0.0 : 2.0 * p * r / (p + r));
    EXPECT_DOUBLE_EQ(cohen_kappa(predicted, truth), c.kappa());
  }
}

TEST(PrCurveTest, HandSweep) {
  const std::vector<std::pair<double, int>> scores = {{0.9, 1}, {0.8, 0}, {0.7, 1}};
  const auto curve = pr_curve(scores, 1);
  ASSERT_EQ(curve.size(), 3u);
  EXPECT_DOUBLE_EQ(curve[0].precision, 1.0);
  EXPECT_DOUBLE_EQ(curve[0].recall, 0.5);
  EXPECT_DOUBLE_EQ(curve[1].precision, 0.5);
  EXPECT_DOUBLE_EQ(curve[1].recall, 0.5);
  EXPECT_NEAR(curve[2].precision, 0.667, 1e-3);
  EXPECT_DOUBLE_EQ(curve[2].recall, 1.0);
  EXPECT_DOUBLE_EQ(curve[0].threshold, 0.9);
}

TEST(PrCurveTest, RankingExtremesAndTies) {
  const std::vector<std::pair<double, int>> perfect = {{0.9, 1}, {0.5, 1}, {0.1, 0}};
  EXPECT_DOUBLE_EQ(pr_curve(perfect, 1)[1].precision, 1.0);
  EXPECT_DOUBLE_EQ(pr_curve(perfect, 1)[1].recall, 1.0);
  const std::vector<std::pair<double, int>> reversed = {{0.9, 0}, {0.5, 1}};
  EXPECT_DOUBLE_EQ(pr_curve(reversed, 1)[0].precision, 0.0);
  const std::vector<std::pair<double, int>> tied = {{0.5, 1}, {0.5, 0}, {0.2, 1}};
  const auto curve = pr_curve(tied, 1);
  ASSERT_EQ(curve.size(), 2u);
  EXPECT_DOUBLE_EQ(curve[0].precision, 0.5);
  const std::vector<std::pair<double, int>> negatives = {{0.5, 0}};
  EXPECT_THROW(pr_curve(negatives, 1), Error);
}

TEST(PrCurveTest, RecallNeverDecreases) {
  Rng rng(8);
  std::vector<std::pair<double, int>> scores;
  for (int i = 0; i < 200; ++i) {
    scores.emplace_back(static_cast<double>(rng.below(20)) / 20.0, rng.bernoulli(0.3) ? 1 : 0);
  }
  scores.emplace_back(1.0, 1);
  const auto curve = pr_curve(scores, 1);
  for (std::size_t i = 1; i < curve.size(); ++i) {
    EXPECT_GE(curve[i].recall, curve[i - 1].recall);
    EXPECT_LT(curve[i].threshold, curve[i - 1].threshold);
  }
}

TEST(WelchTest, ReferenceValue) {
  // t = -2.611, dof = 6.98 from the sample means and variances.
  const std::vector<double> a = {1, 2, 3, 4};
  const std::vector<double> b = {3, 4, 5, 6, 7};
  EXPECT_NEAR(welch_t_test(a, b), 0.034939, 1e-5);
  EXPECT_EQ(welch_t_test(a, a), 1.0);
  EXPECT_THROW(welch_t_test(std::vector<double>{1.0}, b), Error);
}

}  // namespace
}  // namespace news_placer
