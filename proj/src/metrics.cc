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

#include <algorithm>
#include <cmath>
#include <map>

#include <boost/math/distributions/students_t.hpp>

#include "news_placer/common.h"

namespace news_placer {
namespace {

void check_lengths(std::size_t a, std::size_t b) {
  if (a != b) throw Error("metrics: predicted and true label counts differ");
}

double ratio(double num, double den) { return den == 0.0 ? 0.0 : num / den; }

}  // namespace

double f1_score(double precision, double recall) {
  return ratio(2.0 * precision * recall, precision + recall);
}

PrfScore precision_recall_f1(std::span<const int> predicted, std::span<const int> truth,
                             int positive) {
  check_lengths(predicted.size(), truth.size());
  double tp = 0, fp = 0, fn = 0;
  for (std::size_t i = 0; i < predicted.size(); ++i) {
    const bool p = predicted[i] == positive;
    const bool t = truth[i] == positive;
    tp += p && t;
    fp += p && !t;
    fn += !p && t;
  }
  PrfScore s;
  s.precision = ratio(tp, tp + fp);
  s.recall = ratio(tp, tp + fn);
  s.f1 = f1_score(s.precision, s.recall);
  return s;
}

double cohen_kappa(std::span<const int> predicted, std::span<const int> truth) {
  check_lengths(predicted.size(), truth.size());
  if (predicted.empty()) return 0.0;
  const double n = static_cast<double>(predicted.size());
  std::map<int, double> pred_marginal;
  std::map<int, double> true_marginal;
  double agree = 0.0;
  for (std::size_t i = 0; i < predicted.size(); ++i) {
    pred_marginal[predicted[i]] += 1.0;
    true_marginal[truth[i]] += 1.0;
    agree += predicted[i] == truth[i];
  }
  const double p_o = agree / n;
  double p_e = 0.0;
  for (const auto& [label, count] : pred_marginal) {
    auto it = true_marginal.find(label);
    if (it != true_marginal.end()) p_e += (count / n) * (it->second / n);
  }
  if (p_e >= 1.0) return p_o >= 1.0 ? 1.0 : 0.0;
  return (p_o - p_e) / (1.0 - p_e);
}

double accuracy(std::span<const int> predicted, std::span<const int> truth) {
  check_lengths(predicted.size(), truth.size());
  if (predicted.empty()) return 0.0;
  double agree = 0.0;
  for (std::size_t i = 0; i < predicted.size(); ++i) agree += predicted[i] == truth[i];
  return agree / static_cast<double>(predicted.size());
}

std::vector<PrPoint> pr_curve(std::span<const std::pair<double, int>> scores, int positive) {
  std::vector<std::pair<double, int>> sorted(scores.begin(), scores.end());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  double positives = 0.0;
  for (const auto& [c, label] : sorted) positives += label == positive;
  if (positives == 0.0) throw Error("pr curve: no positive instances");

  std::vector<PrPoint> curve;
  double tp = 0.0, selected = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    selected += 1.0;
    tp += sorted[i].second == positive;
    if (i + 1 < sorted.size() && sorted[i + 1].first == sorted[i].first) continue;
    curve.push_back({sorted[i].first, tp / selected, tp / positives});
  }
  return curve;
}

double welch_t_test(std::span<const double> a, std::span<const double> b) {
  if (a.size() < 2 || b.size() < 2) throw Error("t-test: need two values per sample");
  auto moments = [](std::span<const double> x) {
    double mean = 0.0;
    for (double v : x) mean += v;
    mean /= static_cast<double>(x.size());
    double var = 0.0;
    for (double v : x) var += (v - mean) * (v - mean);
    return std::pair{mean, var / static_cast<double>(x.size() - 1)};
  };
  const auto [ma, va] = moments(a);
  const auto [mb, vb] = moments(b);
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  const double se2 = va / na + vb / nb;
  if (se2 == 0.0) return ma == mb ? 1.0 : 0.0;
  const double t = (ma - mb) / std::sqrt(se2);
  const double dof = se2 * se2 / ((va / na) * (va / na) / (na - 1.0) +
                                  (vb / nb) * (vb / nb) / (nb - 1.0));
  const boost::math::students_t dist(dof);
  return 2.0 * boost::math::cdf(boost::math::complement(dist, std::fabs(t)));
}

}  // namespace news_placer
