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

#ifndef NEWS_PLACER_METRICS_H_
#define NEWS_PLACER_METRICS_H_

#include <span>
#include <utility>
#include <vector>

namespace news_placer {

struct PrfScore {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

// Harmonic mean; 0 when both are 0.
double f1_score(double precision, double recall);

// Scores for `positive`; 0/0 ratios are 0. Throws on length mismatch.
PrfScore precision_recall_f1(std::span<const int> predicted, std::span<const int> truth,
                             int positive);

// (p_o - p_e) / (1 - p_e) over any label alphabet. When p_e is 1 the
// result is 1 if p_o is 1, else 0.
double cohen_kappa(std::span<const int> predicted, std::span<const int> truth);

double accuracy(std::span<const int> predicted, std::span<const int> truth);

struct PrPoint {
  double threshold = 0.0;
  double precision = 0.0;
  double recall = 0.0;
};

// One point per distinct confidence, descending; an instance counts as
// positive when its confidence is at least the threshold. Throws when no
// instance is positive.
std::vector<PrPoint> pr_curve(std::span<const std::pair<double, int>> scores, int positive);

// Two-sided Welch t-test p-value for equal means.
double welch_t_test(std::span<const double> a, std::span<const double> b);

}  // namespace news_placer

#endif  // NEWS_PLACER_METRICS_H_
