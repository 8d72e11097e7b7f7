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

// Experiment reports and their on-disk layout:
//
//   report.json    everything below plus counts and the config echo
//   metrics.csv    method, year, precision, recall, f1, kappa, accuracy, instances
//   pr_curve.csv   method, threshold, precision, recall (descending threshold)
//   per_class.csv  method, class, precision, recall, f1, accuracy, instances
//   expansion.csv  year, class, segment, instances, correct, ratio

#ifndef NEWS_PLACER_REPORT_H_
#define NEWS_PLACER_REPORT_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "news_placer/metrics.h"

namespace news_placer {

struct MethodScore {
  std::string method;
  std::string year;  // a test year, or "all" for the pooled test set
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  double kappa = 0.0;
  double accuracy = 0.0;
  std::size_t instances = 0;

  bool operator==(const MethodScore&) const = default;
};

struct ClassScore {
  std::string method;
  std::string class_id;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  double accuracy = 0.0;
  std::size_t instances = 0;

  bool operator==(const ClassScore&) const = default;
};

struct ExpansionScore {
  std::string year;      // or "all"
  std::string class_id;  // or "*"
  std::string segment;   // "all", "long_tail" or "trunk"
  std::size_t instances = 0;
  std::size_t correct = 0;
  std::optional<double> ratio;  // absent without instances

  bool operator==(const ExpansionScore&) const = default;
};

struct PrRow {
  std::string method;
  PrPoint point;

  bool operator==(const PrRow& o) const {
    return method == o.method && point.threshold == o.point.threshold &&
           point.precision == o.point.precision && point.recall == o.point.recall;
  }
};

struct ExperimentReport {
  std::string task;  // "aep" or "asp"
  int train_year = 0;
  std::vector<MethodScore> scores;
  std::vector<PrRow> pr_curve;
  std::vector<ClassScore> per_class;
  std::vector<ExpansionScore> expansion;
  std::map<std::string, double> counts;
  std::optional<double> t_test_p;  // F vs its strongest baseline
  std::string config_json;

  const MethodScore* score(const std::string& method, const std::string& year = "all") const;
  bool operator==(const ExperimentReport&) const = default;
};

// Writes the report directory; throws when a file cannot be written.
void emit_report(const ExperimentReport& report, const std::string& dir);
// Reads report.json back.
ExperimentReport parse_report(const std::string& dir);

std::string metrics_csv(const ExperimentReport& report);
std::string pr_curve_csv(const ExperimentReport& report);
std::string per_class_csv(const ExperimentReport& report);
std::string expansion_csv(const ExperimentReport& report);

}  // namespace news_placer

#endif  // NEWS_PLACER_REPORT_H_
