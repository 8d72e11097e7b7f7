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

#include "news_placer/report.h"

#include <algorithm>
#include <filesystem>

#include <json.hpp>

#include "news_placer/common.h"
#include "news_placer/csv.h"

namespace news_placer {
namespace {

using Json = nlohmann::ordered_json;

std::string num(double v) { return format_double(v); }

}  // namespace

const MethodScore* ExperimentReport::score(const std::string& method,
                                           const std::string& year) const {
  for (const auto& s : scores) {
    if (s.method == method && s.year == year) return &s;
  }
  return nullptr;
}

std::string metrics_csv(const ExperimentReport& report) {
  std::string out = "method,year,precision,recall,f1,kappa,accuracy,instances\n";
  for (const auto& s : report.scores) {
    out += csv_row({s.method, s.year, num(s.precision), num(s.recall), num(s.f1), num(s.kappa),
                    num(s.accuracy), std::to_string(s.instances)}) +
           "\n";
  }
  return out;
}

std::string pr_curve_csv(const ExperimentReport& report) {
  std::string out = "method,threshold,precision,recall\n";
  std::vector<PrRow> rows = report.pr_curve;
  std::stable_sort(rows.begin(), rows.end(), [](const PrRow& a, const PrRow& b) {
    if (a.method != b.method) return a.method < b.method;
    return a.point.threshold > b.point.threshold;
  });
  for (const auto& r : rows) {
    out += csv_row({r.method, num(r.point.threshold), num(r.point.precision),
                    num(r.point.recall)}) +
           "\n";
  }
  return out;
}

std::string per_class_csv(const ExperimentReport& report) {
  std::string out = "method,class,precision,recall,f1,accuracy,instances\n";
  for (const auto& c : report.per_class) {
    out += csv_row({c.method, c.class_id, num(c.precision), num(c.recall), num(c.f1),
                    num(c.accuracy), std::to_string(c.instances)}) +
           "\n";
  }
  return out;
}

std::string expansion_csv(const ExperimentReport& report) {
  std::string out = "year,class,segment,instances,correct,ratio\n";
  for (const auto& e : report.expansion) {
    out += csv_row({e.year, e.class_id, e.segment, std::to_string(e.instances),
                    std::to_string(e.correct), e.ratio ? num(*e.ratio) : ""}) +
           "\n";
  }
  return out;
}

void emit_report(const ExperimentReport& report, const std::string& dir) {
  Json j;
  j["task"] = report.task;
  j["train_year"] = report.train_year;
  Json scores = Json::array();
  for (const auto& s : report.scores) {
    scores.push_back({{"method", s.method},
                      {"year", s.year},
                      {"precision", s.precision},
                      {"recall", s.recall},
                      {"f1", s.f1},
                      {"kappa", s.kappa},
                      {"accuracy", s.accuracy},
                      {"instances", s.instances}});
  }
  j["scores"] = std::move(scores);
  Json pr = Json::array();
  for (const auto& r : report.pr_curve) {
    pr.push_back({{"method", r.method},
                  {"threshold", r.point.threshold},
                  {"precision", r.point.precision},
                  {"recall", r.point.recall}});
  }
  j["pr_curve"] = std::move(pr);
  Json classes = Json::array();
  for (const auto& c : report.per_class) {
    classes.push_back({{"method", c.method},
                       {"class", c.class_id},
                       {"precision", c.precision},
                       {"recall", c.recall},
                       {"f1", c.f1},
                       {"accuracy", c.accuracy},
                       {"instances", c.instances}});
  }
  j["per_class"] = std::move(classes);
  Json expansion = Json::array();
  for (const auto& e : report.expansion) {
    Json row = {{"year", e.year},
                {"class", e.class_id},
                {"segment", e.segment},
                {"instances", e.instances},
                {"correct", e.correct}};
    row["ratio"] = e.ratio ? Json(*e.ratio) : Json(nullptr);
    expansion.push_back(std::move(row));
  }
  j["expansion"] = std::move(expansion);
  j["counts"] = report.counts;
  j["t_test_p"] = report.t_test_p ? Json(*report.t_test_p) : Json(nullptr);
  j["config"] = report.config_json.empty() ? Json::object() : Json::parse(report.config_json);

  const std::filesystem::path root(dir);
  write_file((root / "report.json").string(), j.dump(2) + "\n");
  write_file((root / "metrics.csv").string(), metrics_csv(report));
  write_file((root / "pr_curve.csv").string(), pr_curve_csv(report));
  write_file((root / "per_class.csv").string(), per_class_csv(report));
  write_file((root / "expansion.csv").string(), expansion_csv(report));
}

ExperimentReport parse_report(const std::string& dir) {
  const std::string path = (std::filesystem::path(dir) / "report.json").string();
  try {
    const Json j = Json::parse(read_file(path));
    ExperimentReport r;
    r.task = j.at("task");
    r.train_year = j.at("train_year");
    for (const auto& s : j.at("scores")) {
      r.scores.push_back({s.at("method"), s.at("year"), s.at("precision"), s.at("recall"),
                          s.at("f1"), s.at("kappa"), s.at("accuracy"), s.at("instances")});
    }
    for (const auto& p : j.at("pr_curve")) {
      r.pr_curve.push_back({p.at("method"), {p.at("threshold"), p.at("precision"), p.at("recall")}});
    }
    for (const auto& c : j.at("per_class")) {
      r.per_class.push_back({c.at("method"), c.at("class"), c.at("precision"), c.at("recall"),
                             c.at("f1"), c.at("accuracy"), c.at("instances")});
    }
    for (const auto& e : j.at("expansion")) {
      ExpansionScore s{e.at("year"), e.at("class"), e.at("segment"), e.at("instances"),
                       e.at("correct"), std::nullopt};
      if (!e.at("ratio").is_null()) s.ratio = e.at("ratio").get<double>();
      r.expansion.push_back(std::move(s));
    }
    r.counts = j.at("counts").get<std::map<std::string, double>>();
    if (!j.at("t_test_p").is_null()) r.t_test_p = j.at("t_test_p").get<double>();
    r.config_json = j.at("config").dump(2);
    return r;
  } catch (const Json::exception& e) {
    throw Error(path + ": malformed report: " + e.what());
  }
}

}  // namespace news_placer
