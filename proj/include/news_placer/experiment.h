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

// Temporal experiments for both placement tasks. Models are trained on the
// instances of one year and tested on every later year; baselines always
// see the same test instances.
//
// Method names in reports: "F_e", "B1", "B2" for entity placement and
// "F_s", "S1", "S2" for section placement.

#ifndef NEWS_PLACER_EXPERIMENT_H_
#define NEWS_PLACER_EXPERIMENT_H_

#include <map>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "news_placer/config.h"
#include "news_placer/dataset.h"
#include "news_placer/forest.h"
#include "news_placer/pipeline.h"
#include "news_placer/report.h"

namespace news_placer {

struct TemporalSplit {
  int train_year = 0;
  std::vector<std::size_t> train;  // indexes with year == train_year
  std::vector<std::size_t> test;   // indexes with year > train_year
  std::size_t excluded = 0;        // year < train_year
};

// Throws when either partition is empty.
TemporalSplit temporal_split(std::span<const int> years, int train_year);

template <typename Instance>
TemporalSplit temporal_split(std::span<const Instance> instances, int train_year) {
  std::vector<int> years;
  years.reserve(instances.size());
  for (const auto& i : instances) years.push_back(i.year);
  return temporal_split(std::span<const int>(years), train_year);
}

ForestConfig forest_config(const RunConfig& config, bool class_weighting,
                           std::uint64_t stream);

// Rows of all twelve entity placement features, or of the given columns.
Eigen::MatrixXd aep_matrix(std::span<const AepFeatureVector> vectors,
                           std::span<const std::size_t> columns = {});
std::vector<int> aep_labels(std::span<const AepFeatureVector> vectors);

// The learned models: every feature column, seeded per task.
RandomForest train_aep_model(std::span<const AepFeatureVector> train, const RunConfig& config);
RandomForest train_asp_model(std::span<const AspRow> rows, const RunConfig& config);

// Title baseline: relevant iff the entity occurs in the article title.
std::vector<int> baseline_b2(std::span<const AepFeatureVector> vectors);

// Lexical baseline: the template slot with the highest cosine, ties to the
// smallest slot id. Private candidates are never predicted.
std::string baseline_s1(std::span<const AspRow> rows, const SectionTemplate& tmpl);

// Frequency baseline: the most frequent true slot per class in training,
// ties to the smallest id. Classes unseen in training use the overall mode.
class ModalSlotBaseline {
 public:
  ModalSlotBaseline(std::span<const std::string> classes, std::span<const std::string> truth);
  std::string predict(const std::string& class_id) const;

 private:
  std::map<std::string, std::string> by_class_;
  std::string overall_;
};

// Candidate with the highest confidence of label 1, ties to the smallest id.
std::string argmax_candidate(const RandomForest& model, std::span<const AspRow> rows);

// Entity placement over precomputed years. Years before the train year are
// counted and ignored.
ExperimentReport run_aep_experiment(std::span<const AepYear> years, int train_year,
                                    const RunConfig& config);
ExperimentReport run_aep_experiment(const Dataset& data, int train_year,
                                    const RunConfig& config);

struct AspPrediction {
  int year = 0;
  std::string news_id;
  std::string entity_id;
  std::string class_id;
  std::string truth;
  std::string predicted;
  // The true slot had no section in the previous-year profile.
  bool missing = false;
  // Previous-year profile text shorter than the class's 27th percentile.
  bool long_tail = false;

  bool correct() const { return truth == predicted; }
};

// Rows for every (year, class) and their "all"/"*" totals, each split into
// segments "all", "long_tail" and "trunk". Only missing-slot predictions
// count; ratio is absent without instances.
std::vector<ExpansionScore> profile_expansion_analysis(std::span<const AspPrediction> predictions);

// Fills `missing` and `long_tail` from the previous-year snapshot.
void annotate_expansion(std::span<AspPrediction> predictions, const Dataset& data,
                        const AspIndexes& indexes);

struct AspExperiment {
  ExperimentReport report;
  std::vector<AspPrediction> predictions;  // F_s on the test triples
};

// Section placement over precomputed years; `indexes` aligned with `years`.
AspExperiment run_asp_experiment(std::span<const AspYear> years,
                                 std::span<const AspIndexes* const> indexes, const Dataset& data,
                                 int train_year, const RunConfig& config);
AspExperiment run_asp_experiment(const Dataset& data, int train_year, const RunConfig& config);

}  // namespace news_placer

#endif  // NEWS_PLACER_EXPERIMENT_H_
