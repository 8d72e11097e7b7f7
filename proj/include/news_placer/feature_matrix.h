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

#ifndef NEWS_PLACER_FEATURE_MATRIX_H_
#define NEWS_PLACER_FEATURE_MATRIX_H_

#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace news_placer {

// Rows of features with identifying columns and an integer label, in the
// layout written to feature CSV files: ids..., features..., label.
struct FeatureMatrix {
  std::vector<std::string> id_names;
  std::vector<std::vector<std::string>> ids;  // one entry per row
  std::vector<std::string> feature_names;
  Eigen::MatrixXd values;
  std::vector<int> labels;

  std::size_t rows() const { return labels.size(); }

  // Copy restricted to the given rows (in the given order).
  FeatureMatrix select_rows(std::span<const std::size_t> rows) const;
  // Copy restricted to the given feature columns.
  FeatureMatrix select_columns(std::span<const std::size_t> columns) const;

  std::string to_csv() const;
  static FeatureMatrix from_csv(std::string_view text, std::size_t id_columns);
};

}  // namespace news_placer

#endif  // NEWS_PLACER_FEATURE_MATRIX_H_
