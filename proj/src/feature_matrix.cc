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

#include "news_placer/feature_matrix.h"

#include "news_placer/common.h"
#include "news_placer/csv.h"

namespace news_placer {

FeatureMatrix FeatureMatrix::select_rows(std::span<const std::size_t> rows) const {
  FeatureMatrix out;
  out.id_names = id_names;
  out.feature_names = feature_names;
  out.values.resize(static_cast<Eigen::Index>(rows.size()), values.cols());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out.values.row(static_cast<Eigen::Index>(i)) =
        values.row(static_cast<Eigen::Index>(rows[i]));
    out.ids.push_back(ids[rows[i]]);
    out.labels.push_back(labels[rows[i]]);
  }
  return out;
}

FeatureMatrix FeatureMatrix::select_columns(std::span<const std::size_t> columns) const {
  FeatureMatrix out;
  out.id_names = id_names;
  out.ids = ids;
  out.labels = labels;
  out.values.resize(values.rows(), static_cast<Eigen::Index>(columns.size()));
  for (std::size_t j = 0; j < columns.size(); ++j) {
    out.feature_names.push_back(feature_names[columns[j]]);
    out.values.col(static_cast<Eigen::Index>(j)) =
        values.col(static_cast<Eigen::Index>(columns[j]));
  }
  return out;
}

std::string FeatureMatrix::to_csv() const {
  std::vector<std::string> header = id_names;
  header.insert(header.end(), feature_names.begin(), feature_names.end());
  header.push_back("label");
  std::string out = csv_row(header) + "\n";
  for (std::size_t r = 0; r < rows(); ++r) {
    std::vector<std::string> fields = ids[r];
    for (Eigen::Index c = 0; c < values.cols(); ++c) {
      fields.push_back(format_double(values(static_cast<Eigen::Index>(r), c)));
    }
    fields.push_back(std::to_string(labels[r]));
    out += csv_row(fields);
    out += '\n';
  }
  return out;
}

FeatureMatrix FeatureMatrix::from_csv(std::string_view text, std::size_t id_columns) {
  FeatureMatrix m;
  std::vector<std::vector<double>> rows;
  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const auto line = text.substr(pos, end - pos);
    pos = end + 1;
    if (line.empty()) continue;
    ++line_no;
    auto fields = split_csv_line(line);
    if (line_no == 1) {
      if (fields.size() < id_columns + 1 || fields.back() != "label") {
        throw ParseError("<features>", line_no, "header must end with 'label'");
      }
      m.id_names.assign(fields.begin(), fields.begin() + static_cast<long>(id_columns));
      m.feature_names.assign(fields.begin() + static_cast<long>(id_columns), fields.end() - 1);
      continue;
    }
    if (fields.size() != id_columns + m.feature_names.size() + 1) {
      throw ParseError("<features>", line_no, "wrong number of fields");
    }
    m.ids.emplace_back(fields.begin(), fields.begin() + static_cast<long>(id_columns));
    std::vector<double> row;
    for (std::size_t i = id_columns; i + 1 < fields.size(); ++i) row.push_back(std::stod(fields[i]));
    rows.push_back(std::move(row));
    m.labels.push_back(std::stoi(fields.back()));
  }
  m.values.resize(static_cast<Eigen::Index>(rows.size()),
                  static_cast<Eigen::Index>(m.feature_names.size()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      m.values(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rows[r][c];
    }
  }
  return m;
}

}  // namespace news_placer
