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

#include "news_placer/experiment.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include <fmt/format.h>

#include "news_placer/common.h"
#include "news_placer/metrics.h"

namespace news_placer {
namespace {

MethodScore binary_score(const std::string& method, const std::string& year,
                         std::span<const int> predicted, std::span<const int> truth) {
  const PrfScore prf = precision_recall_f1(predicted, truth, 1);
  MethodScore s;
  s.method = method;
  s.year = year;
  s.precision = prf.precision;
  s.recall = prf.recall;
  s.f1 = prf.f1;
  s.kappa = cohen_kappa(predicted, truth);
  s.accuracy = accuracy(predicted, truth);
  s.instances = truth.size();
  return s;
}

// Label strings to dense integers shared by predictions and truth.
std::pair<std::vector<int>, std::vector<int>> encode(std::span<const std::string> predicted,
                                                     std::span<const std::string> truth) {
  std::set<std::string> labels(predicted.begin(), predicted.end());
  labels.insert(truth.begin(), truth.end());
  std::map<std::string, int> code;
  for (const auto& l : labels) code.emplace(l, static_cast<int>(code.size()));
  std::vector<int> p, t;
  for (const auto& l : predicted) p.push_back(code.at(l));
  for (const auto& l : truth) t.push_back(code.at(l));
  return {p, t};
}

// Macro precision over predicted labels and macro recall over true labels.
std::pair<double, double> macro_pr(std::span<const std::string> predicted,
                                   std::span<const std::string> truth) {
  std::map<std::string, std::array<double, 3>> c;  // tp, predicted, true
  for (std::size_t i = 0; i < truth.size(); ++i) {
    c[predicted[i]][1] += 1.0;
    c[truth[i]][2] += 1.0;
    if (predicted[i] == truth[i]) c[truth[i]][0] += 1.0;
  }
  double p = 0.0, r = 0.0, np = 0.0, nr = 0.0;
  for (const auto& [label, v] : c) {
    if (v[1] > 0.0) p += v[0] / v[1], np += 1.0;
    if (v[2] > 0.0) r += v[0] / v[2], nr += 1.0;
  }
  return {np > 0.0 ? p / np : 0.0, nr > 0.0 ? r / nr : 0.0};
}

struct MultiClassScores {
  MethodScore aggregate;
  std::vector<ClassScore> per_class;
};

// Per-class macro scores and their instance-weighted mean.
MultiClassScores multiclass_score(const std::string& method, const std::string& year,
                                  std::span<const std::string> classes,
                                  std::span<const std::string> predicted,
                                  std::span<const std::string> truth) {
  MultiClassScores out;
  std::map<std::string, std::vector<std::size_t>> members;
  for (std::size_t i = 0; i < classes.size(); ++i) members[classes[i]].push_back(i);
  double p = 0.0, r = 0.0, n = 0.0;
  for (const auto& [class_id, idx] : members) {
    std::vector<std::string> cp, ct;
    for (std::size_t i : idx) {
      cp.push_back(predicted[i]);
      ct.push_back(truth[i]);
    }
    const auto [cpr, crr] = macro_pr(cp, ct);
    const auto [ip, it] = encode(cp, ct);
    ClassScore cs;
    cs.method = method;
    cs.class_id = class_id;
    cs.precision = cpr;
    cs.recall = crr;
    cs.f1 = f1_score(cpr, crr);
    cs.accuracy = accuracy(ip, it);
    cs.instances = idx.size();
    p += cpr * static_cast<double>(idx.size());
    r += crr * static_cast<double>(idx.size());
    n += static_cast<double>(idx.size());
    out.per_class.push_back(std::move(cs));
  }
  const auto [ip, it] = encode(predicted, truth);
  MethodScore& s = out.aggregate;
  s.method = method;
  s.year = year;
  s.precision = n > 0.0 ? p / n : 0.0;
  s.recall = n > 0.0 ? r / n : 0.0;
  s.f1 = f1_score(s.precision, s.recall);
  s.kappa = truth.empty() ? 0.0 : cohen_kappa(ip, it);
  s.accuracy = truth.empty() ? 0.0 : accuracy(ip, it);
  s.instances = truth.size();
  return out;
}

std::optional<double> correctness_t_test(std::span<const double> a, std::span<const double> b) {
  if (a.size() < 2 || b.size() < 2) return std::nullopt;
  const double p = welch_t_test(a, b);
  if (!std::isfinite(p)) return std::nullopt;
  return p;
}

void add_pr_curve(ExperimentReport& report, const std::string& method,
                  std::span<const std::pair<double, int>> scores) {
  bool any = false;
  for (const auto& [s, l] : scores) any = any || l == 1;
  if (!any) return;
  for (const auto& point : pr_curve(scores, 1)) report.pr_curve.push_back({method, point});
}

}  // namespace

TemporalSplit temporal_split(std::span<const int> years, int train_year) {
  TemporalSplit split;
  split.train_year = train_year;
  for (std::size_t i = 0; i < years.size(); ++i) {
    if (years[i] == train_year) {
      split.train.push_back(i);
    } else if (years[i] > train_year) {
      split.test.push_back(i);
    } else {
      ++split.excluded;
    }
  }
  if (split.train.empty()) throw Error(fmt::format("no training instances for year {}", train_year));
  if (split.test.empty()) throw Error(fmt::format("no test instances after year {}", train_year));
  return split;
}

ForestConfig forest_config(const RunConfig& config, bool class_weighting,
                           std::uint64_t stream) {
  ForestConfig f;
  f.n_trees = config.rf_trees;
  f.max_depth = config.rf_max_depth;
  f.features_per_split = config.rf_features_per_split;
  f.min_leaf = config.rf_min_leaf;
  f.seed = mix_seed(config.seed, stream);
  f.class_weighting = class_weighting;
  f.threads = config.threads;
  return f;
}

Eigen::MatrixXd aep_matrix(std::span<const AepFeatureVector> vectors,
                           std::span<const std::size_t> columns) {
  std::vector<std::size_t> cols(columns.begin(), columns.end());
  if (cols.empty()) {
    for (std::size_t c = 0; c < kAepFeatureNames.size(); ++c) cols.push_back(c);
  }
  Eigen::MatrixXd m(static_cast<Eigen::Index>(vectors.size()),
                    static_cast<Eigen::Index>(cols.size()));
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    const auto v = vectors[i].values();
    for (std::size_t c = 0; c < cols.size(); ++c) {
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)) = v.at(cols[c]);
    }
  }
  return m;
}

std::vector<int> aep_labels(std::span<const AepFeatureVector> vectors) {
  std::vector<int> labels;
  labels.reserve(vectors.size());
  for (const auto& v : vectors) labels.push_back(v.label == Relevance::kRelevant ? 1 : 0);
  return labels;
}

RandomForest train_aep_model(std::span<const AepFeatureVector> train, const RunConfig& config) {
  return train_random_forest(aep_matrix(train), aep_labels(train),
                             forest_config(config, config.aep_class_weighting, 1));
}

RandomForest train_asp_model(std::span<const AspRow> rows, const RunConfig& config) {
  Eigen::MatrixXd x(static_cast<Eigen::Index>(rows.size()), kAspFeatureCount);
  std::vector<int> labels;
  labels.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t c = 0; c < kAspFeatureCount; ++c) {
      x(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)) = rows[i].values[c];
    }
    labels.push_back(rows[i].label);
  }
  return train_random_forest(x, labels, forest_config(config, config.asp_class_weighting, 3));
}

std::vector<int> baseline_b2(std::span<const AepFeatureVector> vectors) {
  std::vector<int> out;
  out.reserve(vectors.size());
  for (const auto& v : vectors) out.push_back(v.baseline.in_title > 0.0 ? 1 : 0);
  return out;
}

std::string baseline_s1(std::span<const AspRow> rows, const SectionTemplate& tmpl) {
  const AspRow* best = nullptr;
  for (const auto& r : rows) {
    if (tmpl.slot(r.candidate_id) == nullptr) continue;
    const double c = r.values[kAspCosineColumn];
    if (best == nullptr || c > best->values[kAspCosineColumn] ||
        (c == best->values[kAspCosineColumn] && r.candidate_id < best->candidate_id)) {
      best = &r;
    }
  }
  return best == nullptr ? std::string() : best->candidate_id;
}

ModalSlotBaseline::ModalSlotBaseline(std::span<const std::string> classes,
                                     std::span<const std::string> truth) {
  std::map<std::string, std::map<std::string, std::size_t>> counts;
  std::map<std::string, std::size_t> overall;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    ++counts[classes[i]][truth[i]];
    ++overall[truth[i]];
  }
  // std::map iterates ids in ascending order, so strict > keeps the smallest.
  auto mode = [](const std::map<std::string, std::size_t>& c) {
    std::string best;
    std::size_t n = 0;
    for (const auto& [id, k] : c) {
      if (k > n) best = id, n = k;
    }
    return best;
  };
  for (const auto& [class_id, c] : counts) by_class_.emplace(class_id, mode(c));
  overall_ = mode(overall);
}

std::string ModalSlotBaseline::predict(const std::string& class_id) const {
  auto it = by_class_.find(class_id);
  return it == by_class_.end() ? overall_ : it->second;
}

std::string argmax_candidate(const RandomForest& model, std::span<const AspRow> rows) {
  const AspRow* best = nullptr;
  double best_c = -1.0;
  for (const auto& r : rows) {
    const double c = model.confidence(r.values, 1);
    if (best == nullptr || c > best_c || (c == best_c && r.candidate_id < best->candidate_id)) {
      best = &r;
      best_c = c;
    }
  }
  return best == nullptr ? std::string() : best->candidate_id;
}

ExperimentReport run_aep_experiment(std::span<const AepYear> years, int train_year,
                                    const RunConfig& config) {
  std::vector<AepFeatureVector> all;
  for (const auto& y : years) all.insert(all.end(), y.vectors.begin(), y.vectors.end());
  const TemporalSplit split = temporal_split(std::span<const AepFeatureVector>(all), train_year);

  std::vector<AepFeatureVector> train, test;
  for (std::size_t i : split.train) train.push_back(all[i]);
  for (std::size_t i : split.test) test.push_back(all[i]);
  const std::vector<int> train_labels = aep_labels(train);
  const std::vector<int> truth = aep_labels(test);

  const RandomForest fe = train_aep_model(train, config);
  const RandomForest b1 = train_random_forest(
      aep_matrix(train, kAepBaselineColumns), train_labels,
      forest_config(config, config.aep_class_weighting, 2));

  const Eigen::MatrixXd test_full = aep_matrix(test);
  const Eigen::MatrixXd test_base = aep_matrix(test, kAepBaselineColumns);
  std::vector<int> pred_fe(test.size()), pred_b1(test.size());
  std::vector<double> conf_fe(test.size()), conf_b1(test.size());
  parallel_for(test.size(), config.threads, [&](std::size_t i) {
    const auto r = static_cast<Eigen::Index>(i);
    const Prediction a = fe.predict(test_full, r);
    const Prediction b = b1.predict(test_base, r);
    pred_fe[i] = a.label;
    pred_b1[i] = b.label;
    auto conf1 = [](const RandomForest& m, const Prediction& p) {
      for (std::size_t k = 0; k < m.classes().size(); ++k) {
        if (m.classes()[k] == 1) return p.confidence[k];
      }
      return 0.0;
    };
    conf_fe[i] = conf1(fe, a);
    conf_b1[i] = conf1(b1, b);
  });
  const std::vector<int> pred_b2 = baseline_b2(test);

  ExperimentReport report;
  report.task = "aep";
  report.train_year = train_year;
  report.config_json = config.echo_json();

  std::set<int> test_years;
  for (const auto& v : test) test_years.insert(v.year);
  const std::array<std::pair<const char*, const std::vector<int>*>, 3> methods = {
      {{"F_e", &pred_fe}, {"B1", &pred_b1}, {"B2", &pred_b2}}};
  for (const auto& [name, pred] : methods) {
    for (int y : test_years) {
      std::vector<int> p, t;
      for (std::size_t i = 0; i < test.size(); ++i) {
        if (test[i].year != y) continue;
        p.push_back((*pred)[i]);
        t.push_back(truth[i]);
      }
      report.scores.push_back(binary_score(name, std::to_string(y), p, t));
    }
    report.scores.push_back(binary_score(name, "all", *pred, truth));
  }

  auto curve_input = [&](auto score) {
    std::vector<std::pair<double, int>> s;
    for (std::size_t i = 0; i < test.size(); ++i) s.emplace_back(score(i), truth[i]);
    return s;
  };
  add_pr_curve(report, "F_e", curve_input([&](std::size_t i) { return conf_fe[i]; }));
  add_pr_curve(report, "B1", curve_input([&](std::size_t i) { return conf_b1[i]; }));
  add_pr_curve(report, "B2",
               curve_input([&](std::size_t i) { return static_cast<double>(pred_b2[i]); }));

  std::vector<double> ok_fe, ok_b1;
  for (std::size_t i = 0; i < test.size(); ++i) {
    ok_fe.push_back(pred_fe[i] == truth[i] ? 1.0 : 0.0);
    ok_b1.push_back(pred_b1[i] == truth[i] ? 1.0 : 0.0);
  }
  report.t_test_p = correctness_t_test(ok_fe, ok_b1);

  auto count = [](std::span<const int> labels) {
    return static_cast<double>(std::count(labels.begin(), labels.end(), 1));
  };
  report.counts["train_instances"] = static_cast<double>(train.size());
  report.counts["train_relevant"] = count(train_labels);
  report.counts["test_instances"] = static_cast<double>(test.size());
  report.counts["test_relevant"] = count(truth);
  report.counts["excluded_instances"] = static_cast<double>(split.excluded);
  return report;
}

ExperimentReport run_aep_experiment(const Dataset& data, int train_year,
                                    const RunConfig& config) {
  std::vector<AepYear> years;
  std::size_t earlier = 0;
  for (int y : feature_years(data)) {
    if (y < train_year) {
      earlier += build_aep_ground_truth(data.corpus, data.snapshot(y), data.snapshot(y - 1),
                                        nullptr, config.include_unlinked_citations)
                     .size();
      continue;
    }
    years.push_back(compute_aep_year(data, y, config));
  }
  ExperimentReport report = run_aep_experiment(years, train_year, config);
  report.counts["excluded_instances"] += static_cast<double>(earlier);
  return report;
}

std::vector<ExpansionScore> profile_expansion_analysis(
    std::span<const AspPrediction> predictions) {
  // (year, class, segment) -> (instances, correct); "all" and "*" pool.
  std::map<std::tuple<std::string, std::string, std::string>, std::pair<std::size_t, std::size_t>>
      cells;
  std::set<std::string> years, classes;
  for (const auto& p : predictions) {
    years.insert(std::to_string(p.year));
    classes.insert(p.class_id);
    if (!p.missing) continue;
    const std::string segment = p.long_tail ? "long_tail" : "trunk";
    for (const std::string& y : {std::to_string(p.year), std::string("all")}) {
      for (const std::string& c : {p.class_id, std::string("*")}) {
        for (const std::string& s : {std::string("all"), segment}) {
          auto& cell = cells[{y, c, s}];
          ++cell.first;
          cell.second += p.correct() ? 1 : 0;
        }
      }
    }
  }
  std::vector<std::string> year_keys(years.begin(), years.end());
  year_keys.push_back("all");
  std::vector<std::string> class_keys(classes.begin(), classes.end());
  class_keys.push_back("*");
  std::vector<ExpansionScore> out;
  for (const auto& y : year_keys) {
    for (const auto& c : class_keys) {
      for (const char* s : {"all", "long_tail", "trunk"}) {
        ExpansionScore e{y, c, s, 0, 0, std::nullopt};
        auto it = cells.find({y, c, s});
        if (it != cells.end()) {
          e.instances = it->second.first;
          e.correct = it->second.second;
          e.ratio = static_cast<double>(e.correct) / static_cast<double>(e.instances);
        }
        out.push_back(std::move(e));
      }
    }
  }
  return out;
}

void annotate_expansion(std::span<AspPrediction> predictions, const Dataset& data,
                        const AspIndexes& indexes) {
  const WikipediaSnapshot& previous = data.snapshot(indexes.year - 1);
  auto text_length = [](const EntityProfile& p) {
    std::size_t n = 0;
    for (const auto& s : p.sections) n += s.text.size();
    return n;
  };
  // Long-tail thresholds: the 27th percentile of profile length per class.
  std::map<std::string, std::vector<std::size_t>> lengths;
  for (const auto& [id, profile] : previous.entities) {
    if (const SectionTemplate* t = indexes.templates.for_classes(profile.classes)) {
      lengths[t->class_id].push_back(text_length(profile));
    }
  }
  std::map<std::string, std::size_t> threshold;
  for (auto& [class_id, v] : lengths) {
    std::sort(v.begin(), v.end());
    threshold[class_id] = v[static_cast<std::size_t>(0.27 * static_cast<double>(v.size()))];
  }

  for (auto& p : predictions) {
    if (p.year != indexes.year) continue;
    const EntityProfile* profile = previous.find(p.entity_id);
    const SectionTemplate* tmpl = indexes.templates.for_class(p.class_id);
    if (profile == nullptr || tmpl == nullptr) {
      p.missing = tmpl != nullptr && tmpl->slot(p.truth) != nullptr;
      p.long_tail = true;
      continue;
    }
    p.missing = false;
    if (tmpl->slot(p.truth) != nullptr) {
      p.missing = true;
      for (const auto& s : profile->sections) {
        if (map_section_to_template(s, *tmpl) == p.truth) {
          p.missing = false;
          break;
        }
      }
    }
    auto it = threshold.find(p.class_id);
    p.long_tail = it != threshold.end() && text_length(*profile) < it->second;
  }
}

AspExperiment run_asp_experiment(std::span<const AspYear> years,
                                 std::span<const AspIndexes* const> indexes, const Dataset& data,
                                 int train_year, const RunConfig& config) {
  if (years.size() != indexes.size()) throw Error("asp experiment: indexes not aligned");
  struct Ref {
    std::size_t year;
    std::size_t triple;
  };
  std::vector<Ref> refs;
  std::vector<int> triple_years;
  for (std::size_t y = 0; y < years.size(); ++y) {
    for (std::size_t i = 0; i < years[y].triples.size(); ++i) {
      refs.push_back({y, i});
      triple_years.push_back(years[y].triples[i].year);
    }
  }
  const TemporalSplit split = temporal_split(std::span<const int>(triple_years), train_year);

  std::vector<std::string> train_classes, train_truth;
  std::vector<AspRow> train_rows;
  for (std::size_t k : split.train) {
    const AspYear& y = years[refs[k].year];
    const auto& rows = y.rows[refs[k].triple];
    train_rows.insert(train_rows.end(), rows.begin(), rows.end());
    train_classes.push_back(y.triple_class[refs[k].triple]);
    train_truth.push_back(y.truth[refs[k].triple]);
  }
  const RandomForest fs = train_asp_model(train_rows, config);
  const ModalSlotBaseline s2(train_classes, train_truth);

  const std::size_t n = split.test.size();
  std::vector<std::string> pred_fs(n), pred_s1(n), pred_s2(n), truth(n), classes(n);
  std::vector<int> test_years(n);
  parallel_for(n, config.threads, [&](std::size_t j) {
    const Ref ref = refs[split.test[j]];
    const AspYear& y = years[ref.year];
    const auto& rows = y.rows[ref.triple];
    classes[j] = y.triple_class[ref.triple];
    truth[j] = y.truth[ref.triple];
    test_years[j] = y.triples[ref.triple].year;
    pred_fs[j] = argmax_candidate(fs, rows);
    const SectionTemplate* tmpl = indexes[ref.year]->templates.for_class(classes[j]);
    pred_s1[j] = tmpl == nullptr ? std::string() : baseline_s1(rows, *tmpl);
    pred_s2[j] = s2.predict(classes[j]);
  });

  AspExperiment out;
  ExperimentReport& report = out.report;
  report.task = "asp";
  report.train_year = train_year;
  report.config_json = config.echo_json();
  const std::set<int> year_set(test_years.begin(), test_years.end());
  const std::array<std::pair<const char*, const std::vector<std::string>*>, 3> methods = {
      {{"F_s", &pred_fs}, {"S1", &pred_s1}, {"S2", &pred_s2}}};
  for (const auto& [name, pred] : methods) {
    for (int yr : year_set) {
      std::vector<std::string> c, p, t;
      for (std::size_t j = 0; j < n; ++j) {
        if (test_years[j] != yr) continue;
        c.push_back(classes[j]);
        p.push_back((*pred)[j]);
        t.push_back(truth[j]);
      }
      report.scores.push_back(multiclass_score(name, std::to_string(yr), c, p, t).aggregate);
    }
    MultiClassScores all = multiclass_score(name, "all", classes, *pred, truth);
    report.scores.push_back(all.aggregate);
    for (auto& cs : all.per_class) report.per_class.push_back(std::move(cs));
  }

  std::vector<double> ok_fs, ok_s1;
  for (std::size_t j = 0; j < n; ++j) {
    ok_fs.push_back(pred_fs[j] == truth[j] ? 1.0 : 0.0);
    ok_s1.push_back(pred_s1[j] == truth[j] ? 1.0 : 0.0);
  }
  report.t_test_p = correctness_t_test(ok_fs, ok_s1);

  for (std::size_t j = 0; j < n; ++j) {
    const Ref ref = refs[split.test[j]];
    const AspTriple& t = years[ref.year].triples[ref.triple];
    out.predictions.push_back(
        {t.year, t.news_id, t.entity_id, classes[j], truth[j], pred_fs[j], false, false});
  }
  for (const AspIndexes* idx : indexes) {
    if (idx->year > train_year) annotate_expansion(out.predictions, data, *idx);
  }
  report.expansion = profile_expansion_analysis(out.predictions);

  std::size_t skipped = 0;
  for (const auto& y : years) skipped += y.skipped;
  report.counts["train_triples"] = static_cast<double>(split.train.size());
  report.counts["train_rows"] = static_cast<double>(train_rows.size());
  report.counts["test_triples"] = static_cast<double>(n);
  report.counts["excluded_triples"] = static_cast<double>(split.excluded);
  report.counts["skipped_triples"] = static_cast<double>(skipped);
  return out;
}

AspExperiment run_asp_experiment(const Dataset& data, int train_year, const RunConfig& config) {
  std::vector<AspYear> years;
  std::vector<std::unique_ptr<AspIndexes>> owned;
  for (int y : feature_years(data)) {
    if (y < train_year) continue;
    const auto pairs = build_aep_ground_truth(data.corpus, data.snapshot(y), data.snapshot(y - 1),
                                              nullptr, config.include_unlinked_citations);
    owned.push_back(std::make_unique<AspIndexes>(build_asp_indexes(data, y, config)));
    years.push_back(compute_asp_year(data, y, config, pairs, *owned.back()));
  }
  std::vector<const AspIndexes*> indexes;
  for (const auto& o : owned) indexes.push_back(o.get());
  return run_asp_experiment(years, indexes, data, train_year, config);
}

}  // namespace news_placer
