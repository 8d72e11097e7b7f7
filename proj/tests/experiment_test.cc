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

#include <cmath>
#include <map>
#include <set>

#include <gtest/gtest.h>

#include "news_placer/common.h"
#include "news_placer/pipeline.h"
#include "news_placer/synth.h"

namespace news_placer {
namespace {

TEST(TemporalSplitTest, PartitionsByYear) {
  const std::vector<int> years = {2009, 2010, 2009, 2011, 2010, 2009, 2008};
  const TemporalSplit s = temporal_split(std::span<const int>(years), 2009);
  EXPECT_EQ(s.train, (std::vector<std::size_t>{0, 2, 5}));
  EXPECT_EQ(s.test, (std::vector<std::size_t>{1, 3, 4}));
  EXPECT_EQ(s.excluded, 1u);
  std::set<std::size_t> train(s.train.begin(), s.train.end());
  for (auto i : s.test) EXPECT_FALSE(train.count(i));
}

TEST(TemporalSplitTest, EmptyPartitionsAreErrors) {
  const std::vector<int> years = {2009, 2010, 2011};
  EXPECT_THROW(temporal_split(std::span<const int>(years), 2011), Error);
  EXPECT_THROW(temporal_split(std::span<const int>(years), 2007), Error);
}

TEST(BaselineB2Test, TitleMembershipDecides) {
  std::vector<AepFeatureVector> v(3);
  v[0].baseline.in_title = 1.0;
  v[2].baseline.in_title = 1.0;
  EXPECT_EQ(baseline_b2(v), (std::vector<int>{1, 0, 1}));
}

AspRow row(const std::string& id, double cosine) {
  AspRow r;
  r.candidate_id = id;
  r.values[kAspCosineColumn] = cosine;
  return r;
}

SectionTemplate template_of(std::initializer_list<const char*> ids) {
  SectionTemplate t;
  t.class_id = "C";
  for (const char* id : ids) {
    TemplateSlot s;
    s.slot_id = id;
    t.slots.push_back(s);
  }
  return t;
}

TEST(BaselineS1Test, HighestCosineSlot) {
  const SectionTemplate t = template_of({"C#00", "C#01", "C#02"});
  const std::vector<AspRow> rows = {row("C#00", 0.1), row("C#01", 0.9), row("C#02", 0.3),
                                    row("E/private", 1.0)};
  EXPECT_EQ(baseline_s1(rows, t), "C#01");
}

TEST(BaselineS1Test, TiesGoToTheSmallestId) {
  const SectionTemplate t = template_of({"C#00", "C#01", "C#02"});
  const std::vector<AspRow> rows = {row("C#02", 0.0), row("C#01", 0.0), row("C#00", 0.0)};
  EXPECT_EQ(baseline_s1(rows, t), "C#00");
}

double modal_accuracy(const std::vector<std::string>& train, const std::vector<std::string>& test) {
  const std::vector<std::string> classes(train.size(), "C");
  const ModalSlotBaseline s2(classes, train);
  double correct = 0;
  for (const auto& t : test) correct += s2.predict("C") == t;
  return correct / static_cast<double>(test.size());
}

TEST(ModalSlotBaselineTest, Examples) {
  std::vector<std::string> sixty_forty(6, "A");
  sixty_forty.insert(sixty_forty.end(), 4, "B");
  EXPECT_DOUBLE_EQ(modal_accuracy(sixty_forty, sixty_forty), 0.6);
  const std::vector<std::string> uniform = {"A", "B", "C", "D"};
  EXPECT_DOUBLE_EQ(modal_accuracy(uniform, uniform), 0.25);
  const std::vector<std::string> single = {"A", "A"};
  EXPECT_DOUBLE_EQ(modal_accuracy(single, single), 1.0);
}

TEST(ModalSlotBaselineTest, PerClassModesAndFallback) {
  const std::vector<std::string> classes = {"P", "P", "P", "O", "O", "O", "O"};
  const std::vector<std::string> truth = {"P#01", "P#01", "P#00", "O#03", "O#02", "O#02", "O#03"};
  const ModalSlotBaseline s2(classes, truth);
  EXPECT_EQ(s2.predict("P"), "P#01");
  EXPECT_EQ(s2.predict("O"), "O#02");  // tie broken to the smaller id
  EXPECT_EQ(s2.predict("Z"), "O#02");  // overall mode: O#02, O#03, P#01 all have 2
}

AspPrediction prediction(int year, const std::string& cls, const std::string& truth,
                         const std::string& predicted, bool missing, bool long_tail) {
  AspPrediction p;
  p.year = year;
  p.class_id = cls;
  p.truth = truth;
  p.predicted = predicted;
  p.missing = missing;
  p.long_tail = long_tail;
  return p;
}

TEST(ProfileExpansionTest, MatchesBruteForceRecount) {
  Rng rng(3);
  std::vector<AspPrediction> ps;
  for (int i = 0; i < 300; ++i) {
    const int year = 2010 + static_cast<int>(rng.below(3));
    const std::string cls = rng.bernoulli(0.5) ? "P" : "O";
    const std::string truth = cls + "#0" + std::to_string(rng.below(4));
    const std::string predicted = rng.bernoulli(0.7) ? truth : cls + "#09";
    ps.push_back(prediction(year, cls, truth, predicted, rng.bernoulli(0.3), rng.bernoulli(0.27)));
  }
  const auto scores = profile_expansion_analysis(ps);
  EXPECT_EQ(scores.size(), 4u * 3u * 3u);
  for (const auto& e : scores) {
    std::size_t n = 0, correct = 0;
    for (const auto& p : ps) {
      if (!p.missing) continue;
      if (e.year != "all" && std::to_string(p.year) != e.year) continue;
      if (e.class_id != "*" && p.class_id != e.class_id) continue;
      if (e.segment == "long_tail" && !p.long_tail) continue;
      if (e.segment == "trunk" && p.long_tail) continue;
      ++n;
      correct += p.truth == p.predicted;
    }
    EXPECT_EQ(e.instances, n);
    EXPECT_EQ(e.correct, correct);
    ASSERT_TRUE(e.ratio.has_value());
    EXPECT_EQ(*e.ratio, static_cast<double>(correct) / static_cast<double>(n));
  }
}

TEST(ProfileExpansionTest, NothingMissingLeavesRatiosAbsent) {
  const std::vector<AspPrediction> ps = {prediction(2010, "P", "P#00", "P#00", false, false)};
  for (const auto& e : profile_expansion_analysis(ps)) {
    EXPECT_EQ(e.instances, 0u);
    EXPECT_FALSE(e.ratio.has_value());
  }
}

TEST(ProfileExpansionTest, AllMissingEqualsAccuracy) {
  const std::vector<AspPrediction> ps = {prediction(2010, "P", "P#00", "P#00", true, false),
                                         prediction(2010, "P", "P#01", "P#00", true, true),
                                         prediction(2010, "P", "P#02", "P#02", true, false)};
  const auto scores = profile_expansion_analysis(ps);
  const auto it = std::find_if(scores.begin(), scores.end(), [](const ExpansionScore& e) {
    return e.year == "all" && e.class_id == "*" && e.segment == "all";
  });
  ASSERT_NE(it, scores.end());
  EXPECT_DOUBLE_EQ(*it->ratio, 2.0 / 3.0);
}

// A small synthetic corpus shared by the end-to-end tests.
class SmallCorpusTest : public ::testing::Test {
 protected:
  static RunConfig config() {
    RunConfig c;
    c.synth_entities = 60;
    c.synth_articles = 240;
    c.synth_last_year = 2010;
    c.lda_iterations = 30;
    c.rf_trees = 30;
    return c;
  }
  static void SetUpTestSuite() {
    data_ = new Dataset(generate_synthetic_corpus(SyntheticSpec::from_config(config())));
  }
  static void TearDownTestSuite() { delete data_; }
  static Dataset* data_;
};

Dataset* SmallCorpusTest::data_ = nullptr;

// Labels come from the year-t citations by definition (an unseen citing
// section title is mapped to a slot through its text), so only the ids and
// feature values are compared.
std::string feature_bytes(FeatureMatrix m) {
  m.labels.assign(m.labels.size(), 0);
  return m.to_csv();
}

std::string aep_bytes(const Dataset& data, const RunConfig& c) {
  const AepYear y = compute_aep_year(data, 2009, c);
  return feature_bytes(aep_feature_matrix(y.vectors));
}

std::string asp_bytes(const Dataset& data, const RunConfig& c) {
  const AspIndexes indexes = build_asp_indexes(data, 2009, c);
  const auto pairs = build_aep_ground_truth(data.corpus, data.snapshot(2009), data.snapshot(2008));
  const AspYear y = compute_asp_year(data, 2009, c, pairs, indexes);
  std::vector<AspRow> rows;
  for (const auto& r : y.rows) rows.insert(rows.end(), r.begin(), r.end());
  return feature_bytes(asp_feature_matrix(rows));
}

TEST_F(SmallCorpusTest, YearTSectionTextsDoNotLeakIntoFeatures) {
  const RunConfig c = config();
  const std::string aep = aep_bytes(*data_, c);
  const std::string asp = asp_bytes(*data_, c);

  Dataset mutated = *data_;
  std::size_t edits = 0;
  for (auto& [id, profile] : mutated.snapshots.at(2009).entities) {
    for (auto& section : profile.sections) {
      section.text = "rewritten text " + std::to_string(edits++) + " with new words";
    }
  }
  ASSERT_GT(edits, 0u);
  EXPECT_EQ(aep_bytes(mutated, c), aep);
  EXPECT_EQ(asp_bytes(mutated, c), asp);
}

TEST_F(SmallCorpusTest, AepReportIsConsistent) {
  const RunConfig c = config();
  const ExperimentReport r = run_aep_experiment(*data_, 2009, c);
  EXPECT_EQ(r.task, "aep");
  EXPECT_EQ(r.config_json, c.echo_json());
  EXPECT_EQ(r.config_json.find("threads"), std::string::npos);
  std::set<std::size_t> sizes;
  for (const auto& s : r.scores) {
    EXPECT_NEAR(s.f1, f1_score(s.precision, s.recall), 1e-6);
    if (s.year == "all") sizes.insert(s.instances);
  }
  EXPECT_EQ(sizes.size(), 1u);  // F_e, B1 and B2 share the test set
  ASSERT_NE(r.score("F_e"), nullptr);
  ASSERT_NE(r.score("B2"), nullptr);
  EXPECT_EQ(r.score("F_e")->instances, static_cast<std::size_t>(r.counts.at("test_instances")));
  EXPECT_TRUE(r.t_test_p.has_value());
}

TEST_F(SmallCorpusTest, AspClassRowsAverageToAggregate) {
  const RunConfig c = config();
  const AspExperiment e = run_asp_experiment(*data_, 2009, c);
  for (const char* method : {"F_s", "S1", "S2"}) {
    double weighted = 0.0, n = 0.0;
    for (const auto& cs : e.report.per_class) {
      if (cs.method != method) continue;
      weighted += cs.precision * static_cast<double>(cs.instances);
      n += static_cast<double>(cs.instances);
    }
    const MethodScore* s = e.report.score(method);
    ASSERT_NE(s, nullptr);
    EXPECT_NEAR(weighted / n, s->precision, 1e-12) << method;
    EXPECT_EQ(static_cast<double>(s->instances), n);
  }
  EXPECT_EQ(e.predictions.size(), e.report.score("F_s")->instances);
}

}  // namespace
}  // namespace news_placer
