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

// Every tunable of a run as one flat key-value document.

#ifndef NEWS_PLACER_CONFIG_H_
#define NEWS_PLACER_CONFIG_H_

#include <cstdint>
#include <string>
#include <string_view>

namespace news_placer {

struct RunConfig {
  std::uint64_t seed = 1;
  int threads = 1;
  int train_year = 2009;

  // Linking and ground truth.
  double link_min_prior = 0.3;
  bool include_unlinked_citations = false;

  // AEP features.
  std::string authority = "frequency";  // or "pagerank"
  double authority_tau = 1.0;
  double pagerank_damping = 0.85;
  double pagerank_tolerance = 1e-9;
  int pagerank_max_iterations = 200;
  double novelty_lambda = 0.5;
  std::string novelty_mode = "corrected";  // or "literal"
  double smoothing_beta = 0.1;
  bool domain_laplace = false;

  // Templates and ASP features.
  int template_k_min = 2;
  int template_k_max = 12;
  int template_max_terms = 5000;
  int template_min_df = 1;
  int lda_topics = 50;
  int lda_iterations = 200;
  double lda_alpha = -1.0;
  double lda_eta = 0.01;
  int topic_terms = 20;
  int top_k_global = 20;

  // Random forests.
  int rf_trees = 100;
  int rf_max_depth = 12;
  int rf_features_per_split = 0;
  int rf_min_leaf = 2;
  bool aep_class_weighting = true;
  bool asp_class_weighting = false;

  double suggest_threshold = 0.5;

  // Synthetic corpus.
  int synth_entities = 200;
  int synth_classes = 4;
  int synth_slots = 8;
  int synth_articles = 1000;
  int synth_first_year = 2008;
  int synth_last_year = 2012;
  int synth_mentions = 30;  // distinct linked entities per article
  int synth_cited = 2;
  double synth_salience = 1.0;
  double synth_authority = 1.0;
  double synth_novelty = 1.0;
  double synth_adversarial = 0.0;
  double synth_slot_presence = 0.7;

  // Canonical JSON with every key, in a fixed order.
  std::string to_json() const;
  // Same as to_json() without `threads`, which never changes results. Reports
  // echo this form so runs at different thread counts compare equal.
  std::string echo_json() const;
  // Overlays the keys of `json` on the defaults. Unknown keys and values of
  // the wrong type are errors.
  static RunConfig from_json(std::string_view json);
  static RunConfig load(const std::string& path);
  // Sets one key from its textual value, with the same checks.
  void set(const std::string& key, const std::string& value);
};

}  // namespace news_placer

#endif  // NEWS_PLACER_CONFIG_H_
