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

// Article-section placement features. Every (article, entity) triple is
// expanded into one row per candidate section: the slots of the class
// template plus the entity's own sections that no slot title covers.

#ifndef NEWS_PLACER_ASP_FEATURES_H_
#define NEWS_PLACER_ASP_FEATURES_H_

#include <array>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "news_placer/corpus.h"
#include "news_placer/feature_matrix.h"
#include "news_placer/templates.h"
#include "news_placer/textproc.h"
#include "news_placer/topics.h"

namespace news_placer {

inline constexpr std::size_t kAspFeatureCount = 33;

// Column names in row order.
const std::array<std::string, kAspFeatureCount>& asp_feature_names();

// Column of the whole-article cosine feature.
inline constexpr std::size_t kAspCosineColumn = 11;

// Entities and classes ranked in the article that get a top-k indicator.
inline constexpr std::size_t kAspTopK = 5;

struct AspConfig {
  std::size_t topic_terms = 20;  // m
  Smoothing smoothing;
  std::size_t global_table_size = 20;
};

// One candidate section an article may be placed into.
struct AspCandidate {
  std::string id;        // slot id, or "<entity>/<normalized title>"
  bool is_slot = true;
  std::set<std::string> title_terms;
  std::vector<std::string> terms;
  std::map<std::string, double> counts;  // term counts of `terms`
  TermVector vector;  // unit tf-idf under the template idf
  std::set<std::string> anchors;
  std::array<std::set<std::string>, 3> pos_ngrams;
  std::set<std::string> topic_terms;
  std::set<std::string> reference_topic_terms;  // of the cited articles
};

// Global frequency tables behind the top-k indicators.
struct AspGlobalTables {
  std::set<std::string> entities;
  std::set<std::string> classes;
};

// Most frequently mentioned entities and classes over the given articles.
// Classes of an entity come from `snapshot`; ties break by id.
AspGlobalTables build_asp_global_tables(std::span<const NewsArticle> articles,
                                        const WikipediaSnapshot& snapshot,
                                        std::size_t size);

// Top-m terms of the dominant topic of `terms`.
std::set<std::string> topic_terms(const TopicModel& model,
                                  std::span<const std::string> terms, std::size_t m);

// Jaccard over POS n-gram type sets, n = 1, 2, 3.
std::array<double, 3> syntactic_features(const std::array<std::set<std::string>, 3>& a,
                                         const std::array<std::set<std::string>, 3>& b);

// KL(theta(paragraph) || theta(candidate)) over their union vocabulary;
// nullopt when the paragraph has no terms.
std::optional<double> paragraph_kl(std::span<const std::string> paragraph,
                                   std::span<const std::string> candidate,
                                   Smoothing smoothing);

// Same divergence from term counts.
std::optional<double> paragraph_kl(const std::map<std::string, double>& paragraph,
                                   const std::map<std::string, double>& candidate,
                                   Smoothing smoothing);

// Entity id jaccard, and jaccard of the classes of those entities.
// Entities missing from `snapshot` are classless; they are counted.
std::array<double, 2> entity_features(const std::set<std::string>& article_entities,
                                      const std::set<std::string>& anchors,
                                      const WikipediaSnapshot& snapshot,
                                      std::size_t* classless = nullptr);

// Per-tag counts, #paragraphs, token length, |phi(n)|, then top_k entity
// and top_k class indicators.
std::vector<double> frequency_features(const NewsArticle& article,
                                       const AspGlobalTables& tables,
                                       const WikipediaSnapshot& snapshot,
                                       std::size_t top_k);

// Candidates for the template slots. `articles` resolves the news cited by
// each slot; unresolvable citations are ignored.
std::vector<AspCandidate> slot_candidates(const SectionTemplate& tmpl,
                                          const TopicModel& topics,
                                          const ArticleIndex& articles,
                                          const AspConfig& config);

// Candidates for sections of `profile` whose normalized title matches no
// slot member title.
std::vector<AspCandidate> private_candidates(const EntityProfile& profile,
                                             const SectionTemplate& tmpl,
                                             const TopicModel& topics,
                                             const ArticleIndex& articles,
                                             const AspConfig& config);

struct AspRow {
  std::string news_id;
  std::string entity_id;
  int year = 0;
  std::string candidate_id;
  std::array<double, kAspFeatureCount> values{};
  int label = 0;
};

// Read-only inputs shared by every triple of one year; all built from year
// t-1 data.
struct AspContext {
  const SectionTemplate* tmpl = nullptr;
  const std::vector<AspCandidate>* slots = nullptr;
  const WikipediaSnapshot* previous = nullptr;
  const TopicModel* topics = nullptr;
  const ArticleIndex* articles = nullptr;
  const AspGlobalTables* tables = nullptr;
  AspConfig config;
};

// Id of the candidate the triple is labeled with: the entity's private
// section when the citing title matches one, else the triple's slot.
std::string true_candidate(const AspTriple& triple, std::span<const AspCandidate> rows);

// One row per candidate with exactly one positive. Returns an empty vector
// when the triple's slot is not in the template.
std::vector<AspRow> assemble_asp_vectors(const AspTriple& triple, const NewsArticle& article,
                                         const AspContext& context);

// ids: news_id, entity_id, year, candidate_id.
FeatureMatrix asp_feature_matrix(std::span<const AspRow> rows);

}  // namespace news_placer

#endif  // NEWS_PLACER_ASP_FEATURES_H_
