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

// Article-entity placement features: how salient an entity is in an
// article, how its authority compares with the entities it co-occurs
// with, how authoritative the news source is, and how novel the article is
// with respect to what the entity page already cites.

#ifndef NEWS_PLACER_AEP_FEATURES_H_
#define NEWS_PLACER_AEP_FEATURES_H_

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "news_placer/corpus.h"
#include "news_placer/feature_matrix.h"
#include "news_placer/pagerank.h"
#include "news_placer/textproc.h"

namespace news_placer {

// --- salience ----------------------------------------------------------------

// (|p(e,n)| / |p(n)|) * sum over paragraphs k (1-based) of ratio_k^(1/k),
// ratio_k = tf(e,k) / sum of other entities' tf in k, or tf(e,k) when no
// other entity occurs in k. Zero when e is not mentioned.
double relative_entity_frequency(const NewsArticle& article,
                                 const std::string& entity_id);

struct BaselineSalience {
  double mention_count = 0;
  double log_mention_count = 0;
  double first_paragraph = 0;  // 1-based, 0 when absent
  double first_sentence = 0;   // 1-based over the whole body, 0 when absent
  double in_title = 0;
  double in_first_paragraph = 0;
  double distinct_surfaces = 0;

  std::array<double, 7> values() const {
    return {mention_count, log_mention_count, first_paragraph, first_sentence,
            in_title,      in_first_paragraph, distinct_surfaces};
  }
};

// True when one of the entity's surface forms in the body, or its canonical
// title, occurs as a case-folded token run in the article title.
bool entity_in_title(const NewsArticle& article, const std::string& entity_id,
                     const std::string& canonical_title = {});

BaselineSalience baseline_salience_features(const NewsArticle& article,
                                            const std::string& entity_id,
                                            const std::string& canonical_title = {});

// --- authority ---------------------------------------------------------------

enum class AuthorityMode { kFrequency, kPageRank };

struct AuthorityIndex {
  AuthorityMode mode = AuthorityMode::kFrequency;
  std::map<std::string, double> scores;  // renormalized over entities
  std::map<std::string, double> raw;     // before renormalization
  std::string provenance;

  // Gamma(e); unknown entities score 0.
  double score(const std::string& entity_id) const;
};

// Vertices are entities and articles. Edges n -> e for e in phi(n) and
// e -> e' for every anchor e' of every section of e's previous-year
// profile. Anchors that are not known entities are skipped.
struct EntityNewsGraph {
  DirectedGraph graph;
  std::vector<std::string> vertex_names;  // "entity:<id>" or "news:<id>"
  std::map<std::string, std::size_t> entity_vertex;
  std::size_t skipped_anchors = 0;
};

EntityNewsGraph build_entity_news_graph(std::span<const NewsArticle> corpus,
                                        const WikipediaSnapshot& previous);

// Gamma(e) = mention occurrences of e / all mention occurrences.
AuthorityIndex apriori_authority(std::span<const NewsArticle> corpus);

// PageRank restricted to entity vertices and renormalized.
AuthorityIndex apriori_authority(const EntityNewsGraph& graph,
                                 const PageRankConfig& config = {});

// Share of phi(n) whose authority exceeds tau * Gamma(e). Throws when e is
// not linked in the article.
double relative_authority(const std::string& entity_id, const NewsArticle& article,
                          const AuthorityIndex& index, double tau = 1.0);

struct DomainAuthorityIndex {
  std::map<std::string, double> probability;
  double total_refs = 0;
  bool laplace = false;

  double score(const std::string& domain) const;
};

// P(D) = references from domain D / all references, over every section of
// every given snapshot. Throws when there are no references.
DomainAuthorityIndex domain_authority(std::span<const WikipediaSnapshot* const> snapshots,
                                      bool laplace = false);

// --- novelty -----------------------------------------------------------------

enum class NoveltyMode {
  kCorrected,  // lambda * KL' + (1 - lambda) * (1 - jaccard)
  kLiteral,    // lambda * KL' + (1 - lambda) * jaccard
};

// One previously cited article: KL(theta(n') || theta(n)) in nats and the
// entity overlap of the two articles.
struct NoveltyCandidate {
  double kl = 0.0;
  double jaccard = 0.0;
};

// KL / (1 + KL).
inline double normalized_kl(double kl) { return kl / (1.0 + kl); }

// Minimum over candidates of the mixed score; 1.0 when there are none.
double novelty_score(std::span<const NoveltyCandidate> candidates, double lambda,
                     NoveltyMode mode = NoveltyMode::kCorrected);

struct NoveltyResult {
  double value = 1.0;
  double min_raw_kl = 0.0;  // raw KL of the minimizing candidate
  std::size_t candidates = 0;
  std::size_t skipped = 0;  // cited articles whose text is unavailable
};

// Novelty of `article` for the entity whose previous-year profile is given
// (null means an empty profile).
NoveltyResult novelty(const NewsArticle& article, const EntityProfile* previous_profile,
                      const ArticleIndex& articles, double lambda,
                      NoveltyMode mode = NoveltyMode::kCorrected,
                      Smoothing smoothing = {});

// --- assembly ----------------------------------------------------------------

struct AepConfig {
  double novelty_lambda = 0.5;
  NoveltyMode novelty_mode = NoveltyMode::kCorrected;
  Smoothing smoothing;
  double authority_tau = 1.0;
};

inline constexpr std::array<const char*, 12> kAepFeatureNames = {
    "rel_entity_freq",   "mention_count",   "log_mention_count", "first_paragraph",
    "first_sentence",    "in_title",        "in_first_paragraph", "distinct_surfaces",
    "rel_authority",     "apriori_authority", "domain_authority", "novelty"};

// Columns of the baseline salience block within the AEP vector.
inline constexpr std::array<std::size_t, 7> kAepBaselineColumns = {1, 2, 3, 4, 5, 6, 7};

struct AepFeatureVector {
  std::string news_id;
  std::string entity_id;
  int year = 0;
  double rel_entity_freq = 0;
  BaselineSalience baseline;
  double rel_authority = 0;
  double apriori_authority = 0;
  double domain_authority = 0;
  double novelty = 0;
  double novelty_raw_kl = 0;
  Relevance label = Relevance::kNonRelevant;

  std::array<double, 12> values() const;
};

// Indexes built from year t-1 data that every pair of year t shares.
struct AepContext {
  const WikipediaSnapshot* previous = nullptr;
  const AuthorityIndex* authority = nullptr;
  const DomainAuthorityIndex* domains = nullptr;
  const ArticleIndex* articles = nullptr;
  AepConfig config;
};

AepFeatureVector assemble_aep_vector(const AepPair& pair, const NewsArticle& article,
                                     const AepContext& context);

// Feature rows for a batch of pairs (ids: news_id, entity_id, year).
FeatureMatrix aep_feature_matrix(std::span<const AepFeatureVector> vectors);

}  // namespace news_placer

#endif  // NEWS_PLACER_AEP_FEATURES_H_
