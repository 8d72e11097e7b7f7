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

#include "news_placer/aep_features.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "news_placer/common.h"

namespace news_placer {
namespace {

std::vector<std::string> article_terms(const NewsArticle& article) {
  std::vector<std::string> terms;
  if (article.tokens.size() == article.paragraphs.size()) {
    for (const auto& p : article.tokens) {
      auto t = terms_of(p);
      terms.insert(terms.end(), t.begin(), t.end());
    }
  } else {
    for (const auto& p : article.paragraphs) {
      auto t = terms_of(p);
      terms.insert(terms.end(), t.begin(), t.end());
    }
  }
  return terms;
}

// Sentence index (0-based, over the whole body) of the first token of every
// paragraph, plus per-token offsets, derived from sentence-final tokens.
std::vector<std::vector<std::size_t>> sentence_ids(const NewsArticle& article) {
  std::vector<std::vector<std::size_t>> ids;
  std::size_t sentence = 0;
  for (std::size_t p = 0; p < article.paragraphs.size(); ++p) {
    std::vector<std::string> tokens;
    if (p < article.tokens.size()) {
      for (const auto& t : article.tokens[p]) tokens.push_back(t.text);
    } else {
      tokens = tokenize(article.paragraphs[p]);
    }
    std::vector<std::size_t> row(tokens.size());
    bool open = false;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      row[i] = sentence;
      open = true;
      if (tokens[i] == "." || tokens[i] == "!" || tokens[i] == "?") {
        ++sentence;
        open = false;
      }
    }
    if (open) ++sentence;
    ids.push_back(std::move(row));
  }
  return ids;
}

bool contains_run(const std::vector<std::string>& haystack,
                  const std::vector<std::string>& needle) {
  if (needle.empty() || needle.size() > haystack.size()) return false;
  return std::search(haystack.begin(), haystack.end(), needle.begin(), needle.end()) !=
         haystack.end();
}

}  // namespace

double relative_entity_frequency(const NewsArticle& article,
                                 const std::string& entity_id) {
  const std::size_t paragraphs = article.paragraphs.size();
  if (paragraphs == 0) return 0.0;
  std::vector<double> own(paragraphs, 0.0);
  std::vector<double> others(paragraphs, 0.0);
  for (const auto& m : article.mentions) {
    if (m.paragraph >= paragraphs) continue;
    (m.entity_id == entity_id ? own : others)[m.paragraph] += 1.0;
  }
  double sum = 0.0;
  std::size_t present = 0;
  for (std::size_t k = 0; k < paragraphs; ++k) {
    if (own[k] == 0.0) continue;
    ++present;
    const double ratio = others[k] > 0.0 ? own[k] / others[k] : own[k];
    sum += std::pow(ratio, 1.0 / static_cast<double>(k + 1));
  }
  return static_cast<double>(present) / static_cast<double>(paragraphs) * sum;
}

bool entity_in_title(const NewsArticle& article, const std::string& entity_id,
                     const std::string& canonical_title) {
  const auto title = terms_of(article.title);
  if (title.empty()) return false;
  std::set<std::string> surfaces;
  for (const auto& m : article.mentions) {
    if (m.entity_id == entity_id) surfaces.insert(m.surface);
  }
  if (!canonical_title.empty()) surfaces.insert(canonical_title);
  for (const auto& s : surfaces) {
    if (contains_run(title, terms_of(s))) return true;
  }
  return false;
}

BaselineSalience baseline_salience_features(const NewsArticle& article,
                                            const std::string& entity_id,
                                            const std::string& canonical_title) {
  BaselineSalience f;
  std::set<std::string> surfaces;
  const auto sentences = sentence_ids(article);
  std::size_t first_paragraph = std::numeric_limits<std::size_t>::max();
  std::size_t first_sentence = std::numeric_limits<std::size_t>::max();
  for (const auto& m : article.mentions) {
    if (m.entity_id != entity_id) continue;
    f.mention_count += 1.0;
    surfaces.insert(m.surface);
    first_paragraph = std::min(first_paragraph, m.paragraph);
    if (m.paragraph < sentences.size() && m.start < sentences[m.paragraph].size()) {
      first_sentence = std::min(first_sentence, sentences[m.paragraph][m.start]);
    }
  }
  if (f.mention_count == 0.0) return f;
  f.log_mention_count = std::log1p(f.mention_count);
  f.first_paragraph = static_cast<double>(first_paragraph + 1);
  if (first_sentence != std::numeric_limits<std::size_t>::max()) {
    f.first_sentence = static_cast<double>(first_sentence + 1);
  }
  f.in_title = entity_in_title(article, entity_id, canonical_title) ? 1.0 : 0.0;
  f.in_first_paragraph = first_paragraph == 0 ? 1.0 : 0.0;
  f.distinct_surfaces = static_cast<double>(surfaces.size());
  return f;
}

double AuthorityIndex::score(const std::string& entity_id) const {
  auto it = scores.find(entity_id);
  return it == scores.end() ? 0.0 : it->second;
}

EntityNewsGraph build_entity_news_graph(std::span<const NewsArticle> corpus,
                                        const WikipediaSnapshot& previous) {
  EntityNewsGraph g;
  std::set<std::string> entities;
  for (const auto& [id, profile] : previous.entities) entities.insert(id);
  for (const auto& article : corpus) {
    for (const auto& e : article.entities()) entities.insert(e);
  }
  for (const auto& e : entities) {
    g.entity_vertex.emplace(e, g.vertex_names.size());
    g.vertex_names.push_back("entity:" + e);
  }
  for (const auto& article : corpus) {
    const std::size_t v = g.vertex_names.size();
    g.vertex_names.push_back("news:" + article.id);
    for (const auto& e : article.entities()) {
      g.graph.edges.emplace_back(v, g.entity_vertex.at(e));
    }
  }
  for (const auto& [id, profile] : previous.entities) {
    const std::size_t from = g.entity_vertex.at(id);
    for (const auto& section : profile.sections) {
      for (const auto& anchor : section.anchors) {
        auto it = g.entity_vertex.find(anchor);
        if (it == g.entity_vertex.end()) {
          ++g.skipped_anchors;
          continue;
        }
        if (it->second != from) g.graph.edges.emplace_back(from, it->second);
      }
    }
  }
  g.graph.vertex_count = g.vertex_names.size();
  return g;
}

AuthorityIndex apriori_authority(std::span<const NewsArticle> corpus) {
  AuthorityIndex index;
  index.mode = AuthorityMode::kFrequency;
  double total = 0.0;
  for (const auto& article : corpus) {
    for (const auto& m : article.mentions) {
      index.raw[m.entity_id] += 1.0;
      total += 1.0;
    }
  }
  if (total == 0.0) throw Error("authority: corpus has no entity mentions");
  for (const auto& [id, count] : index.raw) index.scores[id] = count / total;
  index.provenance = fmt::format("frequency:{} articles", corpus.size());
  return index;
}

AuthorityIndex apriori_authority(const EntityNewsGraph& graph,
                                 const PageRankConfig& config) {
  if (graph.entity_vertex.empty()) throw Error("authority: graph has no entities");
  const Eigen::VectorXd scores = pagerank(graph.graph, config);
  AuthorityIndex index;
  index.mode = AuthorityMode::kPageRank;
  double total = 0.0;
  for (const auto& [id, v] : graph.entity_vertex) {
    const double s = scores(static_cast<Eigen::Index>(v));
    index.raw[id] = s;
    total += s;
  }
  for (const auto& [id, s] : index.raw) index.scores[id] = s / total;
  index.provenance = fmt::format("pagerank:{} vertices", graph.graph.vertex_count);
  return index;
}

double relative_authority(const std::string& entity_id, const NewsArticle& article,
                          const AuthorityIndex& index, double tau) {
  const auto linked = article.entities();
  if (!linked.count(entity_id)) {
    throw Error("relative authority: entity '" + entity_id + "' not linked in article '" +
                article.id + "'");
  }
  const double own = index.score(entity_id);
  std::size_t higher = 0;
  for (const auto& other : linked) {
    if (other != entity_id && index.score(other) > tau * own) ++higher;
  }
  return static_cast<double>(higher) / static_cast<double>(linked.size());
}

double DomainAuthorityIndex::score(const std::string& domain) const {
  auto it = probability.find(domain);
  if (laplace) {
    const double count = it == probability.end() ? 0.0 : it->second * total_refs;
    return (count + 1.0) /
           (total_refs + static_cast<double>(probability.size()) + 1.0);
  }
  return it == probability.end() ? 0.0 : it->second;
}

DomainAuthorityIndex domain_authority(std::span<const WikipediaSnapshot* const> snapshots,
                                      bool laplace) {
  DomainAuthorityIndex index;
  index.laplace = laplace;
  std::map<std::string, double> counts;
  for (const auto* snapshot : snapshots) {
    for (const auto& [id, profile] : snapshot->entities) {
      for (const auto& section : profile.sections) {
        for (const auto& ref : section.news_refs) {
          try {
            counts[extract_domain(ref.url)] += 1.0;
            index.total_refs += 1.0;
          } catch (const Error&) {
            // References with unparseable URLs carry no domain.
          }
        }
      }
    }
  }
  if (index.total_refs == 0.0) throw Error("domain authority: no news references");
  for (const auto& [domain, count] : counts) {
    index.probability[domain] = count / index.total_refs;
  }
  return index;
}

double novelty_score(std::span<const NoveltyCandidate> candidates, double lambda,
                     NoveltyMode mode) {
  if (candidates.empty()) return 1.0;
  double best = std::numeric_limits<double>::infinity();
  for (const auto& c : candidates) {
    const double overlap = mode == NoveltyMode::kCorrected ? 1.0 - c.jaccard : c.jaccard;
    best = std::min(best, lambda * normalized_kl(c.kl) + (1.0 - lambda) * overlap);
  }
  return best;
}

NoveltyResult novelty(const NewsArticle& article, const EntityProfile* previous_profile,
                      const ArticleIndex& articles, double lambda, NoveltyMode mode,
                      Smoothing smoothing) {
  NoveltyResult result;
  if (previous_profile == nullptr) return result;
  const auto own_terms = article_terms(article);
  const auto own_entities = article.entities();
  std::vector<NoveltyCandidate> candidates;
  for (const auto& url : cited_urls(*previous_profile)) {
    const NewsArticle* cited = articles.by_url(url);
    if (cited == nullptr) {
      ++result.skipped;
      continue;
    }
    const auto cited_terms = article_terms(*cited);
    if (cited_terms.empty() || own_terms.empty()) {
      ++result.skipped;
      continue;
    }
    const auto vocabulary = union_vocabulary({cited_terms, own_terms});
    const auto p = language_model(cited_terms, vocabulary, smoothing);
    const auto q = language_model(own_terms, vocabulary, smoothing);
    candidates.push_back({kl_divergence(p, q), jaccard(cited->entities(), own_entities)});
  }
  result.candidates = candidates.size();
  result.value = novelty_score(candidates, lambda, mode);
  if (!candidates.empty()) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& c : candidates) {
      const double v = novelty_score(std::span(&c, 1), lambda, mode);
      if (v < best) {
        best = v;
        result.min_raw_kl = c.kl;
      }
    }
  }
  return result;
}

std::array<double, 12> AepFeatureVector::values() const {
  const auto b = baseline.values();
  return {rel_entity_freq, b[0], b[1], b[2], b[3], b[4], b[5], b[6],
          rel_authority,   apriori_authority, domain_authority, novelty};
}

AepFeatureVector assemble_aep_vector(const AepPair& pair, const NewsArticle& article,
                                     const AepContext& context) {
  const std::string pair_id =
      fmt::format("({}, {}, {})", pair.news_id, pair.entity_id, pair.year);
  try {
    if (context.previous == nullptr || context.authority == nullptr ||
        context.domains == nullptr || context.articles == nullptr) {
      throw Error("incomplete feature context");
    }
    if (context.previous->year + 1 != pair.year) {
      throw Error(fmt::format("features need the {} snapshot, got {}", pair.year - 1,
                              context.previous->year));
    }
    if (article.id != pair.news_id) throw Error("article does not match pair");
    if (!article.entities().count(pair.entity_id)) {
      throw Error("entity not linked in article");
    }
    const EntityProfile* profile = context.previous->find(pair.entity_id);

    AepFeatureVector v;
    v.news_id = pair.news_id;
    v.entity_id = pair.entity_id;
    v.year = pair.year;
    v.label = pair.label;
    v.rel_entity_freq = relative_entity_frequency(article, pair.entity_id);
    v.baseline = baseline_salience_features(article, pair.entity_id,
                                            profile != nullptr ? profile->title : "");
    v.rel_authority = relative_authority(pair.entity_id, article, *context.authority,
                                         context.config.authority_tau);
    v.apriori_authority = context.authority->score(pair.entity_id);
    v.domain_authority = context.domains->score(article.domain);
    const auto n = novelty(article, profile, *context.articles, context.config.novelty_lambda,
                           context.config.novelty_mode, context.config.smoothing);
    v.novelty = n.value;
    v.novelty_raw_kl = n.min_raw_kl;
    for (double x : v.values()) {
      if (!std::isfinite(x)) throw Error("non-finite feature value");
    }
    return v;
  } catch (const Error& e) {
    throw Error("aep features for pair " + pair_id + ": " + e.what());
  }
}

FeatureMatrix aep_feature_matrix(std::span<const AepFeatureVector> vectors) {
  FeatureMatrix m;
  m.id_names = {"news_id", "entity_id", "year"};
  m.feature_names.assign(kAepFeatureNames.begin(), kAepFeatureNames.end());
  m.values.resize(static_cast<Eigen::Index>(vectors.size()),
                  static_cast<Eigen::Index>(kAepFeatureNames.size()));
  for (std::size_t r = 0; r < vectors.size(); ++r) {
    const auto values = vectors[r].values();
    for (std::size_t c = 0; c < values.size(); ++c) {
      m.values(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = values[c];
    }
    m.ids.push_back({vectors[r].news_id, vectors[r].entity_id, std::to_string(vectors[r].year)});
    m.labels.push_back(vectors[r].label == Relevance::kRelevant ? 1 : 0);
  }
  return m;
}

}  // namespace news_placer
