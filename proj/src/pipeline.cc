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

#include "news_placer/pipeline.h"

#include <fmt/format.h>

#include "news_placer/common.h"

namespace news_placer {
namespace {

std::vector<NewsArticle> articles_before(const Dataset& data, int year) {
  std::vector<NewsArticle> out;
  for (const auto& a : data.corpus) {
    if (a.date.year < year) out.push_back(a);
  }
  return out;
}

std::vector<std::string> all_terms(const NewsArticle& article) {
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

}  // namespace

AepConfig aep_config(const RunConfig& config) {
  AepConfig c;
  c.novelty_lambda = config.novelty_lambda;
  c.novelty_mode = config.novelty_mode == "literal" ? NoveltyMode::kLiteral
                                                    : NoveltyMode::kCorrected;
  c.smoothing.beta = config.smoothing_beta;
  c.authority_tau = config.authority_tau;
  return c;
}

TemplateConfig template_config(const RunConfig& config) {
  TemplateConfig c;
  c.k_min = config.template_k_min;
  c.k_max = config.template_k_max;
  c.seed = config.seed;
  c.max_terms = static_cast<std::size_t>(config.template_max_terms);
  c.min_df = static_cast<std::size_t>(config.template_min_df);
  return c;
}

TopicConfig topic_config(const RunConfig& config) {
  TopicConfig c;
  c.topics = config.lda_topics;
  c.iterations = config.lda_iterations;
  c.seed = config.seed;
  c.alpha = config.lda_alpha;
  c.eta = config.lda_eta;
  return c;
}

AspConfig asp_config(const RunConfig& config) {
  AspConfig c;
  c.topic_terms = static_cast<std::size_t>(config.topic_terms);
  c.smoothing.beta = config.smoothing_beta;
  c.global_table_size = static_cast<std::size_t>(config.top_k_global);
  return c;
}

std::vector<int> feature_years(const Dataset& data) {
  std::vector<int> years;
  for (const auto& [year, snapshot] : data.snapshots) {
    if (data.snapshots.count(year - 1)) years.push_back(year);
  }
  return years;
}

AepIndexes build_aep_indexes(const Dataset& data, int year, const RunConfig& config) {
  const WikipediaSnapshot& previous = data.snapshot(year - 1);
  AepIndexes idx;
  idx.year = year;
  const auto before = articles_before(data, year);
  if (config.authority == "pagerank") {
    PageRankConfig pr;
    pr.damping = config.pagerank_damping;
    pr.tolerance = config.pagerank_tolerance;
    pr.max_iterations = config.pagerank_max_iterations;
    idx.authority = apriori_authority(build_entity_news_graph(before, previous), pr);
  } else {
    idx.authority = apriori_authority(before);
  }
  std::vector<const WikipediaSnapshot*> snapshots;
  for (const auto& [y, s] : data.snapshots) {
    if (y < year) snapshots.push_back(&s);
  }
  idx.domains = domain_authority(snapshots, config.domain_laplace);
  idx.articles = std::make_unique<ArticleIndex>(data.corpus);
  return idx;
}

AepYear compute_aep_year(const Dataset& data, int year, const RunConfig& config) {
  AepYear out;
  out.year = year;
  try {
    out.pairs = build_aep_ground_truth(data.corpus, data.snapshot(year), data.snapshot(year - 1),
                                       &out.stats, config.include_unlinked_citations);
  } catch (const Error& e) {
    throw Error(fmt::format("ground truth {}: {}", year, e.what()));
  }
  AepIndexes idx;
  try {
    idx = build_aep_indexes(data, year, config);
  } catch (const Error& e) {
    throw Error(fmt::format("aep indexes {}: {}", year, e.what()));
  }
  AepContext context;
  context.previous = &data.snapshot(year - 1);
  context.authority = &idx.authority;
  context.domains = &idx.domains;
  context.articles = idx.articles.get();
  context.config = aep_config(config);

  out.vectors.resize(out.pairs.size());
  parallel_for(out.pairs.size(), config.threads, [&](std::size_t i) {
    const NewsArticle* article = idx.articles->by_id(out.pairs[i].news_id);
    if (article == nullptr) throw Error("pair refers to unknown article " + out.pairs[i].news_id);
    out.vectors[i] = assemble_aep_vector(out.pairs[i], *article, context);
  });
  return out;
}

AspIndexes build_asp_indexes(const Dataset& data, int year, const RunConfig& config,
                             std::span<const NewsArticle> extra) {
  const WikipediaSnapshot& previous = data.snapshot(year - 1);
  AspIndexes idx;
  idx.year = year;
  idx.templates = build_templates(previous, data.hierarchy, template_config(config), config.threads);

  // Topic documents: the articles of years t-1 and t, and every section of
  // the t-1 snapshot.
  std::vector<std::vector<std::string>> docs;
  for (const auto& a : data.corpus) {
    if (a.date.year == year || a.date.year == year - 1) docs.push_back(all_terms(a));
  }
  for (const auto& a : extra) docs.push_back(all_terms(a));
  for (const auto& [id, profile] : previous.entities) {
    for (const auto& s : profile.sections) docs.push_back(terms_of(s.text));
  }
  std::erase_if(docs, [](const auto& d) { return d.empty(); });
  TopicConfig tc = topic_config(config);
  std::set<std::string> vocabulary;
  for (const auto& d : docs) vocabulary.insert(d.begin(), d.end());
  tc.topics = std::min<int>(tc.topics, static_cast<int>(vocabulary.size()));
  idx.topics = fit_topics(docs, tc);

  idx.tables = build_asp_global_tables(articles_before(data, year), previous,
                                       static_cast<std::size_t>(config.top_k_global));
  idx.articles = std::make_unique<ArticleIndex>(data.corpus);
  const AspConfig ac = asp_config(config);
  for (const auto& [class_id, tmpl] : idx.templates.templates()) {
    idx.slots.emplace(class_id, slot_candidates(tmpl, idx.topics, *idx.articles, ac));
  }
  return idx;
}

const SectionTemplate* template_for(const AspIndexes& indexes, const Dataset& data,
                                    const std::string& entity_id, int year) {
  for (int y : {year, year - 1}) {
    auto it = data.snapshots.find(y);
    if (it == data.snapshots.end()) continue;
    if (const EntityProfile* p = it->second.find(entity_id)) {
      return indexes.templates.for_classes(p->classes);
    }
  }
  return nullptr;
}

AspYear compute_asp_year(const Dataset& data, int year, const RunConfig& config,
                         std::span<const AepPair> pairs, const AspIndexes& indexes) {
  AspYear out;
  out.year = year;
  auto triples = build_asp_ground_truth(pairs, data.corpus, data.snapshot(year),
                                        indexes.templates, &out.stats);
  AspContext base;
  base.previous = &data.snapshot(year - 1);
  base.topics = &indexes.topics;
  base.articles = indexes.articles.get();
  base.tables = &indexes.tables;
  base.config = asp_config(config);

  std::vector<std::vector<AspRow>> rows(triples.size());
  std::vector<std::string> classes(triples.size());
  parallel_for(triples.size(), config.threads, [&](std::size_t i) {
    const SectionTemplate* tmpl = template_for(indexes, data, triples[i].entity_id, year);
    if (tmpl == nullptr) return;
    AspContext context = base;
    context.tmpl = tmpl;
    context.slots = &indexes.slots.at(tmpl->class_id);
    const NewsArticle* article = indexes.articles->by_id(triples[i].news_id);
    if (article == nullptr) return;
    rows[i] = assemble_asp_vectors(triples[i], *article, context);
    classes[i] = tmpl->class_id;
  });
  for (std::size_t i = 0; i < triples.size(); ++i) {
    if (rows[i].empty()) {
      ++out.skipped;
      continue;
    }
    std::string truth;
    for (const auto& r : rows[i]) {
      if (r.label == 1) truth = r.candidate_id;
    }
    out.triples.push_back(triples[i]);
    out.triple_class.push_back(classes[i]);
    out.truth.push_back(truth);
    out.rows.push_back(std::move(rows[i]));
  }
  return out;
}

}  // namespace news_placer
