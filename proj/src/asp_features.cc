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

#include "news_placer/asp_features.h"

#include <algorithm>
#include <cmath>
#include <map>

#include <fmt/format.h>

#include "news_placer/common.h"

namespace news_placer {
namespace {

std::vector<std::vector<std::string>> paragraph_terms(const NewsArticle& article) {
  std::vector<std::vector<std::string>> out;
  for (std::size_t p = 0; p < article.paragraphs.size(); ++p) {
    out.push_back(p < article.tokens.size() ? terms_of(article.tokens[p])
                                            : terms_of(article.paragraphs[p]));
  }
  return out;
}

std::vector<TaggedParagraph> tagged(const NewsArticle& article) {
  if (article.tokens.size() == article.paragraphs.size()) return article.tokens;
  return tokenize_and_tag(article.paragraphs);
}

std::set<std::string> set_of_terms(std::string_view text) {
  auto terms = terms_of(text);
  return {terms.begin(), terms.end()};
}

TermVector unit_vector(std::span<const std::string> terms, const IdfTable& idf) {
  TermVector v = term_vector(terms, &idf);
  if (v.norm() == 0.0) v = term_vector(terms);
  return v.normalized();
}

std::set<std::string> reference_terms(const std::set<std::string>& urls,
                                      const TopicModel& topics,
                                      const ArticleIndex& articles, std::size_t m) {
  std::vector<std::string> terms;
  for (const auto& url : urls) {
    const NewsArticle* cited = articles.by_url(url);
    if (cited == nullptr) continue;
    for (const auto& p : paragraph_terms(*cited)) terms.insert(terms.end(), p.begin(), p.end());
  }
  if (terms.empty()) return {};
  return topic_terms(topics, terms, m);
}

// Classes of an entity, empty when the entity is unknown.
const std::set<std::string>* classes_of(const WikipediaSnapshot& snapshot,
                                        const std::string& entity_id) {
  const EntityProfile* profile = snapshot.find(entity_id);
  return profile == nullptr ? nullptr : &profile->classes;
}

// Keys ordered by count descending, then by key.
std::vector<std::string> ranked(const std::map<std::string, double>& counts) {
  std::vector<std::pair<std::string, double>> items(counts.begin(), counts.end());
  std::stable_sort(items.begin(), items.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  std::vector<std::string> out;
  for (auto& [key, count] : items) out.push_back(key);
  return out;
}

std::map<std::string, double> class_counts(const std::map<std::string, double>& entity_counts,
                                           const WikipediaSnapshot& snapshot) {
  std::map<std::string, double> counts;
  for (const auto& [entity, count] : entity_counts) {
    if (const auto* classes = classes_of(snapshot, entity)) {
      for (const auto& c : *classes) counts[c] += count;
    }
  }
  return counts;
}

std::map<std::string, double> count_terms(std::span<const std::string> terms) {
  std::map<std::string, double> counts;
  for (const auto& t : terms) counts[t] += 1.0;
  return counts;
}

// Calls f(count in a, count in b) for every term of either map, in term
// order.
template <typename F>
void for_each_union(const std::map<std::string, double>& a,
                    const std::map<std::string, double>& b, F f) {
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      f(ia->second, 0.0);
      ++ia;
    } else if (ia == a.end() || ib->first < ia->first) {
      f(0.0, ib->second);
      ++ib;
    } else {
      f(ia->second, ib->second);
      ++ia;
      ++ib;
    }
  }
}

}  // namespace

const std::array<std::string, kAspFeatureCount>& asp_feature_names() {
  static const std::array<std::string, kAspFeatureCount> names = [] {
    std::array<std::string, kAspFeatureCount> n;
    std::size_t i = 0;
    n[i++] = "topic_section";
    n[i++] = "topic_references";
    n[i++] = "pos_1gram";
    n[i++] = "pos_2gram";
    n[i++] = "pos_3gram";
    n[i++] = "title_jaccard";
    for (int k = 1; k <= 5; ++k) n[i++] = fmt::format("kl_p{}", k);
    n[i++] = "cosine";
    n[i++] = "entity_jaccard";
    n[i++] = "class_jaccard";
    for (const char* tag : kTagSet) n[i++] = fmt::format("tag_{}", tag);
    n[i++] = "paragraphs";
    n[i++] = "length";
    n[i++] = "entity_count";
    for (std::size_t k = 1; k <= kAspTopK; ++k) n[i++] = fmt::format("top_entity_{}", k);
    for (std::size_t k = 1; k <= kAspTopK; ++k) n[i++] = fmt::format("top_class_{}", k);
    return n;
  }();
  return names;
}

AspGlobalTables build_asp_global_tables(std::span<const NewsArticle> articles,
                                        const WikipediaSnapshot& snapshot,
                                        std::size_t size) {
  std::map<std::string, double> entity_counts;
  for (const auto& article : articles) {
    for (const auto& m : article.mentions) entity_counts[m.entity_id] += 1.0;
  }
  AspGlobalTables tables;
  const auto entities = ranked(entity_counts);
  const auto classes = ranked(class_counts(entity_counts, snapshot));
  for (std::size_t i = 0; i < std::min(size, entities.size()); ++i) {
    tables.entities.insert(entities[i]);
  }
  for (std::size_t i = 0; i < std::min(size, classes.size()); ++i) {
    tables.classes.insert(classes[i]);
  }
  return tables;
}

std::set<std::string> topic_terms(const TopicModel& model,
                                  std::span<const std::string> terms, std::size_t m) {
  const auto top = model.top_terms(model.dominant_topic(terms), m);
  return {top.begin(), top.end()};
}

std::array<double, 3> syntactic_features(const std::array<std::set<std::string>, 3>& a,
                                         const std::array<std::set<std::string>, 3>& b) {
  return {jaccard(a[0], b[0]), jaccard(a[1], b[1]), jaccard(a[2], b[2])};
}

std::optional<double> paragraph_kl(std::span<const std::string> paragraph,
                                   std::span<const std::string> candidate,
                                   Smoothing smoothing) {
  return paragraph_kl(count_terms(paragraph), count_terms(candidate), smoothing);
}

std::optional<double> paragraph_kl(const std::map<std::string, double>& paragraph,
                                   const std::map<std::string, double>& candidate,
                                   Smoothing smoothing) {
  if (paragraph.empty() || candidate.empty()) return std::nullopt;
  double p_length = 0.0, q_length = 0.0;
  for (const auto& [t, c] : paragraph) p_length += c;
  for (const auto& [t, c] : candidate) q_length += c;
  std::size_t vocabulary = 0;
  for_each_union(paragraph, candidate, [&](double, double) { ++vocabulary; });
  const double beta = smoothing.beta;
  const double background = beta / static_cast<double>(vocabulary);
  double kl = 0.0;
  for_each_union(paragraph, candidate, [&](double cp, double cq) {
    const double p = (1.0 - beta) * cp / p_length + background;
    const double q = (1.0 - beta) * cq / q_length + background;
    if (p > 0.0) kl += p * std::log(p / q);
  });
  return std::max(0.0, kl);
}

std::array<double, 2> entity_features(const std::set<std::string>& article_entities,
                                      const std::set<std::string>& anchors,
                                      const WikipediaSnapshot& snapshot,
                                      std::size_t* classless) {
  auto classes = [&](const std::set<std::string>& entities) {
    std::set<std::string> out;
    for (const auto& e : entities) {
      if (const auto* c = classes_of(snapshot, e)) {
        out.insert(c->begin(), c->end());
      } else if (classless != nullptr) {
        ++*classless;
      }
    }
    return out;
  };
  return {jaccard(article_entities, anchors),
          jaccard(classes(article_entities), classes(anchors))};
}

std::vector<double> frequency_features(const NewsArticle& article,
                                       const AspGlobalTables& tables,
                                       const WikipediaSnapshot& snapshot,
                                       std::size_t top_k) {
  std::vector<double> out(kTagCount, 0.0);
  double length = 0.0;
  for (const auto& paragraph : tagged(article)) {
    for (const auto& token : paragraph) {
      length += 1.0;
      for (std::size_t t = 0; t < kTagCount; ++t) {
        if (token.tag == kTagSet[t]) out[t] += 1.0;
      }
    }
  }
  out.push_back(static_cast<double>(article.paragraphs.size()));
  out.push_back(length);
  out.push_back(static_cast<double>(article.entities().size()));

  std::map<std::string, double> entity_counts;
  for (const auto& m : article.mentions) entity_counts[m.entity_id] += 1.0;
  const auto entities = ranked(entity_counts);
  const auto classes = ranked(class_counts(entity_counts, snapshot));
  for (std::size_t k = 0; k < top_k; ++k) {
    out.push_back(k < entities.size() && tables.entities.count(entities[k]) ? 1.0 : 0.0);
  }
  for (std::size_t k = 0; k < top_k; ++k) {
    out.push_back(k < classes.size() && tables.classes.count(classes[k]) ? 1.0 : 0.0);
  }
  return out;
}

std::vector<AspCandidate> slot_candidates(const SectionTemplate& tmpl,
                                          const TopicModel& topics,
                                          const ArticleIndex& articles,
                                          const AspConfig& config) {
  std::vector<AspCandidate> out;
  for (const auto& slot : tmpl.slots) {
    AspCandidate c;
    c.id = slot.slot_id;
    c.is_slot = true;
    for (const auto& title : slot.member_titles) {
      const auto t = set_of_terms(title);
      c.title_terms.insert(t.begin(), t.end());
    }
    c.terms = slot.aggregate_terms;
    c.counts = count_terms(c.terms);
    c.vector = slot.aggregate_text_vector;
    c.anchors = slot.anchors;
    c.pos_ngrams = slot.pos_ngrams;
    c.topic_terms = topic_terms(topics, c.terms, config.topic_terms);
    c.reference_topic_terms = reference_terms(slot.news_urls, topics, articles,
                                              config.topic_terms);
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<AspCandidate> private_candidates(const EntityProfile& profile,
                                             const SectionTemplate& tmpl,
                                             const TopicModel& topics,
                                             const ArticleIndex& articles,
                                             const AspConfig& config) {
  std::set<std::string> covered;
  for (const auto& slot : tmpl.slots) {
    for (const auto& title : slot.member_titles) covered.insert(normalize_section_title(title));
  }
  std::vector<AspCandidate> out;
  for (const auto& section : profile.sections) {
    const std::string title = normalize_section_title(section.title);
    if (covered.count(title)) continue;
    AspCandidate c;
    c.id = profile.entity_id + "/" + title;
    c.is_slot = false;
    c.title_terms = set_of_terms(section.title);
    c.terms = terms_of(section.text);
    if (c.terms.empty()) continue;
    c.counts = count_terms(c.terms);
    c.vector = unit_vector(c.terms, tmpl.idf);
    c.anchors = section.anchors;
    std::vector<std::string> tags;
    for (const auto& t : tag_tokens(tokenize(section.text))) tags.push_back(t.tag);
    c.pos_ngrams = pos_ngrams(tags);
    c.topic_terms = topic_terms(topics, c.terms, config.topic_terms);
    std::set<std::string> urls;
    for (const auto& ref : section.news_refs) urls.insert(normalize_url(ref.url));
    c.reference_topic_terms = reference_terms(urls, topics, articles, config.topic_terms);
    out.push_back(std::move(c));
  }
  return out;
}

std::string true_candidate(const AspTriple& triple, std::span<const AspCandidate> rows) {
  const std::string private_id = triple.entity_id + "/" +
                                 normalize_section_title(triple.section_title);
  for (const auto& c : rows) {
    if (!c.is_slot && c.id == private_id) return c.id;
  }
  return triple.slot_id;
}

std::vector<AspRow> assemble_asp_vectors(const AspTriple& triple, const NewsArticle& article,
                                         const AspContext& context) {
  if (context.tmpl == nullptr || context.slots == nullptr || context.previous == nullptr ||
      context.topics == nullptr || context.articles == nullptr || context.tables == nullptr) {
    throw Error("asp features: incomplete context");
  }
  if (context.previous->year + 1 != triple.year) {
    throw Error(fmt::format("asp features for ({}, {}, {}): need the {} snapshot, got {}",
                            triple.news_id, triple.entity_id, triple.year, triple.year - 1,
                            context.previous->year));
  }
  if (context.tmpl->slot(triple.slot_id) == nullptr) return {};

  std::vector<AspCandidate> privates;
  if (const EntityProfile* profile = context.previous->find(triple.entity_id)) {
    privates = private_candidates(*profile, *context.tmpl, *context.topics, *context.articles,
                                  context.config);
  }
  std::vector<const AspCandidate*> candidates;
  for (const auto& c : *context.slots) candidates.push_back(&c);
  for (const auto& c : privates) candidates.push_back(&c);
  const std::string truth = true_candidate(triple, privates);

  // Article-side quantities shared by all rows.
  const auto paragraphs = paragraph_terms(article);
  std::vector<std::map<std::string, double>> paragraph_counts;
  for (const auto& p : paragraphs) paragraph_counts.push_back(count_terms(p));
  std::vector<std::string> all_terms;
  for (const auto& p : paragraphs) all_terms.insert(all_terms.end(), p.begin(), p.end());
  const auto article_topic = topic_terms(*context.topics, all_terms, context.config.topic_terms);
  std::array<std::set<std::string>, 3> article_grams;
  for (const auto& paragraph : tagged(article)) {
    std::vector<std::string> tags;
    for (const auto& t : paragraph) tags.push_back(t.tag);
    const auto g = pos_ngrams(tags);
    for (std::size_t n = 0; n < 3; ++n) article_grams[n].insert(g[n].begin(), g[n].end());
  }
  const auto title_terms = set_of_terms(article.title);
  const TermVector article_vector = unit_vector(all_terms, context.tmpl->idf);
  const auto entities = article.entities();
  const auto frequency =
      frequency_features(article, *context.tables, *context.previous, kAspTopK);

  std::vector<AspRow> rows;
  std::vector<std::array<std::optional<double>, 5>> kls;
  double max_kl = 0.0;
  for (const auto* c : candidates) {
    AspRow row;
    row.news_id = triple.news_id;
    row.entity_id = triple.entity_id;
    row.year = triple.year;
    row.candidate_id = c->id;
    row.label = c->id == truth ? 1 : 0;
    auto& v = row.values;
    std::size_t i = 0;
    v[i++] = jaccard(article_topic, c->topic_terms);
    v[i++] = jaccard(article_topic, c->reference_topic_terms);
    for (double x : syntactic_features(article_grams, c->pos_ngrams)) v[i++] = x;
    v[i++] = jaccard(title_terms, c->title_terms);
    std::array<std::optional<double>, 5> kl;
    for (std::size_t k = 0; k < 5; ++k) {
      if (k < paragraphs.size()) {
        kl[k] = paragraph_kl(paragraph_counts[k], c->counts, context.config.smoothing);
      }
      if (kl[k]) max_kl = std::max(max_kl, *kl[k]);
    }
    kls.push_back(kl);
    i += 5;
    v[i++] = cosine(article_vector, c->vector);
    for (double x : entity_features(entities, c->anchors, *context.previous)) v[i++] = x;
    for (double x : frequency) v[i++] = x;
    if (i != kAspFeatureCount) throw Error("asp features: row width mismatch");
    rows.push_back(std::move(row));
  }
  // Missing paragraphs get a value worse than any observed divergence.
  const double sentinel = max_kl + 1.0;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t k = 0; k < 5; ++k) rows[r].values[6 + k] = kls[r][k].value_or(sentinel);
    for (double x : rows[r].values) {
      if (!std::isfinite(x)) {
        throw Error(fmt::format("asp features for ({}, {}, {}): non-finite value",
                                triple.news_id, triple.entity_id, triple.year));
      }
    }
  }
  return rows;
}

FeatureMatrix asp_feature_matrix(std::span<const AspRow> rows) {
  FeatureMatrix m;
  m.id_names = {"news_id", "entity_id", "year", "candidate_id"};
  const auto& names = asp_feature_names();
  m.feature_names.assign(names.begin(), names.end());
  m.values.resize(static_cast<Eigen::Index>(rows.size()),
                  static_cast<Eigen::Index>(kAspFeatureCount));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < kAspFeatureCount; ++c) {
      m.values(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rows[r].values[c];
    }
    m.ids.push_back({rows[r].news_id, rows[r].entity_id, std::to_string(rows[r].year),
                     rows[r].candidate_id});
    m.labels.push_back(rows[r].label);
  }
  return m;
}

}  // namespace news_placer
