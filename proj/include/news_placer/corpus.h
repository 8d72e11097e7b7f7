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

// News articles, yearly entity-page snapshots, the surface-form
// dictionary used for linking, and ground-truth construction for both
// placement tasks.

#ifndef NEWS_PLACER_CORPUS_H_
#define NEWS_PLACER_CORPUS_H_

#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "news_placer/textproc.h"

namespace news_placer {

struct Date {
  int year = 0;
  int month = 1;
  int day = 1;

  auto operator<=>(const Date&) const = default;
};

// Parses YYYY-MM-DD.
Date parse_date(std::string_view text);
std::string format_date(const Date& date);

struct EntityMention {
  std::string entity_id;
  std::string surface;
  std::size_t paragraph = 0;
  std::size_t start = 0;  // token offsets, half-open
  std::size_t end = 0;

  bool operator==(const EntityMention&) const = default;
};

struct NewsArticle {
  std::string id;
  std::string url;
  std::string domain;
  std::string title;
  Date date;
  std::vector<std::string> paragraphs;
  std::vector<TaggedParagraph> tokens;  // empty until tagged
  std::vector<EntityMention> mentions;

  // Distinct linked entity ids, sorted.
  std::set<std::string> entities() const;
};

struct NewsRef {
  std::string url;
  Date date;
};

struct Section {
  std::string title;
  std::string text;
  std::set<std::string> anchors;
  std::vector<NewsRef> news_refs;
};

struct EntityProfile {
  std::string entity_id;
  std::string title;
  std::set<std::string> classes;
  int year = 0;
  std::vector<Section> sections;
};

struct WikipediaSnapshot {
  int year = 0;
  std::map<std::string, EntityProfile> entities;

  const EntityProfile* find(const std::string& entity_id) const;
};

// Class ids with optional parents. Classes absent from the table are
// treated as roots.
class ClassHierarchy {
 public:
  // Throws when the parent chain would form a cycle.
  void add(const std::string& id, std::optional<std::string> parent);
  std::optional<std::string> parent(const std::string& id) const;
  // Number of ancestors (roots have depth 0).
  int depth(const std::string& id) const;
  const std::map<std::string, std::optional<std::string>>& classes() const {
    return parents_;
  }

 private:
  std::map<std::string, std::optional<std::string>> parents_;
};

struct SurfaceCandidate {
  std::string entity_id;
  double prior = 0.0;
};

// Case-folded surface string -> candidate entities with priors.
class SurfaceFormDictionary {
 public:
  // Throws if the priors for `surface` would sum above 1.
  void add(const std::string& surface, const std::string& entity_id,
           double prior);
  const std::vector<SurfaceCandidate>* find(const std::string& surface) const;
  // Longest surface length in tokens.
  std::size_t max_tokens() const { return max_tokens_; }
  const std::map<std::string, std::vector<SurfaceCandidate>>& entries() const {
    return entries_;
  }

 private:
  std::map<std::string, std::vector<SurfaceCandidate>> entries_;
  std::size_t max_tokens_ = 0;
};

enum class Relevance { kNonRelevant = 0, kRelevant = 1 };

struct AepPair {
  std::string news_id;
  std::string entity_id;
  Relevance label = Relevance::kNonRelevant;
  int year = 0;

  bool operator==(const AepPair&) const = default;
};

struct AspTriple {
  std::string news_id;
  std::string entity_id;
  std::string slot_id;
  int year = 0;
  // Title of the citing section at year t (not serialized).
  std::string section_title;

  bool operator==(const AspTriple&) const = default;
};

// Lowercased host of an http(s)-style URL, without port. Throws on
// unparseable input.
std::string extract_domain(std::string_view url);

// Lowercased scheme and host, fragment and trailing slash stripped.
std::string normalize_url(std::string_view url);

// --- ingestion -------------------------------------------------------------

std::vector<NewsArticle> load_news_corpus(const std::string& path);
std::vector<NewsArticle> parse_news_corpus(std::string_view jsonl,
                                           const std::string& source = "<memory>");
void write_news_corpus(std::span<const NewsArticle> corpus,
                       const std::string& path);
std::string news_article_to_json(const NewsArticle& article);

WikipediaSnapshot load_snapshot(const std::string& path, int year);
WikipediaSnapshot parse_snapshot(std::string_view jsonl, int year,
                                 const std::string& source = "<memory>");
void write_snapshot(const WikipediaSnapshot& snapshot, const std::string& path);

SurfaceFormDictionary load_dictionary(const std::string& path);
void write_dictionary(const SurfaceFormDictionary& dict,
                      const std::string& path);

// TSV: class_id \t parent_id (parent may be empty).
ClassHierarchy load_class_hierarchy(const std::string& path);
void write_class_hierarchy(const ClassHierarchy& hierarchy,
                           const std::string& path);

// --- linking ---------------------------------------------------------------

// Runs the fallback tagger on paragraphs that have no tokens yet.
void ensure_tagged(NewsArticle& article);

// Greedy longest match over each paragraph's tokens. For every start
// position the longest dictionary surface with an eligible candidate
// (prior >= min_prior) wins; the highest-prior candidate is chosen (ties
// go to the smaller entity id). Replaces any existing mentions.
NewsArticle link_entities(NewsArticle article,
                          const SurfaceFormDictionary& dict,
                          double min_prior = 0.3);

// --- ground truth ----------------------------------------------------------

struct GroundTruthStats {
  std::size_t articles_without_entities = 0;
  // Citations from entities the linker did not find in the article.
  std::size_t unlinked_citations = 0;
  std::size_t already_cited_pairs = 0;
  std::size_t unmapped_sections = 0;
  std::size_t missing_template = 0;
};

// Index from normalized URL to article, for citation matching and for
// looking up texts of referenced articles.
class ArticleIndex {
 public:
  explicit ArticleIndex(std::span<const NewsArticle> corpus);
  const NewsArticle* by_url(const std::string& url) const;
  const NewsArticle* by_id(const std::string& id) const;

 private:
  std::unordered_map<std::string, const NewsArticle*> by_url_;
  std::unordered_map<std::string, const NewsArticle*> by_id_;
};

// Normalized URLs cited by an entity profile (all sections).
std::set<std::string> cited_urls(const EntityProfile& profile);

// Pairs for year t = current.year. Candidate articles are those first
// cited at t (cited in `current`, not in `previous`) and uncited articles
// published in year t. Each e in phi(n) yields one pair; citations from
// entities outside phi(n) yield extra relevant pairs only when
// `include_unlinked_citations` is set, and are always counted.
std::vector<AepPair> build_aep_ground_truth(
    std::span<const NewsArticle> corpus, const WikipediaSnapshot& current,
    const WikipediaSnapshot& previous, GroundTruthStats* stats = nullptr,
    bool include_unlinked_citations = false);

class SectionTemplate;
class TemplateSet;

// One triple per (relevant pair, citing section). Sections that cannot be
// mapped, or entities without a template, are dropped and counted.
std::vector<AspTriple> build_asp_ground_truth(
    std::span<const AepPair> pairs, std::span<const NewsArticle> corpus,
    const WikipediaSnapshot& current, const TemplateSet& templates,
    GroundTruthStats* stats = nullptr);

void write_aep_ground_truth(std::span<const AepPair> pairs,
                            const std::string& path);
std::vector<AepPair> read_aep_ground_truth(const std::string& path);
void write_asp_ground_truth(std::span<const AspTriple> triples,
                            const std::string& path);
std::vector<AspTriple> read_asp_ground_truth(const std::string& path);

}  // namespace news_placer

#endif  // NEWS_PLACER_CORPUS_H_
