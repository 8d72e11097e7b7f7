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

// Year-level feature computation. Features of year t only read the year
// t-1 snapshot and earlier ones, articles, and the year-t references that
// define the labels; year-t section text is never read.

#ifndef NEWS_PLACER_PIPELINE_H_
#define NEWS_PLACER_PIPELINE_H_

#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "news_placer/aep_features.h"
#include "news_placer/asp_features.h"
#include "news_placer/config.h"
#include "news_placer/dataset.h"
#include "news_placer/templates.h"
#include "news_placer/topics.h"

namespace news_placer {

AepConfig aep_config(const RunConfig& config);
TemplateConfig template_config(const RunConfig& config);
TopicConfig topic_config(const RunConfig& config);
AspConfig asp_config(const RunConfig& config);

// Read-only indexes for AEP features of one year.
struct AepIndexes {
  int year = 0;
  AuthorityIndex authority;
  DomainAuthorityIndex domains;
  std::unique_ptr<ArticleIndex> articles;
};

AepIndexes build_aep_indexes(const Dataset& data, int year, const RunConfig& config);

struct AepYear {
  int year = 0;
  std::vector<AepPair> pairs;
  std::vector<AepFeatureVector> vectors;  // aligned with pairs
  GroundTruthStats stats;
};

AepYear compute_aep_year(const Dataset& data, int year, const RunConfig& config);

// Read-only models for ASP features of one year.
struct AspIndexes {
  int year = 0;
  TemplateSet templates;
  TopicModel topics;
  AspGlobalTables tables;
  std::unique_ptr<ArticleIndex> articles;
  std::map<std::string, std::vector<AspCandidate>> slots;  // by class id
};

// `extra` articles (not in the corpus) join the topic model's documents.
AspIndexes build_asp_indexes(const Dataset& data, int year, const RunConfig& config,
                             std::span<const NewsArticle> extra = {});

// Template used for an entity: the one of its deepest class.
const SectionTemplate* template_for(const AspIndexes& indexes, const Dataset& data,
                                    const std::string& entity_id, int year);

struct AspYear {
  int year = 0;
  std::vector<AspTriple> triples;
  std::vector<std::string> triple_class;           // aligned with triples
  std::vector<std::vector<AspRow>> rows;           // aligned with triples
  std::vector<std::string> truth;                  // aligned with triples
  GroundTruthStats stats;
  std::size_t skipped = 0;
};

AspYear compute_asp_year(const Dataset& data, int year, const RunConfig& config,
                         std::span<const AepPair> pairs, const AspIndexes& indexes);

// Years t for which both the t and t-1 snapshots exist, ascending.
std::vector<int> feature_years(const Dataset& data);

}  // namespace news_placer

#endif  // NEWS_PLACER_PIPELINE_H_
