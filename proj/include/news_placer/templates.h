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

// Class-level section templates: the sections of every entity of a class
// are clustered on their text, and each cluster becomes a canonical slot
// that arbitrary sections (including ones an entity does not have yet) can
// be mapped onto.

#ifndef NEWS_PLACER_TEMPLATES_H_
#define NEWS_PLACER_TEMPLATES_H_

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "news_placer/corpus.h"
#include "news_placer/textproc.h"

namespace news_placer {

struct TemplateSlot {
  std::string slot_id;
  std::string canonical_label;
  std::vector<std::string> member_titles;    // sorted multiset
  std::vector<std::string> member_entities;  // sorted multiset
  TermVector centroid;                       // unit norm, tf-idf space
  TermVector aggregate_text_vector;          // summed tf-idf, unit norm
  TermVector aggregate_counts;               // summed raw term counts
  std::vector<std::string> aggregate_terms;  // member texts, concatenated
  std::set<std::string> anchors;
  std::set<std::string> news_urls;  // normalized
  std::array<std::set<std::string>, 3> pos_ngrams;
};

class SectionTemplate {
 public:
  std::string class_id;
  int year = 0;
  std::size_t entity_count = 0;
  IdfTable idf;
  std::vector<TemplateSlot> slots;

  const TemplateSlot* slot(const std::string& slot_id) const;
};

struct TemplateConfig {
  int k_min = 2;
  int k_max = 12;
  std::uint64_t seed = 1;
  std::size_t max_terms = 5000;
  std::size_t min_df = 1;
};

struct ClassSection {
  std::string entity_id;
  Section section;
};

// All sections with non-empty text of entities carrying `class_id`.
// Throws when no entity has the class.
std::vector<ClassSection> collect_class_sections(const WikipediaSnapshot& snapshot,
                                                 const std::string& class_id);

SectionTemplate build_template(const WikipediaSnapshot& snapshot,
                               const std::string& class_id,
                               const TemplateConfig& config);

// Exact normalized-title match wins (the slot holding the title most often,
// then the smaller id); otherwise the slot whose centroid is most similar
// to the section text. Empty text with an unseen title is unmapped.
std::optional<std::string> map_section_to_template(const Section& section,
                                                   const SectionTemplate& tmpl);

// Lowercased, whitespace-collapsed section title.
std::string normalize_section_title(std::string_view title);

// POS n-gram types (n = 1, 2, 3) over a sequence of tags, joined by spaces.
std::array<std::set<std::string>, 3> pos_ngrams(
    const std::vector<std::string>& tags);

// Templates for every class of a snapshot, plus the hierarchy used to pick
// an entity's most specific class.
class TemplateSet {
 public:
  TemplateSet() = default;
  explicit TemplateSet(ClassHierarchy hierarchy) : hierarchy_(std::move(hierarchy)) {}

  void add(SectionTemplate tmpl);
  const SectionTemplate* for_class(const std::string& class_id) const;
  // Deepest class with a template; ties go to the template with more
  // member entities, then to the smaller class id.
  const SectionTemplate* for_classes(const std::set<std::string>& classes) const;

  const std::map<std::string, SectionTemplate>& templates() const { return templates_; }
  const ClassHierarchy& hierarchy() const { return hierarchy_; }

 private:
  ClassHierarchy hierarchy_;
  std::map<std::string, SectionTemplate> templates_;
};

// One template per class present in the snapshot.
TemplateSet build_templates(const WikipediaSnapshot& snapshot,
                            const ClassHierarchy& hierarchy,
                            const TemplateConfig& config, int threads = 1);

std::string template_to_json(const SectionTemplate& tmpl, std::size_t top_terms = 100);
// Restores the serialized part (labels, titles, centroid from top terms).
SectionTemplate template_from_json(std::string_view json);

}  // namespace news_placer

#endif  // NEWS_PLACER_TEMPLATES_H_
