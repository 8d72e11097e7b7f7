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

#include "news_placer/templates.h"

#include <algorithm>
#include <cctype>

#include <fmt/format.h>
#include <json.hpp>

#include "news_placer/clustering.h"
#include "news_placer/common.h"

namespace news_placer {
namespace {

using nlohmann::json;

std::vector<std::string> tags_of(const std::string& text) {
  std::vector<std::string> tags;
  const auto tokens = tokenize(text);
  for (auto& t : tag_tokens(tokens)) tags.push_back(std::move(t.tag));
  return tags;
}

// Terms ranked by document frequency (desc, then lexicographic), capped.
std::set<std::string> capped_vocabulary(const std::vector<std::vector<std::string>>& docs,
                                        std::size_t max_terms, std::size_t min_df) {
  std::map<std::string, std::size_t> df;
  for (const auto& doc : docs) {
    for (const auto& term : std::set<std::string>(doc.begin(), doc.end())) ++df[term];
  }
  std::vector<std::pair<std::string, std::size_t>> ranked(df.begin(), df.end());
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  std::set<std::string> keep;
  for (const auto& [term, count] : ranked) {
    if (keep.size() >= max_terms) break;
    if (count >= min_df) keep.insert(term);
  }
  return keep;
}

std::vector<std::string> restrict_terms(const std::vector<std::string>& terms,
                                        const std::set<std::string>& vocabulary) {
  std::vector<std::string> out;
  for (const auto& t : terms) {
    if (vocabulary.count(t)) out.push_back(t);
  }
  return out;
}

}  // namespace

std::string normalize_section_title(std::string_view title) {
  std::string out;
  bool pending_space = false;
  for (char c : title) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out += ' ';
    pending_space = false;
    out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

std::array<std::set<std::string>, 3> pos_ngrams(const std::vector<std::string>& tags) {
  std::array<std::set<std::string>, 3> out;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::size_t i = 0; i + n <= tags.size(); ++i) {
      std::string gram = tags[i];
      for (std::size_t j = 1; j < n; ++j) gram += " " + tags[i + j];
      out[n - 1].insert(std::move(gram));
    }
  }
  return out;
}

const TemplateSlot* SectionTemplate::slot(const std::string& slot_id) const {
  for (const auto& s : slots) {
    if (s.slot_id == slot_id) return &s;
  }
  return nullptr;
}

std::vector<ClassSection> collect_class_sections(const WikipediaSnapshot& snapshot,
                                                 const std::string& class_id) {
  std::vector<ClassSection> out;
  bool any_entity = false;
  for (const auto& [id, profile] : snapshot.entities) {
    if (!profile.classes.count(class_id)) continue;
    any_entity = true;
    for (const auto& section : profile.sections) {
      if (terms_of(section.text).empty()) continue;
      out.push_back({id, section});
    }
  }
  if (!any_entity) throw Error("no entity of class '" + class_id + "'");
  return out;
}

SectionTemplate build_template(const WikipediaSnapshot& snapshot,
                               const std::string& class_id,
                               const TemplateConfig& config) {
  const auto sections = collect_class_sections(snapshot, class_id);
  if (sections.empty()) {
    throw Error("class '" + class_id + "' has no sections with text");
  }

  SectionTemplate tmpl;
  tmpl.class_id = class_id;
  tmpl.year = snapshot.year;
  std::set<std::string> entities;
  for (const auto& s : sections) entities.insert(s.entity_id);
  tmpl.entity_count = entities.size();

  std::vector<std::vector<std::string>> docs;
  docs.reserve(sections.size());
  for (const auto& s : sections) docs.push_back(terms_of(s.section.text));
  const auto vocabulary = capped_vocabulary(docs, config.max_terms, config.min_df);
  std::vector<std::vector<std::string>> restricted;
  restricted.reserve(docs.size());
  for (const auto& d : docs) restricted.push_back(restrict_terms(d, vocabulary));
  tmpl.idf = build_idf(restricted);

  std::vector<TermVector> vectors;
  vectors.reserve(docs.size());
  for (std::size_t i = 0; i < docs.size(); ++i) {
    TermVector v = term_vector(restricted[i], &tmpl.idf);
    // Sections made only of ubiquitous (or capped-out) terms fall back to
    // raw counts so every section has a direction.
    if (v.norm() == 0.0) v = term_vector(restricted[i]);
    if (v.norm() == 0.0) v = term_vector(docs[i]);
    vectors.push_back(std::move(v));
  }

  const int n = static_cast<int>(vectors.size());
  XMeansConfig xconfig;
  xconfig.k_max = std::min(config.k_max, n);
  xconfig.k_min = std::min(config.k_min, xconfig.k_max);
  xconfig.seed = mix_seed(config.seed, class_id);
  std::vector<std::string> columns;
  const Eigen::MatrixXd dense = to_dense(vectors, &columns);
  const Clustering clustering = xmeans(dense, xconfig);

  // Slots are numbered by the first section that falls into them.
  std::vector<int> order;
  for (int a : clustering.assignments) {
    if (std::find(order.begin(), order.end(), a) == order.end()) order.push_back(a);
  }
  tmpl.slots.resize(order.size());
  std::map<int, std::size_t> slot_of;
  for (std::size_t i = 0; i < order.size(); ++i) {
    slot_of[order[i]] = i;
    tmpl.slots[i].slot_id = fmt::format("{}#{:02d}", class_id, i);
  }

  for (std::size_t i = 0; i < sections.size(); ++i) {
    auto& slot = tmpl.slots[slot_of.at(clustering.assignments[i])];
    const auto& section = sections[i].section;
    slot.member_titles.push_back(section.title);
    slot.member_entities.push_back(sections[i].entity_id);
    slot.centroid.add(vectors[i].normalized());
    slot.aggregate_text_vector.add(vectors[i]);
    slot.aggregate_counts.add(term_vector(docs[i]));
    slot.aggregate_terms.insert(slot.aggregate_terms.end(), docs[i].begin(), docs[i].end());
    slot.anchors.insert(section.anchors.begin(), section.anchors.end());
    for (const auto& ref : section.news_refs) slot.news_urls.insert(normalize_url(ref.url));
    const auto grams = pos_ngrams(tags_of(section.text));
    for (std::size_t g = 0; g < 3; ++g) slot.pos_ngrams[g].insert(grams[g].begin(), grams[g].end());
  }

  for (auto& slot : tmpl.slots) {
    slot.centroid = slot.centroid.normalized();
    slot.aggregate_text_vector = slot.aggregate_text_vector.normalized();
    std::sort(slot.member_titles.begin(), slot.member_titles.end());
    std::sort(slot.member_entities.begin(), slot.member_entities.end());
    std::map<std::string, std::size_t> counts;
    for (const auto& t : slot.member_titles) ++counts[t];
    std::size_t best = 0;
    for (const auto& [title, count] : counts) {
      // std::map iterates lexicographically, so ties keep the smaller title.
      if (count > best) {
        best = count;
        slot.canonical_label = title;
      }
    }
  }
  return tmpl;
}

std::optional<std::string> map_section_to_template(const Section& section,
                                                   const SectionTemplate& tmpl) {
  if (tmpl.slots.empty()) throw Error("template '" + tmpl.class_id + "' has no slots");
  const std::string title = normalize_section_title(section.title);
  const TemplateSlot* by_title = nullptr;
  std::size_t by_title_count = 0;
  for (const auto& slot : tmpl.slots) {
    std::size_t count = 0;
    for (const auto& t : slot.member_titles) {
      if (normalize_section_title(t) == title) ++count;
    }
    if (count > by_title_count ||
        (count > 0 && count == by_title_count && slot.slot_id < by_title->slot_id)) {
      by_title = &slot;
      by_title_count = count;
    }
  }
  if (by_title != nullptr) return by_title->slot_id;

  const auto terms = terms_of(section.text);
  if (terms.empty()) return std::nullopt;
  TermVector v = term_vector(terms, &tmpl.idf);
  if (v.norm() == 0.0) v = term_vector(terms);
  const TemplateSlot* best = nullptr;
  double best_score = -1.0;
  for (const auto& slot : tmpl.slots) {
    const double score = cosine(v, slot.centroid);
    if (score > best_score || (score == best_score && slot.slot_id < best->slot_id)) {
      best = &slot;
      best_score = score;
    }
  }
  return best->slot_id;
}

void TemplateSet::add(SectionTemplate tmpl) {
  const std::string id = tmpl.class_id;
  templates_.insert_or_assign(id, std::move(tmpl));
}

const SectionTemplate* TemplateSet::for_class(const std::string& class_id) const {
  auto it = templates_.find(class_id);
  return it == templates_.end() ? nullptr : &it->second;
}

const SectionTemplate* TemplateSet::for_classes(const std::set<std::string>& classes) const {
  const SectionTemplate* best = nullptr;
  int best_depth = -1;
  for (const auto& c : classes) {
    const auto* tmpl = for_class(c);
    if (tmpl == nullptr) continue;
    const int depth = hierarchy_.depth(c);
    if (best == nullptr || depth > best_depth ||
        (depth == best_depth && tmpl->entity_count > best->entity_count)) {
      best = tmpl;
      best_depth = depth;
    }
  }
  return best;
}

TemplateSet build_templates(const WikipediaSnapshot& snapshot,
                            const ClassHierarchy& hierarchy,
                            const TemplateConfig& config, int threads) {
  std::set<std::string> class_ids;
  for (const auto& [id, profile] : snapshot.entities) {
    class_ids.insert(profile.classes.begin(), profile.classes.end());
  }
  const std::vector<std::string> ordered(class_ids.begin(), class_ids.end());
  std::vector<std::optional<SectionTemplate>> built(ordered.size());
  parallel_for(ordered.size(), threads, [&](std::size_t i) {
    try {
      built[i] = build_template(snapshot, ordered[i], config);
    } catch (const Error&) {
      // Classes without any section text get no template.
    }
  });
  TemplateSet set(hierarchy);
  for (auto& t : built) {
    if (t) set.add(std::move(*t));
  }
  return set;
}

std::string template_to_json(const SectionTemplate& tmpl, std::size_t top_terms) {
  json slots = json::array();
  for (const auto& slot : tmpl.slots) {
    std::vector<std::pair<std::string, double>> weights(slot.centroid.weights().begin(),
                                                        slot.centroid.weights().end());
    std::stable_sort(weights.begin(), weights.end(),
                     [](const auto& a, const auto& b) { return a.second > b.second; });
    if (weights.size() > top_terms) weights.resize(top_terms);
    json terms = json::array();
    for (const auto& [term, w] : weights) terms.push_back({term, w});
    slots.push_back({{"slot_id", slot.slot_id},
                     {"canonical_label", slot.canonical_label},
                     {"member_titles", slot.member_titles},
                     {"top_terms", std::move(terms)}});
  }
  json j = {{"class_id", tmpl.class_id}, {"year", tmpl.year}, {"slots", std::move(slots)}};
  return j.dump(2);
}

SectionTemplate template_from_json(std::string_view text) {
  const json j = json::parse(text);
  SectionTemplate tmpl;
  tmpl.class_id = j.at("class_id").get<std::string>();
  tmpl.year = j.at("year").get<int>();
  for (const auto& s : j.at("slots")) {
    TemplateSlot slot;
    slot.slot_id = s.at("slot_id").get<std::string>();
    slot.canonical_label = s.at("canonical_label").get<std::string>();
    slot.member_titles = s.at("member_titles").get<std::vector<std::string>>();
    std::map<std::string, double> weights;
    for (const auto& t : s.at("top_terms")) {
      weights[t.at(0).get<std::string>()] = t.at(1).get<double>();
    }
    slot.centroid = TermVector(std::move(weights)).normalized();
    tmpl.slots.push_back(std::move(slot));
  }
  return tmpl;
}

}  // namespace news_placer
