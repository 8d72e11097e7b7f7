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

#include <map>

#include <gtest/gtest.h>

#include "news_placer/common.h"
#include "test_util.h"

namespace news_placer {
namespace {

using testing::make_profile;
using testing::make_section;

TEST(CollectClassSectionsTest, CountsAndMembership) {
  WikipediaSnapshot s;
  s.year = 2008;
  for (int i = 0; i < 3; ++i) {
    const std::string id = "E" + std::to_string(i);
    s.entities[id] = make_profile(id, {"C"}, {make_section("A", "alpha"), make_section("B", "beta")},
                                  2008);
  }
  s.entities["E9"] = make_profile("E9", {"C", "D"}, {make_section("A", "alpha")}, 2008);
  s.entities["E8"] = make_profile("E8", {"C"}, {make_section("Empty", "")}, 2008);
  EXPECT_EQ(collect_class_sections(s, "C").size(), 7u);
  EXPECT_EQ(collect_class_sections(s, "D").size(), 1u);
  EXPECT_THROW(collect_class_sections(s, "Z"), Error);
}

WikipediaSnapshot early_life_snapshot() {
  WikipediaSnapshot s;
  s.year = 2008;
  for (int i = 0; i < 6; ++i) {
    const std::string id = "P" + std::to_string(i);
    const std::string early = i < 4 ? "Early Life" : "Early Life and Childhood";
    s.entities[id] = make_profile(
        id, {"Person"},
        {make_section(early, "born childhood school parents village childhood"),
         make_section("Career", "contract league season coach transfer season")},
        2008);
  }
  return s;
}

TEST(BuildTemplateTest, VariantTitlesShareOneSlot) {
  TemplateConfig config;
  config.k_min = 1;
  const SectionTemplate t = build_template(early_life_snapshot(), "Person", config);
  ASSERT_EQ(t.slots.size(), 2u);
  const auto it = std::find_if(t.slots.begin(), t.slots.end(), [](const TemplateSlot& s) {
    return std::count(s.member_titles.begin(), s.member_titles.end(), "Early Life") > 0;
  });
  ASSERT_NE(it, t.slots.end());
  EXPECT_EQ(it->canonical_label, "Early Life");
  EXPECT_EQ(std::count(it->member_titles.begin(), it->member_titles.end(),
                       "Early Life and Childhood"),
            2);
  std::size_t members = 0;
  for (const auto& slot : t.slots) members += slot.member_titles.size();
  EXPECT_EQ(members, 12u);
}

TEST(BuildTemplateTest, DisjointSectionsOfOneEntity) {
  WikipediaSnapshot s;
  s.year = 2008;
  s.entities["E"] = make_profile(
      "E", {"C"}, {make_section("A", "red green blue"), make_section("B", "cat dog bird")}, 2008);
  EXPECT_EQ(build_template(s, "C", TemplateConfig{}).slots.size(), 2u);
}

TEST(BuildTemplateTest, PlantedTopicsGivePureSlots) {
  const std::vector<std::vector<std::string>> topics = {
      {"goal", "match", "league", "season", "coach"},
      {"album", "song", "tour", "guitar", "record"},
      {"court", "trial", "judge", "verdict", "appeal"},
      {"born", "school", "parents", "village", "childhood"}};
  WikipediaSnapshot s;
  s.year = 2008;
  Rng rng(4);
  for (int e = 0; e < 10; ++e) {
    std::vector<Section> sections;
    for (int t = 0; t < 4; ++t) {
      std::string text;
      for (int w = 0; w < 12; ++w) text += topics[t][rng.below(5)] + " ";
      sections.push_back(make_section("Topic" + std::to_string(t), text));
    }
    const std::string id = "E" + std::to_string(e);
    s.entities[id] = make_profile(id, {"C"}, std::move(sections), 2008);
  }
  TemplateConfig config;
  config.k_min = 1;
  const SectionTemplate t = build_template(s, "C", config);
  ASSERT_EQ(t.slots.size(), 4u);
  std::size_t majority = 0;
  for (const auto& slot : t.slots) {
    std::map<std::string, std::size_t> counts;
    for (const auto& title : slot.member_titles) ++counts[title];
    std::size_t best = 0;
    for (const auto& [title, c] : counts) best = std::max(best, c);
    majority += best;
  }
  EXPECT_GE(static_cast<double>(majority) / 40.0, 0.9);
}

SectionTemplate two_slot_template() {
  SectionTemplate t;
  t.class_id = "C";
  TemplateSlot a;
  a.slot_id = "C#00";
  a.member_titles = {"Music"};
  a.centroid = TermVector({{"album", 1.0}}).normalized();
  TemplateSlot b;
  b.slot_id = "C#01";
  b.member_titles = {"Sport"};
  b.centroid = TermVector({{"goal", 1.0}, {"match", 1.0}}).normalized();
  t.slots = {a, b};
  return t;
}

TEST(MapSectionTest, TitleMatchWins) {
  EXPECT_EQ(map_section_to_template(make_section("  music ", "goal match"), two_slot_template()),
            "C#00");
}

TEST(MapSectionTest, UnseenTitleUsesNearestCentroid) {
  EXPECT_EQ(map_section_to_template(make_section("Other", "a goal in the match"),
                                    two_slot_template()),
            "C#01");
}

TEST(MapSectionTest, EmptyTextAndUnseenTitleIsUnmapped) {
  EXPECT_FALSE(map_section_to_template(make_section("Other", ""), two_slot_template()));
}

TEST(TemplateSetTest, DeepestClassWins) {
  ClassHierarchy h;
  h.add("Agent", std::nullopt);
  h.add("Person", "Agent");
  TemplateSet set(h);
  SectionTemplate agent;
  agent.class_id = "Agent";
  SectionTemplate person;
  person.class_id = "Person";
  set.add(agent);
  set.add(person);
  ASSERT_NE(set.for_classes({"Agent", "Person"}), nullptr);
  EXPECT_EQ(set.for_classes({"Agent", "Person"})->class_id, "Person");
  EXPECT_EQ(set.for_classes({"Band"}), nullptr);
}

TEST(TemplateJsonTest, RoundTripKeepsLabelsAndTitles) {
  TemplateConfig config;
  config.k_min = 1;
  const SectionTemplate t = build_template(early_life_snapshot(), "Person", config);
  const SectionTemplate back = template_from_json(template_to_json(t));
  ASSERT_EQ(back.slots.size(), t.slots.size());
  for (std::size_t i = 0; i < t.slots.size(); ++i) {
    EXPECT_EQ(back.slots[i].slot_id, t.slots[i].slot_id);
    EXPECT_EQ(back.slots[i].canonical_label, t.slots[i].canonical_label);
    EXPECT_EQ(back.slots[i].member_titles, t.slots[i].member_titles);
  }
}

}  // namespace
}  // namespace news_placer
