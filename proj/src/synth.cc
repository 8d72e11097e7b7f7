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

#include "news_placer/synth.h"

#include <algorithm>
#include <set>

#include <fmt/format.h>

#include "news_placer/common.h"
#include "news_placer/textproc.h"

namespace news_placer {
namespace {

const std::vector<std::string> kClassNames = {"Person", "Company", "City", "Band"};

const std::vector<std::vector<std::string>> kSlotTitles = {
    {"Early life", "Career", "Personal life", "Awards", "Politics", "Philanthropy",
     "Legal issues", "Death"},
    {"History", "Products", "Acquisitions", "Finances", "Leadership", "Controversies",
     "Lawsuits", "Accidents"},
    {"History", "Geography", "Economy", "Transport", "Education", "Culture", "Sports",
     "Crime"},
    {"Formation", "Discography", "Tours", "Members", "Awards", "Breakup", "Reunion",
     "Legacy"}};

const std::vector<std::string> kDomains = {
    "dailyherald.example", "morningpost.example", "cityledger.example",
    "newswire.example",    "thechronicle.example", "globalreport.example",
    "weeklytimes.example", "eveningstar.example", "metrobulletin.example",
    "courier.example"};

constexpr int kFillerWords = 60;
constexpr int kClassWords = 20;
constexpr int kSlotWords = 25;
constexpr int kEventWords = 6;
constexpr int kPoolSize = 6;
constexpr double kFamousShare = 0.1;
constexpr double kFamousWeight = 4.0;
constexpr double kFollowUpRate = 0.5;
constexpr double kFollowUpOverlap = 0.6;

// Pronounceable lowercase pseudo-words that the tagger reads as nouns.
class WordFactory {
 public:
  explicit WordFactory(Rng& rng) : rng_(rng) {}

  std::string make(int syllables) {
    static const std::string consonants = "bdfgklmnprstvz";
    static const std::string vowels = "aeiou";
    for (;;) {
      std::string w;
      for (int s = 0; s < syllables; ++s) {
        w += consonants[rng_.below(consonants.size())];
        w += vowels[rng_.below(vowels.size())];
      }
      if (rng_.bernoulli(0.5)) w += consonants[rng_.below(consonants.size())];
      if (used_.count(w)) continue;
      const std::vector<std::string> one = {w};
      if (tag_tokens(one)[0].tag != "NN") continue;
      used_.insert(w);
      return w;
    }
  }

  std::vector<std::string> make_many(int n, int syllables) {
    std::vector<std::string> out;
    for (int i = 0; i < n; ++i) out.push_back(make(syllables));
    return out;
  }

 private:
  Rng& rng_;
  std::set<std::string> used_;
};

std::string capitalize(std::string w) {
  w[0] = static_cast<char>(w[0] - 'a' + 'A');
  return w;
}

struct EntityInfo {
  std::string id;
  std::string first;
  std::string surname;
  int cls = 0;
  bool famous = false;
  std::string name() const { return capitalize(first) + " " + capitalize(surname); }
};

struct ArticleInfo {
  int cls = 0;
  int slot = 0;
  int year = 0;
  std::vector<std::string> event;
  std::vector<int> targets;
  std::vector<int> entities;
  std::string url;
  Date date;
};

struct SlotSection {
  int slot = 0;
  Section section;
};

class Generator {
 public:
  explicit Generator(const SyntheticSpec& spec) : spec_(spec), rng_(spec.seed), words_(rng_) {}

  Dataset run();

 private:
  // Picks from `pool` without replacement, skipping `taken`.
  std::vector<int> pick(std::vector<int> pool, std::size_t n, const std::set<int>& taken) {
    pool.erase(std::remove_if(pool.begin(), pool.end(), [&](int e) { return taken.count(e); }),
               pool.end());
    std::vector<int> out;
    while (out.size() < n && !pool.empty()) {
      const std::size_t i = rng_.below(pool.size());
      out.push_back(pool[i]);
      pool.erase(pool.begin() + static_cast<long>(i));
    }
    return out;
  }

  const std::string& word_from(const std::vector<std::string>& v) { return v[rng_.below(v.size())]; }

  std::string title_variant(int cls, int slot) {
    std::string base = slot_title(cls, slot);
    return rng_.bernoulli(0.75) ? base : base + " and background";
  }

  std::string slot_title(int cls, int slot) const {
    if (cls < static_cast<int>(kSlotTitles.size()) &&
        slot < static_cast<int>(kSlotTitles[static_cast<std::size_t>(cls)].size())) {
      return kSlotTitles[static_cast<std::size_t>(cls)][static_cast<std::size_t>(slot)];
    }
    return fmt::format("Topic {}", slot + 1);
  }

  std::string class_name(int cls) const {
    if (cls < static_cast<int>(kClassNames.size())) return kClassNames[static_cast<std::size_t>(cls)];
    return fmt::format("Class{}", cls + 1);
  }

  std::string sentence(int cls, int slot, int words) {
    std::string out;
    for (int i = 0; i < words; ++i) {
      const double u = rng_.uniform();
      const auto& vocab = u < 0.6   ? slot_vocab_[static_cast<std::size_t>(cls)][static_cast<std::size_t>(slot)]
                          : u < 0.8 ? class_vocab_[static_cast<std::size_t>(cls)]
                                    : filler_;
      if (!out.empty()) out += ' ';
      out += word_from(vocab);
    }
    return out + " .";
  }

  std::string section_text(int cls, int slot) {
    std::string out;
    for (int s = 0; s < 4; ++s) {
      if (!out.empty()) out += ' ';
      out += sentence(cls, slot, 12);
    }
    return out;
  }

  Section new_section(int cls, int slot) {
    Section s;
    s.title = title_variant(cls, slot);
    s.text = section_text(cls, slot);
    const auto& pool = pools_[static_cast<std::size_t>(cls)][static_cast<std::size_t>(slot)];
    for (int e : pick(pool, 3, {})) s.anchors.insert(entities_[static_cast<std::size_t>(e)].id);
    return s;
  }

  NewsArticle make_article(int index, int year);
  void cite(const ArticleInfo& info);
  WikipediaSnapshot snapshot(int year) const;

  const SyntheticSpec& spec_;
  Rng rng_;
  WordFactory words_;
  std::vector<std::string> filler_;
  std::vector<std::vector<std::string>> class_vocab_;
  std::vector<std::vector<std::vector<std::string>>> slot_vocab_;
  std::vector<std::vector<std::vector<int>>> pools_;
  std::vector<EntityInfo> entities_;
  std::vector<std::vector<int>> by_class_;
  std::vector<int> famous_;
  std::vector<std::vector<SlotSection>> profiles_;
  std::vector<ArticleInfo> articles_;
};

NewsArticle Generator::make_article(int index, int year) {
  ArticleInfo info;
  info.year = year;

  // Earlier articles whose cited entities already cite them.
  std::vector<int> earlier;
  for (std::size_t i = 0; i < articles_.size(); ++i) {
    if (articles_[i].year < year) earlier.push_back(static_cast<int>(i));
  }
  const ArticleInfo* source = nullptr;
  if (!earlier.empty() && rng_.bernoulli(spec_.novelty * kFollowUpRate)) {
    source = &articles_[static_cast<std::size_t>(earlier[rng_.below(earlier.size())])];
    info.cls = source->cls;
    info.slot = source->slot;
    info.event = source->event;
  } else {
    info.cls = static_cast<int>(rng_.below(static_cast<std::size_t>(spec_.classes)));
    info.slot = static_cast<int>(rng_.below(static_cast<std::size_t>(spec_.slots)));
    info.event = words_.make_many(kEventWords, 3);
  }
  const bool authority = rng_.bernoulli(spec_.authority);
  const bool salience = rng_.bernoulli(spec_.salience);

  std::set<int> taken;
  if (source != nullptr) taken.insert(source->targets.begin(), source->targets.end());
  std::vector<int> target_pool;
  for (int e : by_class_[static_cast<std::size_t>(info.cls)]) {
    if (!authority || !entities_[static_cast<std::size_t>(e)].famous) target_pool.push_back(e);
  }
  info.targets = pick(target_pool, static_cast<std::size_t>(spec_.cited), taken);
  if (info.targets.size() != static_cast<std::size_t>(spec_.cited)) {
    throw Error("synthetic corpus: not enough entities per class to cite");
  }
  taken = {info.targets.begin(), info.targets.end()};

  std::vector<int> decoys;
  if (authority) {
    for (int e : pick(famous_, 2, taken)) decoys.push_back(e);
  }
  if (source != nullptr) {
    for (int e : source->targets) {
      if (!taken.count(e)) decoys.push_back(e);
    }
  }
  taken.insert(decoys.begin(), decoys.end());

  // Background entities.
  const std::size_t wanted = static_cast<std::size_t>(spec_.mentions);
  std::vector<int> background;
  auto add_background = [&](const std::vector<int>& chosen) {
    for (int e : chosen) {
      if (taken.size() >= wanted) return;
      if (taken.insert(e).second) background.push_back(e);
    }
  };
  if (source != nullptr) {
    const std::size_t n = static_cast<std::size_t>(kFollowUpOverlap * static_cast<double>(wanted));
    add_background(pick(source->entities, n, taken));
  }
  add_background(pick(pools_[static_cast<std::size_t>(info.cls)][static_cast<std::size_t>(info.slot)], 3, taken));
  while (taken.size() < wanted) {
    double total = 0.0;
    for (std::size_t e = 0; e < entities_.size(); ++e) {
      if (!taken.count(static_cast<int>(e))) total += entities_[e].famous ? kFamousWeight : 1.0;
    }
    double u = rng_.uniform() * total;
    for (std::size_t e = 0; e < entities_.size(); ++e) {
      if (taken.count(static_cast<int>(e))) continue;
      u -= entities_[e].famous ? kFamousWeight : 1.0;
      if (u < 0.0 || e + 1 == entities_.size()) {
        add_background({static_cast<int>(e)});
        break;
      }
    }
  }

  std::vector<int> salient = decoys;
  std::vector<int> quiet = background;
  if (salience) {
    salient.insert(salient.end(), info.targets.begin(), info.targets.end());
  } else {
    quiet.insert(quiet.end(), info.targets.begin(), info.targets.end());
    for (int e : pick(background, info.targets.size(), {})) {
      salient.push_back(e);
      quiet.erase(std::find(quiet.begin(), quiet.end(), e));
    }
  }
  info.entities.assign(taken.begin(), taken.end());

  // Mentions per paragraph as (entity, use surname).
  const std::size_t paragraphs = 3 + rng_.below(5);
  std::vector<std::vector<std::pair<int, bool>>> slots(paragraphs);
  for (int e : salient) {
    const std::size_t k = 3 + rng_.below(3);
    slots[rng_.bernoulli(0.8) ? 0 : 1].push_back({e, false});
    for (std::size_t i = 1; i < k; ++i) {
      slots[rng_.below(paragraphs)].push_back({e, rng_.bernoulli(0.5)});
    }
  }
  for (int e : quiet) slots[1 + rng_.below(paragraphs - 1)].push_back({e, false});

  const int decoy_slot =
      spec_.slots > 1 && rng_.bernoulli(spec_.adversarial)
          ? (info.slot + 1 + static_cast<int>(rng_.below(static_cast<std::size_t>(spec_.slots - 1)))) %
                spec_.slots
          : -1;

  NewsArticle article;
  article.id = fmt::format("N{:05d}", index + 1);
  const std::string& domain = kDomains[rng_.below(kDomains.size())];
  article.date = {year, 1 + static_cast<int>(rng_.below(12)), 1 + static_cast<int>(rng_.below(28))};
  article.url = fmt::format("https://{}/{}/{}", domain, year, article.id);
  article.domain = domain;
  info.url = article.url;
  info.date = article.date;

  for (std::size_t p = 0; p < paragraphs; ++p) {
    const int slot = p > 0 && decoy_slot >= 0 ? decoy_slot : info.slot;
    auto content = [&]() -> const std::string& {
      const double u = rng_.uniform();
      if (u < 0.4) return word_from(slot_vocab_[static_cast<std::size_t>(info.cls)][static_cast<std::size_t>(slot)]);
      if (u < 0.5) return word_from(class_vocab_[static_cast<std::size_t>(info.cls)]);
      if (u < 0.75) return word_from(info.event);
      return word_from(filler_);
    };
    auto& mentions = slots[p];
    for (std::size_t i = mentions.size(); i > 1; --i) std::swap(mentions[i - 1], mentions[rng_.below(i)]);
    const std::size_t sentences = std::max<std::size_t>(2, (mentions.size() + 3) / 4);

    std::vector<std::string> tokens;
    for (std::size_t s = 0; s < sentences; ++s) {
      std::vector<std::vector<std::string>> units;
      const std::size_t words = 8 + rng_.below(5);
      for (std::size_t w = 0; w < words; ++w) units.push_back({content()});
      std::vector<std::pair<int, bool>> here;
      for (std::size_t m = s; m < mentions.size(); m += sentences) here.push_back(mentions[m]);
      std::vector<int> unit_entity(units.size(), -1);
      for (const auto& [e, short_form] : here) {
        const auto& info_e = entities_[static_cast<std::size_t>(e)];
        std::vector<std::string> name = short_form ? std::vector<std::string>{capitalize(info_e.surname)}
                                                   : std::vector<std::string>{capitalize(info_e.first),
                                                                              capitalize(info_e.surname)};
        const std::size_t at = 1 + rng_.below(units.size());
        units.insert(units.begin() + static_cast<long>(at), name);
        unit_entity.insert(unit_entity.begin() + static_cast<long>(at), e);
      }
      for (std::size_t u = 0; u < units.size(); ++u) {
        if (unit_entity[u] >= 0) {
          EntityMention m;
          m.entity_id = entities_[static_cast<std::size_t>(unit_entity[u])].id;
          m.paragraph = p;
          m.start = tokens.size();
          m.end = tokens.size() + units[u].size();
          for (const auto& t : units[u]) m.surface += (m.surface.empty() ? "" : " ") + t;
          article.mentions.push_back(std::move(m));
        }
        tokens.insert(tokens.end(), units[u].begin(), units[u].end());
      }
      tokens.push_back(".");
    }
    std::string text;
    for (const auto& t : tokens) text += (text.empty() ? "" : " ") + t;
    article.paragraphs.push_back(std::move(text));
  }

  const int headline = salient[rng_.below(salient.size())];
  const int second = quiet[rng_.below(quiet.size())];
  article.title = fmt::format(
      "{} {} {} and {}", entities_[static_cast<std::size_t>(headline)].name(),
      word_from(slot_vocab_[static_cast<std::size_t>(info.cls)][static_cast<std::size_t>(info.slot)]),
      word_from(info.event), entities_[static_cast<std::size_t>(second)].name());
  article.tokens = tokenize_and_tag(article.paragraphs);
  for (const auto& m : article.mentions) {
    std::string seen;
    for (std::size_t t = m.start; t < m.end; ++t) {
      seen += (seen.empty() ? "" : " ") + article.tokens[m.paragraph][t].text;
    }
    if (seen != m.surface) throw Error("synthetic corpus: mention offsets drifted");
  }
  std::sort(article.mentions.begin(), article.mentions.end(),
            [](const EntityMention& a, const EntityMention& b) {
              return std::tie(a.paragraph, a.start) < std::tie(b.paragraph, b.start);
            });
  articles_.push_back(std::move(info));
  return article;
}

void Generator::cite(const ArticleInfo& info) {
  for (int e : info.targets) {
    auto& sections = profiles_[static_cast<std::size_t>(e)];
    auto it = std::find_if(sections.begin(), sections.end(),
                           [&](const SlotSection& s) { return s.slot == info.slot; });
    if (it == sections.end()) {
      sections.push_back({info.slot, new_section(info.cls, info.slot)});
      it = sections.end() - 1;
    } else {
      it->section.text += " " + sentence(info.cls, info.slot, 12);
    }
    it->section.news_refs.push_back({info.url, info.date});
  }
}

WikipediaSnapshot Generator::snapshot(int year) const {
  WikipediaSnapshot snap;
  snap.year = year;
  for (std::size_t e = 0; e < entities_.size(); ++e) {
    EntityProfile p;
    p.entity_id = entities_[e].id;
    p.title = entities_[e].name();
    p.classes = {class_name(entities_[e].cls)};
    p.year = year;
    for (const auto& s : profiles_[e]) p.sections.push_back(s.section);
    snap.entities.emplace(p.entity_id, std::move(p));
  }
  return snap;
}

Dataset Generator::run() {
  const auto classes = static_cast<std::size_t>(spec_.classes);
  const auto slots = static_cast<std::size_t>(spec_.slots);
  filler_ = words_.make_many(kFillerWords, 2);
  for (std::size_t c = 0; c < classes; ++c) {
    class_vocab_.push_back(words_.make_many(kClassWords, 2));
    slot_vocab_.emplace_back();
    for (std::size_t s = 0; s < slots; ++s) slot_vocab_[c].push_back(words_.make_many(kSlotWords, 2));
  }
  std::vector<std::string> first_names = words_.make_many(40, 2);
  by_class_.resize(classes);
  for (int e = 0; e < spec_.entities; ++e) {
    EntityInfo info;
    info.id = fmt::format("E{:04d}", e + 1);
    info.first = first_names[rng_.below(first_names.size())];
    info.surname = words_.make(3);
    info.cls = e % spec_.classes;
    const int rank = e / spec_.classes;
    const int per_class = (spec_.entities + spec_.classes - 1 - info.cls) / spec_.classes;
    info.famous = rank < std::max(1, static_cast<int>(kFamousShare * per_class));
    if (info.famous) famous_.push_back(e);
    by_class_[static_cast<std::size_t>(info.cls)].push_back(e);
    entities_.push_back(std::move(info));
  }
  std::vector<int> ordinary;
  for (int e = 0; e < spec_.entities; ++e) {
    if (!entities_[static_cast<std::size_t>(e)].famous) ordinary.push_back(e);
  }
  pools_.resize(classes);
  for (std::size_t c = 0; c < classes; ++c) {
    for (std::size_t s = 0; s < slots; ++s) pools_[c].push_back(pick(ordinary, kPoolSize, {}));
  }

  profiles_.resize(entities_.size());
  for (std::size_t e = 0; e < entities_.size(); ++e) {
    for (int s = 0; s < spec_.slots; ++s) {
      if (rng_.bernoulli(spec_.slot_presence)) {
        profiles_[e].push_back({s, new_section(entities_[e].cls, s)});
      }
    }
    if (profiles_[e].empty()) {
      const int s = static_cast<int>(rng_.below(slots));
      profiles_[e].push_back({s, new_section(entities_[e].cls, s)});
    }
  }

  Dataset data;
  for (std::size_t c = 0; c < classes; ++c) data.hierarchy.add(class_name(static_cast<int>(c)), std::nullopt);
  for (const auto& e : entities_) {
    data.dictionary.add(e.name(), e.id, 1.0);
    data.dictionary.add(capitalize(e.surname), e.id, 1.0);
  }
  const int years = spec_.last_year - spec_.first_year + 1;
  int index = 0;
  for (int y = 0; y < years; ++y) {
    const int year = spec_.first_year + y;
    const int end = static_cast<int>(static_cast<long>(spec_.articles) * (y + 1) / years);
    const std::size_t first = articles_.size();
    for (; index < end; ++index) data.corpus.push_back(make_article(index, year));
    for (std::size_t a = first; a < articles_.size(); ++a) cite(articles_[a]);
    data.snapshots.emplace(year, snapshot(year));
  }
  return data;
}

}  // namespace

SyntheticSpec SyntheticSpec::from_config(const RunConfig& config) {
  SyntheticSpec s;
  s.entities = config.synth_entities;
  s.classes = config.synth_classes;
  s.slots = config.synth_slots;
  s.articles = config.synth_articles;
  s.first_year = config.synth_first_year;
  s.last_year = config.synth_last_year;
  s.mentions = config.synth_mentions;
  s.cited = config.synth_cited;
  s.salience = config.synth_salience;
  s.authority = config.synth_authority;
  s.novelty = config.synth_novelty;
  s.adversarial = config.synth_adversarial;
  s.slot_presence = config.synth_slot_presence;
  s.seed = config.seed;
  return s;
}

Dataset generate_synthetic_corpus(const SyntheticSpec& spec) {
  if (spec.classes < 1 || spec.slots < 1 || spec.articles < 1 || spec.entities < 1) {
    throw Error("synthetic corpus: sizes must be positive");
  }
  if (spec.last_year < spec.first_year) throw Error("synthetic corpus: empty year range");
  if (spec.cited < 1 || spec.cited + 4 > spec.mentions) {
    throw Error("synthetic corpus: need cited + 4 <= mentions per article");
  }
  if (spec.mentions > spec.entities) throw Error("synthetic corpus: more mentions than entities");
  if (spec.entities / spec.classes < 2 * spec.cited + 4) {
    throw Error("synthetic corpus: too few entities per class");
  }
  for (double p : {spec.salience, spec.authority, spec.novelty, spec.adversarial,
                   spec.slot_presence}) {
    if (p < 0.0 || p > 1.0) throw Error("synthetic corpus: probabilities must lie in [0, 1]");
  }
  Generator generator(spec);
  return generator.run();
}

}  // namespace news_placer
