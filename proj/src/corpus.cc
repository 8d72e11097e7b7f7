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

#include "news_placer/corpus.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include <fmt/format.h>
#include <json.hpp>

#include "news_placer/common.h"
#include "news_placer/csv.h"
#include "news_placer/templates.h"

namespace news_placer {
namespace {

using nlohmann::json;

std::string normalize_title(std::string_view title) {
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

template <typename F>
void for_each_line(std::string_view text, F&& f) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) f(line, line_no);
    pos = end + 1;
  }
}

NewsArticle article_from_json(const json& j) {
  NewsArticle article;
  article.id = j.at("id").get<std::string>();
  article.url = j.at("url").get<std::string>();
  article.domain = extract_domain(article.url);
  article.title = j.value("title", std::string());
  article.date = parse_date(j.at("date").get<std::string>());
  article.paragraphs = j.at("paragraphs").get<std::vector<std::string>>();
  if (article.paragraphs.empty()) throw Error("article has no paragraphs");

  if (j.contains("pos") && !j.at("pos").is_null()) {
    const auto& pos = j.at("pos");
    if (pos.size() != article.paragraphs.size()) {
      throw Error("pos annotation paragraph count differs from paragraphs");
    }
    for (const auto& paragraph : pos) {
      TaggedParagraph tagged;
      for (const auto& pair : paragraph) {
        tagged.push_back(
            {pair.at(0).get<std::string>(), pair.at(1).get<std::string>()});
      }
      article.tokens.push_back(std::move(tagged));
    }
  }

  if (j.contains("mentions") && !j.at("mentions").is_null()) {
    for (const auto& m : j.at("mentions")) {
      EntityMention mention;
      mention.entity_id = m.at("entity_id").get<std::string>();
      mention.paragraph = m.at("paragraph").get<std::size_t>();
      mention.start = m.at("start").get<std::size_t>();
      mention.end = m.at("end").get<std::size_t>();
      mention.surface = m.value("surface", std::string());
      if (mention.start >= mention.end) throw Error("mention with start >= end");
      if (mention.paragraph >= article.paragraphs.size()) {
        throw Error("mention paragraph index out of range");
      }
      const std::size_t length =
          article.tokens.empty()
              ? tokenize(article.paragraphs[mention.paragraph]).size()
              : article.tokens[mention.paragraph].size();
      if (mention.end > length) throw Error("mention span outside paragraph");
      article.mentions.push_back(std::move(mention));
    }
  }
  return article;
}

json article_to_json(const NewsArticle& article) {
  json j;
  j["id"] = article.id;
  j["url"] = article.url;
  j["title"] = article.title;
  j["date"] = format_date(article.date);
  j["paragraphs"] = article.paragraphs;
  if (!article.tokens.empty()) {
    json pos = json::array();
    for (const auto& paragraph : article.tokens) {
      json p = json::array();
      for (const auto& token : paragraph) p.push_back({token.text, token.tag});
      pos.push_back(std::move(p));
    }
    j["pos"] = std::move(pos);
  }
  if (!article.mentions.empty()) {
    json mentions = json::array();
    for (const auto& m : article.mentions) {
      mentions.push_back({{"entity_id", m.entity_id},
                          {"paragraph", m.paragraph},
                          {"start", m.start},
                          {"end", m.end},
                          {"surface", m.surface}});
    }
    j["mentions"] = std::move(mentions);
  }
  return j;
}

EntityProfile profile_from_json(const json& j) {
  EntityProfile profile;
  profile.entity_id = j.at("entity_id").get<std::string>();
  profile.title = j.value("title", std::string());
  for (const auto& c : j.at("classes")) profile.classes.insert(c.get<std::string>());
  profile.year = j.at("year").get<int>();
  std::set<std::string> seen_titles;
  for (const auto& s : j.at("sections")) {
    Section section;
    section.title = s.at("title").get<std::string>();
    section.text = s.value("text", std::string());
    if (s.contains("anchors")) {
      for (const auto& a : s.at("anchors")) section.anchors.insert(a.get<std::string>());
    }
    if (s.contains("news_refs")) {
      for (const auto& r : s.at("news_refs")) {
        NewsRef ref{r.at("url").get<std::string>(),
                    parse_date(r.at("date").get<std::string>())};
        if (ref.date.year > profile.year) {
          throw Error("news reference dated after the snapshot year");
        }
        section.news_refs.push_back(std::move(ref));
      }
    }
    if (!seen_titles.insert(normalize_title(section.title)).second) {
      throw Error("duplicate section title '" + section.title + "' in " +
                  profile.entity_id);
    }
    profile.sections.push_back(std::move(section));
  }
  return profile;
}

json profile_to_json(const EntityProfile& profile) {
  json sections = json::array();
  for (const auto& s : profile.sections) {
    json refs = json::array();
    for (const auto& r : s.news_refs) {
      refs.push_back({{"url", r.url}, {"date", format_date(r.date)}});
    }
    sections.push_back({{"title", s.title},
                        {"text", s.text},
                        {"anchors", s.anchors},
                        {"news_refs", std::move(refs)}});
  }
  return {{"entity_id", profile.entity_id},
          {"title", profile.title},
          {"classes", profile.classes},
          {"year", profile.year},
          {"sections", std::move(sections)}};
}

std::string join_tokens(const TaggedParagraph& tokens, std::size_t begin,
                        std::size_t end, bool fold) {
  std::string out;
  for (std::size_t i = begin; i < end; ++i) {
    if (i > begin) out += ' ';
    out += fold ? case_fold(tokens[i].text) : tokens[i].text;
  }
  return out;
}

}  // namespace

Date parse_date(std::string_view text) {
  Date date;
  int consumed = 0;
  const std::string s(text);
  if (s.size() != 10 ||
      std::sscanf(s.c_str(), "%4d-%2d-%2d%n", &date.year, &date.month,
                  &date.day, &consumed) != 3 ||
      consumed != 10 || date.month < 1 || date.month > 12 || date.day < 1 ||
      date.day > 31) {
    throw Error("bad date '" + s + "' (want YYYY-MM-DD)");
  }
  return date;
}

std::string format_date(const Date& date) {
  return fmt::format("{:04d}-{:02d}-{:02d}", date.year, date.month, date.day);
}

std::set<std::string> NewsArticle::entities() const {
  std::set<std::string> out;
  for (const auto& m : mentions) out.insert(m.entity_id);
  return out;
}

const EntityProfile* WikipediaSnapshot::find(const std::string& entity_id) const {
  auto it = entities.find(entity_id);
  return it == entities.end() ? nullptr : &it->second;
}

void ClassHierarchy::add(const std::string& id, std::optional<std::string> parent) {
  for (auto p = parent; p.has_value(); p = this->parent(*p)) {
    if (*p == id) throw Error("class hierarchy cycle through '" + id + "'");
  }
  parents_[id] = std::move(parent);
}

std::optional<std::string> ClassHierarchy::parent(const std::string& id) const {
  auto it = parents_.find(id);
  return it == parents_.end() ? std::nullopt : it->second;
}

int ClassHierarchy::depth(const std::string& id) const {
  int depth = 0;
  for (auto p = parent(id); p.has_value(); p = parent(*p)) ++depth;
  return depth;
}

void SurfaceFormDictionary::add(const std::string& surface,
                                const std::string& entity_id, double prior) {
  if (prior < 0.0 || prior > 1.0) {
    throw Error("surface prior outside [0, 1] for '" + surface + "'");
  }
  std::string key;
  std::size_t count = 0;
  for (const auto& token : tokenize(surface)) {
    if (count++ > 0) key += ' ';
    key += case_fold(token);
  }
  if (key.empty()) throw Error("empty surface form");
  auto& candidates = entries_[key];
  double total = prior;
  for (const auto& c : candidates) total += c.prior;
  if (total > 1.0 + 1e-9) {
    throw Error("surface priors for '" + key + "' sum above 1");
  }
  candidates.push_back({entity_id, prior});
  max_tokens_ = std::max(max_tokens_, count);
}

const std::vector<SurfaceCandidate>* SurfaceFormDictionary::find(
    const std::string& surface) const {
  auto it = entries_.find(surface);
  return it == entries_.end() ? nullptr : &it->second;
}

std::string extract_domain(std::string_view url) {
  const auto scheme_end = url.find("://");
  if (scheme_end == std::string_view::npos || scheme_end == 0) {
    throw Error("unparseable url '" + std::string(url) + "'");
  }
  for (char c : url.substr(0, scheme_end)) {
    if (!std::isalpha(static_cast<unsigned char>(c)) && c != '+' && c != '-' &&
        c != '.') {
      throw Error("unparseable url '" + std::string(url) + "'");
    }
  }
  std::string_view rest = url.substr(scheme_end + 3);
  rest = rest.substr(0, rest.find_first_of("/?#"));
  if (auto at = rest.rfind('@'); at != std::string_view::npos) {
    rest = rest.substr(at + 1);
  }
  rest = rest.substr(0, rest.find(':'));
  if (rest.empty() ||
      std::any_of(rest.begin(), rest.end(), [](char c) {
        return std::isspace(static_cast<unsigned char>(c));
      })) {
    throw Error("unparseable url '" + std::string(url) + "'");
  }
  return case_fold(rest);
}

std::string normalize_url(std::string_view url) {
  std::string_view s = url.substr(0, url.find('#'));
  std::string out;
  const auto scheme_end = s.find("://");
  if (scheme_end != std::string_view::npos) {
    const auto host_end = s.find_first_of("/?", scheme_end + 3);
    const auto split = host_end == std::string_view::npos ? s.size() : host_end;
    out = case_fold(s.substr(0, split));
    out += s.substr(split);
  } else {
    out = std::string(s);
  }
  while (!out.empty() && out.back() == '/') out.pop_back();
  return out;
}

std::vector<NewsArticle> parse_news_corpus(std::string_view jsonl,
                                           const std::string& source) {
  std::vector<NewsArticle> corpus;
  std::set<std::string> ids;
  for_each_line(jsonl, [&](std::string_view line, std::size_t line_no) {
    NewsArticle article;
    try {
      article = article_from_json(json::parse(line));
    } catch (const std::exception& e) {
      throw ParseError(source, line_no, e.what());
    }
    if (!ids.insert(article.id).second) {
      throw ParseError(source, line_no, "duplicate article id '" + article.id + "'");
    }
    corpus.push_back(std::move(article));
  });
  return corpus;
}

std::vector<NewsArticle> load_news_corpus(const std::string& path) {
  return parse_news_corpus(read_file(path), path);
}

std::string news_article_to_json(const NewsArticle& article) {
  return article_to_json(article).dump();
}

void write_news_corpus(std::span<const NewsArticle> corpus,
                       const std::string& path) {
  std::string out;
  for (const auto& article : corpus) {
    out += article_to_json(article).dump();
    out += '\n';
  }
  write_file(path, out);
}

WikipediaSnapshot parse_snapshot(std::string_view jsonl, int year,
                                 const std::string& source) {
  WikipediaSnapshot snapshot;
  snapshot.year = year;
  for_each_line(jsonl, [&](std::string_view line, std::size_t line_no) {
    EntityProfile profile;
    try {
      profile = profile_from_json(json::parse(line));
    } catch (const std::exception& e) {
      throw ParseError(source, line_no, e.what());
    }
    if (profile.year != year) {
      throw ParseError(source, line_no,
                       fmt::format("profile year {} differs from snapshot year {}",
                                   profile.year, year));
    }
    const std::string id = profile.entity_id;
    if (!snapshot.entities.emplace(id, std::move(profile)).second) {
      throw ParseError(source, line_no, "duplicate entity id '" + id + "'");
    }
  });
  return snapshot;
}

WikipediaSnapshot load_snapshot(const std::string& path, int year) {
  return parse_snapshot(read_file(path), year, path);
}

void write_snapshot(const WikipediaSnapshot& snapshot, const std::string& path) {
  std::string out;
  for (const auto& [id, profile] : snapshot.entities) {
    out += profile_to_json(profile).dump();
    out += '\n';
  }
  write_file(path, out);
}

SurfaceFormDictionary load_dictionary(const std::string& path) {
  SurfaceFormDictionary dict;
  const std::string text = read_file(path);
  for_each_line(text, [&](std::string_view line, std::size_t line_no) {
    const auto t1 = line.find('\t');
    const auto t2 = t1 == std::string_view::npos ? t1 : line.find('\t', t1 + 1);
    if (t2 == std::string_view::npos) {
      throw ParseError(path, line_no, "want surface<TAB>entity_id<TAB>prior");
    }
    try {
      dict.add(std::string(line.substr(0, t1)),
               std::string(line.substr(t1 + 1, t2 - t1 - 1)),
               std::stod(std::string(line.substr(t2 + 1))));
    } catch (const std::exception& e) {
      throw ParseError(path, line_no, e.what());
    }
  });
  return dict;
}

void write_dictionary(const SurfaceFormDictionary& dict, const std::string& path) {
  std::string out;
  for (const auto& [surface, candidates] : dict.entries()) {
    for (const auto& c : candidates) {
      out += surface + "\t" + c.entity_id + "\t" + format_double(c.prior) + "\n";
    }
  }
  write_file(path, out);
}

ClassHierarchy load_class_hierarchy(const std::string& path) {
  ClassHierarchy hierarchy;
  const std::string text = read_file(path);
  std::vector<std::pair<std::string, std::string>> rows;
  for_each_line(text, [&](std::string_view line, std::size_t) {
    const auto tab = line.find('\t');
    rows.emplace_back(std::string(line.substr(0, tab)),
                      tab == std::string_view::npos
                          ? std::string()
                          : std::string(line.substr(tab + 1)));
  });
  for (const auto& [id, parent] : rows) {
    hierarchy.add(id, parent.empty() ? std::nullopt
                                     : std::optional<std::string>(parent));
  }
  return hierarchy;
}

void write_class_hierarchy(const ClassHierarchy& hierarchy,
                           const std::string& path) {
  std::string out;
  for (const auto& [id, parent] : hierarchy.classes()) {
    out += id + "\t" + parent.value_or("") + "\n";
  }
  write_file(path, out);
}

void ensure_tagged(NewsArticle& article) {
  if (article.tokens.size() == article.paragraphs.size()) return;
  article.tokens = tokenize_and_tag(article.paragraphs);
}

NewsArticle link_entities(NewsArticle article, const SurfaceFormDictionary& dict,
                          double min_prior) {
  ensure_tagged(article);
  article.mentions.clear();
  for (std::size_t p = 0; p < article.tokens.size(); ++p) {
    const auto& tokens = article.tokens[p];
    std::size_t i = 0;
    while (i < tokens.size()) {
      std::size_t matched = 0;
      const SurfaceCandidate* best = nullptr;
      const std::size_t longest = std::min(dict.max_tokens(), tokens.size() - i);
      for (std::size_t len = longest; len >= 1 && best == nullptr; --len) {
        const auto* candidates = dict.find(join_tokens(tokens, i, i + len, true));
        if (candidates == nullptr) continue;
        for (const auto& c : *candidates) {
          if (c.prior < min_prior) continue;
          if (best == nullptr || c.prior > best->prior ||
              (c.prior == best->prior && c.entity_id < best->entity_id)) {
            best = &c;
          }
        }
        if (best != nullptr) matched = len;
      }
      if (best == nullptr) {
        ++i;
        continue;
      }
      article.mentions.push_back({best->entity_id,
                                  join_tokens(tokens, i, i + matched, false), p,
                                  i, i + matched});
      i += matched;
    }
  }
  return article;
}

ArticleIndex::ArticleIndex(std::span<const NewsArticle> corpus) {
  for (const auto& article : corpus) {
    by_url_.emplace(normalize_url(article.url), &article);
    by_id_.emplace(article.id, &article);
  }
}

const NewsArticle* ArticleIndex::by_url(const std::string& url) const {
  auto it = by_url_.find(normalize_url(url));
  return it == by_url_.end() ? nullptr : it->second;
}

const NewsArticle* ArticleIndex::by_id(const std::string& id) const {
  auto it = by_id_.find(id);
  return it == by_id_.end() ? nullptr : it->second;
}

std::set<std::string> cited_urls(const EntityProfile& profile) {
  std::set<std::string> urls;
  for (const auto& section : profile.sections) {
    for (const auto& ref : section.news_refs) urls.insert(normalize_url(ref.url));
  }
  return urls;
}

namespace {

// normalized url -> citing entity ids
std::map<std::string, std::set<std::string>> citations(
    const WikipediaSnapshot& snapshot) {
  std::map<std::string, std::set<std::string>> out;
  for (const auto& [id, profile] : snapshot.entities) {
    for (const auto& url : cited_urls(profile)) out[url].insert(id);
  }
  return out;
}

}  // namespace

std::vector<AepPair> build_aep_ground_truth(std::span<const NewsArticle> corpus,
                                            const WikipediaSnapshot& current,
                                            const WikipediaSnapshot& previous,
                                            GroundTruthStats* stats,
                                            bool include_unlinked_citations) {
  if (current.year != previous.year + 1) {
    throw Error(fmt::format("ground truth needs consecutive snapshots, got {} and {}",
                            previous.year, current.year));
  }
  GroundTruthStats local;
  GroundTruthStats& counters = stats != nullptr ? *stats : local;
  const auto now = citations(current);
  const auto before = citations(previous);
  const std::set<std::string> none;

  std::vector<AepPair> pairs;
  for (const auto& article : corpus) {
    const std::string url = normalize_url(article.url);
    auto it_now = now.find(url);
    auto it_before = before.find(url);
    const auto& citing_now = it_now == now.end() ? none : it_now->second;
    const auto& citing_before = it_before == before.end() ? none : it_before->second;

    bool new_citation = false;
    for (const auto& e : citing_now) new_citation |= citing_before.count(e) == 0;
    const bool candidate = new_citation || (citing_now.empty() &&
                                            article.date.year == current.year);
    if (!candidate) continue;

    const auto linked = article.entities();
    if (linked.empty()) ++counters.articles_without_entities;
    for (const auto& e : linked) {
      if (citing_before.count(e)) {
        ++counters.already_cited_pairs;
        continue;
      }
      pairs.push_back({article.id, e,
                       citing_now.count(e) ? Relevance::kRelevant
                                           : Relevance::kNonRelevant,
                       current.year});
    }
    for (const auto& e : citing_now) {
      if (linked.count(e) || citing_before.count(e)) continue;
      ++counters.unlinked_citations;
      if (include_unlinked_citations) {
        pairs.push_back({article.id, e, Relevance::kRelevant, current.year});
      }
    }
  }
  return pairs;
}

std::vector<AspTriple> build_asp_ground_truth(std::span<const AepPair> pairs,
                                              std::span<const NewsArticle> corpus,
                                              const WikipediaSnapshot& current,
                                              const TemplateSet& templates,
                                              GroundTruthStats* stats) {
  GroundTruthStats local;
  GroundTruthStats& counters = stats != nullptr ? *stats : local;
  const ArticleIndex index(corpus);
  std::vector<AspTriple> triples;
  for (const auto& pair : pairs) {
    if (pair.label != Relevance::kRelevant) continue;
    const auto* article = index.by_id(pair.news_id);
    const auto* profile = current.find(pair.entity_id);
    if (article == nullptr || profile == nullptr) continue;
    const auto* tmpl = templates.for_classes(profile->classes);
    if (tmpl == nullptr) {
      ++counters.missing_template;
      continue;
    }
    const std::string url = normalize_url(article->url);
    for (const auto& section : profile->sections) {
      const bool cites = std::any_of(
          section.news_refs.begin(), section.news_refs.end(),
          [&](const NewsRef& ref) { return normalize_url(ref.url) == url; });
      if (!cites) continue;
      const auto slot = map_section_to_template(section, *tmpl);
      if (!slot) {
        ++counters.unmapped_sections;
        continue;
      }
      triples.push_back(
          {pair.news_id, pair.entity_id, *slot, pair.year, section.title});
    }
  }
  return triples;
}

void write_aep_ground_truth(std::span<const AepPair> pairs, const std::string& path) {
  std::string out = "news_id,entity_id,label,year\n";
  for (const auto& p : pairs) {
    out += csv_row({p.news_id, p.entity_id,
                    p.label == Relevance::kRelevant ? "relevant" : "non-relevant",
                    std::to_string(p.year)});
    out += '\n';
  }
  write_file(path, out);
}

std::vector<AepPair> read_aep_ground_truth(const std::string& path) {
  std::vector<AepPair> pairs;
  const std::string text = read_file(path);
  for_each_line(text, [&](std::string_view line, std::size_t line_no) {
    if (line_no == 1) return;
    const auto f = split_csv_line(line);
    if (f.size() != 4 || (f[2] != "relevant" && f[2] != "non-relevant")) {
      throw ParseError(path, line_no, "want news_id,entity_id,label,year");
    }
    pairs.push_back({f[0], f[1],
                     f[2] == "relevant" ? Relevance::kRelevant
                                        : Relevance::kNonRelevant,
                     std::stoi(f[3])});
  });
  return pairs;
}

void write_asp_ground_truth(std::span<const AspTriple> triples,
                            const std::string& path) {
  std::string out = "news_id,entity_id,slot_id,year\n";
  for (const auto& t : triples) {
    out += csv_row({t.news_id, t.entity_id, t.slot_id, std::to_string(t.year)});
    out += '\n';
  }
  write_file(path, out);
}

std::vector<AspTriple> read_asp_ground_truth(const std::string& path) {
  std::vector<AspTriple> triples;
  const std::string text = read_file(path);
  for_each_line(text, [&](std::string_view line, std::size_t line_no) {
    if (line_no == 1) return;
    const auto f = split_csv_line(line);
    if (f.size() != 4) {
      throw ParseError(path, line_no, "want news_id,entity_id,slot_id,year");
    }
    triples.push_back({f[0], f[1], f[2], std::stoi(f[3]), {}});
  });
  return triples;
}

}  // namespace news_placer
