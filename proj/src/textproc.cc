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

#include "news_placer/textproc.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "news_placer/common.h"

namespace news_placer {
namespace {

bool is_word_char(unsigned char c) {
  return std::isalnum(c) || c >= 0x80;
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() > suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

bool is_number(std::string_view token) {
  if (token.empty() || !std::isdigit(static_cast<unsigned char>(token[0]))) {
    return false;
  }
  return std::all_of(token.begin(), token.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || c == ',' ||
           c == '.';
  });
}

bool is_sentence_end(std::string_view token) {
  return token == "." || token == "!" || token == "?";
}

const std::unordered_set<std::string>& closed_class() {
  static const std::unordered_set<std::string> words = {
      "a",     "an",    "the",   "and",   "or",    "but",   "nor",
      "of",    "in",    "on",    "at",    "to",    "for",   "with",
      "by",    "from",  "about", "as",    "into",  "over",  "after",
      "before", "under", "between", "during", "without", "through",
      "he",    "she",   "it",    "they",  "we",    "i",     "you",
      "his",   "her",   "its",   "their", "our",   "my",    "your",
      "him",   "them",  "us",    "me",    "this",  "that",  "these",
      "those", "who",   "whom",  "which", "what",  "where", "when",
      "why",   "how",   "not",   "no",    "if",    "then",  "than",
      "so",    "also",  "there", "here",  "all",   "some",  "any",
      "each",  "both",  "very",  "more",  "most",  "such",  "only",
      "while", "because", "although", "though", "yet", "up", "down",
      "out",   "off",   "again", "once"};
  return words;
}

const std::unordered_set<std::string>& verb_lexicon() {
  static const std::unordered_set<std::string> words = {
      "is",    "are",   "was",   "were",  "be",    "been",  "being",
      "am",    "has",   "have",  "had",   "do",    "does",  "did",
      "will",  "would", "can",   "could", "shall", "should", "may",
      "might", "must",  "say",   "says",  "said",  "met",   "meet",
      "meets", "go",    "goes",  "went",  "gone",  "make",  "makes",
      "made",  "take",  "takes", "took",  "taken", "get",   "gets",
      "got",   "give",  "gives", "gave",  "given", "come",  "comes",
      "came",  "see",   "sees",  "saw",   "seen",  "know",  "knows",
      "knew",  "known", "tell",  "tells", "told",  "win",   "wins",
      "won",   "lose",  "loses", "lost",  "lead",  "leads", "led",
      "run",   "runs",  "ran",   "hold",  "holds", "held",  "become",
      "becomes", "became", "begin", "began", "begun", "leave", "left",
      "find",  "found", "think", "thought", "announce", "announces"};
  return words;
}

const std::unordered_set<std::string>& adjective_lexicon() {
  static const std::unordered_set<std::string> words = {
      "new",  "old",  "big",   "small", "large", "good",  "bad",
      "high", "low",  "early", "late",  "young", "major", "former",
      "first", "last", "long",  "short", "great", "little", "other",
      "public", "political", "national", "local", "foreign"};
  return words;
}

std::string tag_word(const std::string& token, bool sentence_initial) {
  if (is_punctuation(token)) return "OTHER";
  if (is_number(token)) return "CD";
  const std::string folded = case_fold(token);
  const bool capitalized = std::isupper(static_cast<unsigned char>(token[0]));
  if (capitalized && !sentence_initial) return "NNP";
  if (closed_class().count(folded)) return "OTHER";
  if (verb_lexicon().count(folded)) return "VB";
  if (adjective_lexicon().count(folded)) return "JJ";
  if (capitalized) return "NNP";
  if (!std::all_of(folded.begin(), folded.end(), [](char c) {
        return std::isalpha(static_cast<unsigned char>(c)) || c == '-' ||
               c == '\'' || static_cast<unsigned char>(c) >= 0x80;
      })) {
    return "OTHER";
  }
  if (ends_with(folded, "ed") || ends_with(folded, "ing")) return "VB";
  for (std::string_view suffix :
       {"ous", "ful", "ive", "able", "ible", "ical", "less", "ish"}) {
    if (ends_with(folded, suffix)) return "JJ";
  }
  return "NN";
}

}  // namespace

std::string case_fold(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

bool is_punctuation(std::string_view token) {
  return std::none_of(token.begin(), token.end(), [](char c) {
    return is_word_char(static_cast<unsigned char>(c));
  });
}

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    if (!is_word_char(c)) {
      tokens.emplace_back(1, text[i]);
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size()) {
      const auto d = static_cast<unsigned char>(text[j]);
      if (is_word_char(d)) {
        ++j;
      } else if ((d == '\'' || d == '-') && j + 1 < text.size() &&
                 is_word_char(static_cast<unsigned char>(text[j + 1]))) {
        j += 2;
      } else {
        break;
      }
    }
    tokens.emplace_back(text.substr(i, j - i));
    i = j;
  }
  return tokens;
}

TaggedParagraph tag_tokens(std::span<const std::string> tokens) {
  TaggedParagraph out;
  out.reserve(tokens.size());
  bool sentence_initial = true;
  for (const auto& token : tokens) {
    out.push_back({token, tag_word(token, sentence_initial)});
    sentence_initial = is_sentence_end(token);
  }
  return out;
}

std::vector<TaggedParagraph> tokenize_and_tag(
    std::span<const std::string> paragraphs) {
  std::vector<TaggedParagraph> out;
  out.reserve(paragraphs.size());
  for (const auto& paragraph : paragraphs) {
    const auto tokens = tokenize(paragraph);
    out.push_back(tag_tokens(tokens));
  }
  return out;
}

std::vector<std::string> terms_of(std::string_view text) {
  std::vector<std::string> out;
  for (auto& token : tokenize(text)) {
    if (!is_punctuation(token)) out.push_back(case_fold(token));
  }
  return out;
}

std::vector<std::string> terms_of(const TaggedParagraph& paragraph) {
  std::vector<std::string> out;
  out.reserve(paragraph.size());
  for (const auto& token : paragraph) {
    if (!is_punctuation(token.text)) out.push_back(case_fold(token.text));
  }
  return out;
}

double IdfTable::lookup(const std::string& term) const {
  auto it = idf.find(term);
  return it == idf.end() ? 0.0 : it->second;
}

IdfTable build_idf(std::span<const std::vector<std::string>> documents) {
  IdfTable table;
  table.document_count = documents.size();
  std::map<std::string, std::size_t> df;
  for (const auto& doc : documents) {
    std::set<std::string> seen(doc.begin(), doc.end());
    for (const auto& term : seen) ++df[term];
  }
  const auto n = static_cast<double>(documents.size());
  for (const auto& [term, count] : df) {
    table.idf[term] = std::log(n / static_cast<double>(count));
  }
  return table;
}

void write_idf_table(const IdfTable& table, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write idf table: " + path);
  out.precision(17);
  out << "#documents\t" << table.document_count << "\n";
  for (const auto& [term, value] : table.idf) out << term << "\t" << value << "\n";
}

IdfTable read_idf_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read idf table: " + path);
  IdfTable table;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) throw ParseError(path, line_no, "missing tab");
    const std::string key = line.substr(0, tab);
    const std::string value = line.substr(tab + 1);
    try {
      if (key == "#documents") {
        table.document_count = std::stoull(value);
      } else {
        table.idf[key] = std::stod(value);
      }
    } catch (const std::exception&) {
      throw ParseError(path, line_no, "bad number '" + value + "'");
    }
  }
  return table;
}

TermVector::TermVector(std::map<std::string, double> weights)
    : weights_(std::move(weights)) {
  refresh_norm();
}

double TermVector::weight(const std::string& term) const {
  auto it = weights_.find(term);
  return it == weights_.end() ? 0.0 : it->second;
}

double TermVector::dot(const TermVector& other) const {
  const auto* small = this;
  const auto* large = &other;
  if (small->weights_.size() > large->weights_.size()) std::swap(small, large);
  double sum = 0.0;
  for (const auto& [term, w] : small->weights_) {
    auto it = large->weights_.find(term);
    if (it != large->weights_.end()) sum += w * it->second;
  }
  return sum;
}

TermVector TermVector::normalized() const {
  if (norm_ == 0.0) return *this;
  auto scaled = weights_;
  for (auto& [term, w] : scaled) w /= norm_;
  return TermVector(std::move(scaled));
}

void TermVector::add(const TermVector& other, double scale) {
  for (const auto& [term, w] : other.weights_) weights_[term] += scale * w;
  refresh_norm();
}

void TermVector::refresh_norm() {
  double sum = 0.0;
  for (const auto& [term, w] : weights_) sum += w * w;
  norm_ = std::sqrt(sum);
}

TermVector term_vector(std::span<const std::string> terms, const IdfTable* idf) {
  std::map<std::string, double> counts;
  for (const auto& term : terms) counts[case_fold(term)] += 1.0;
  if (idf != nullptr) {
    for (auto& [term, w] : counts) w *= idf->lookup(term);
  }
  return TermVector(std::move(counts));
}

TermVector term_vector(std::string_view text, const IdfTable* idf) {
  const auto terms = terms_of(text);
  return term_vector(terms, idf);
}

double LanguageModel::probability(const std::string& term) const {
  auto it = std::lower_bound(vocabulary.begin(), vocabulary.end(), term);
  if (it == vocabulary.end() || *it != term) return 0.0;
  return probabilities[static_cast<std::size_t>(it - vocabulary.begin())];
}

std::vector<std::string> union_vocabulary(
    std::initializer_list<std::span<const std::string>> texts) {
  std::set<std::string> all;
  for (const auto& text : texts) all.insert(text.begin(), text.end());
  return {all.begin(), all.end()};
}

LanguageModel language_model(std::span<const std::string> terms,
                             std::vector<std::string> vocabulary,
                             Smoothing smoothing) {
  if (vocabulary.empty()) throw Error("language model: empty vocabulary");
  if (terms.empty()) throw Error("language model: empty text");
  if (smoothing.beta < 0.0 || smoothing.beta > 1.0) {
    throw Error("language model: smoothing weight outside [0, 1]");
  }
  std::sort(vocabulary.begin(), vocabulary.end());
  vocabulary.erase(std::unique(vocabulary.begin(), vocabulary.end()),
                   vocabulary.end());

  std::vector<double> counts(vocabulary.size(), 0.0);
  for (const auto& term : terms) {
    auto it = std::lower_bound(vocabulary.begin(), vocabulary.end(), term);
    if (it == vocabulary.end() || *it != term) {
      throw Error("language model: term '" + term + "' outside vocabulary");
    }
    counts[static_cast<std::size_t>(it - vocabulary.begin())] += 1.0;
  }
  const double length = static_cast<double>(terms.size());
  const double background =
      smoothing.beta / static_cast<double>(vocabulary.size());
  LanguageModel model;
  model.smoothing = smoothing;
  model.probabilities.resize(vocabulary.size());
  for (std::size_t i = 0; i < counts.size(); ++i) {
    model.probabilities[i] =
        (1.0 - smoothing.beta) * counts[i] / length + background;
  }
  model.vocabulary = std::move(vocabulary);
  return model;
}

double kl_divergence(const LanguageModel& p, const LanguageModel& q) {
  if (p.vocabulary != q.vocabulary) {
    throw Error("kl divergence: vocabulary mismatch");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < p.probabilities.size(); ++i) {
    const double pi = p.probabilities[i];
    if (pi == 0.0) continue;
    const double qi = q.probabilities[i];
    if (qi <= 0.0) {
      throw Error("kl divergence: zero probability in reference model for '" +
                  p.vocabulary[i] + "'");
    }
    sum += pi * std::log(pi / qi);
  }
  return std::max(sum, 0.0);
}

double cosine(const TermVector& u, const TermVector& v) {
  if (u.norm() == 0.0 || v.norm() == 0.0) return 0.0;
  return std::clamp(u.dot(v) / (u.norm() * v.norm()), 0.0, 1.0);
}

}  // namespace news_placer
