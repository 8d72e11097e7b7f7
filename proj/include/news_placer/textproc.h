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

// Tokenization, the fallback part-of-speech tagger, term statistics,
// smoothed unigram language models and the similarity measures shared by
// both feature stacks.

#ifndef NEWS_PLACER_TEXTPROC_H_
#define NEWS_PLACER_TEXTPROC_H_

#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace news_placer {

// Tags emitted by the fallback tagger. Pre-annotated input may carry any
// tag string; it is passed through untouched.
inline constexpr const char* kTagSet[] = {"NNP", "NN", "CD", "VB", "JJ",
                                          "OTHER"};
inline constexpr std::size_t kTagCount = 6;

struct TaggedToken {
  std::string text;
  std::string tag;

  bool operator==(const TaggedToken&) const = default;
};

using TaggedParagraph = std::vector<TaggedToken>;

// Splits on word boundaries; punctuation characters become separate
// tokens. Bytes >= 0x80 are treated as word characters so UTF-8 words stay
// whole. Internal apostrophes and hyphens stay inside the word.
std::vector<std::string> tokenize(std::string_view text);

// Heuristic tags for one paragraph of tokens.
TaggedParagraph tag_tokens(std::span<const std::string> tokens);

// Tokenizes and tags each paragraph.
std::vector<TaggedParagraph> tokenize_and_tag(
    std::span<const std::string> paragraphs);

// Lowercases ASCII letters.
std::string case_fold(std::string_view s);

// True for tokens that carry no word characters.
bool is_punctuation(std::string_view token);

// Case-folded word tokens of `text` (punctuation dropped).
std::vector<std::string> terms_of(std::string_view text);
std::vector<std::string> terms_of(const TaggedParagraph& paragraph);

// Inverse document frequencies, idf(term) = ln(N / df).
struct IdfTable {
  std::size_t document_count = 0;
  std::map<std::string, double> idf;

  // Terms never seen in the document set get weight 0.
  double lookup(const std::string& term) const;
};

IdfTable build_idf(std::span<const std::vector<std::string>> documents);
void write_idf_table(const IdfTable& table, const std::string& path);
IdfTable read_idf_table(const std::string& path);

// Sparse non-negative term weights with a cached Euclidean norm.
class TermVector {
 public:
  TermVector() = default;
  explicit TermVector(std::map<std::string, double> weights);

  const std::map<std::string, double>& weights() const { return weights_; }
  double norm() const { return norm_; }
  bool empty() const { return weights_.empty(); }
  double weight(const std::string& term) const;

  double dot(const TermVector& other) const;
  // Returns this vector scaled to unit norm (zero vector stays zero).
  TermVector normalized() const;
  // Adds `scale * other` into this vector.
  void add(const TermVector& other, double scale = 1.0);

 private:
  void refresh_norm();

  std::map<std::string, double> weights_;
  double norm_ = 0.0;
};

// Case-folded unigram counts, multiplied by idf when a table is given.
TermVector term_vector(std::span<const std::string> terms,
                       const IdfTable* idf = nullptr);
TermVector term_vector(std::string_view text, const IdfTable* idf = nullptr);

enum class SmoothingKind { kJelinekMercer };

struct Smoothing {
  SmoothingKind kind = SmoothingKind::kJelinekMercer;
  double beta = 0.1;
};

// Unigram model over a caller-supplied vocabulary (sorted, unique).
struct LanguageModel {
  std::vector<std::string> vocabulary;
  std::vector<double> probabilities;
  Smoothing smoothing;

  double probability(const std::string& term) const;
};

// Sorted union of the given term lists.
std::vector<std::string> union_vocabulary(
    std::initializer_list<std::span<const std::string>> texts);

// p(w) = (1 - beta) * tf(w) / len + beta / |V|. Throws on empty text,
// empty vocabulary, or a term outside the vocabulary.
LanguageModel language_model(std::span<const std::string> terms,
                             std::vector<std::string> vocabulary,
                             Smoothing smoothing = {});

// Sum of p * ln(p / q) in nats. Vocabularies must be identical.
double kl_divergence(const LanguageModel& p, const LanguageModel& q);

// |A n B| / |A u B|, with jaccard(empty, empty) = 0.
template <typename T>
double jaccard(const std::set<T>& a, const std::set<T>& b) {
  if (a.empty() && b.empty()) return 0.0;
  std::size_t common = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      ++common;
      ++ia;
      ++ib;
    }
  }
  return static_cast<double>(common) /
         static_cast<double>(a.size() + b.size() - common);
}

// dot / (|u| |v|), 0 when either vector is zero.
double cosine(const TermVector& u, const TermVector& v);

}  // namespace news_placer

#endif  // NEWS_PLACER_TEXTPROC_H_
