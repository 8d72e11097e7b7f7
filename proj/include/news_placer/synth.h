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

// Synthetic corpora with planted placement signals.
//
// Every article is about one (class, slot) topic and is cited by
// `cited` entities of that class in the snapshot of its publication year.
// Cited entities are salient in the article, have low a-priori authority,
// and the article is novel for them. Decoys share some of these traits but
// not all: authority decoys are salient but famous, novelty decoys are
// salient but already cite an article the new one repeats. Each signal
// strength in [0, 1] is the probability that its planted trait is applied.

#ifndef NEWS_PLACER_SYNTH_H_
#define NEWS_PLACER_SYNTH_H_

#include <cstdint>

#include "news_placer/config.h"
#include "news_placer/dataset.h"

namespace news_placer {

struct SyntheticSpec {
  int entities = 200;
  int classes = 4;
  int slots = 8;
  int articles = 1000;
  int first_year = 2008;
  int last_year = 2012;
  int mentions = 30;  // distinct linked entities per article
  int cited = 2;
  double salience = 1.0;
  double authority = 1.0;
  double novelty = 1.0;
  // Share of articles whose first paragraph is about the cited slot while
  // the rest uses the vocabulary of another slot of the class.
  double adversarial = 0.0;
  double slot_presence = 0.7;
  std::uint64_t seed = 1;

  static SyntheticSpec from_config(const RunConfig& config);
};

// Throws when the spec cannot be realized (for example more cited entities
// than mentions, or too few entities per class).
Dataset generate_synthetic_corpus(const SyntheticSpec& spec);

}  // namespace news_placer

#endif  // NEWS_PLACER_SYNTH_H_
