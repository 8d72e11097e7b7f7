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

// A data directory holds everything one run reads:
//
//   news.jsonl             linked news corpus
//   snapshots/<year>.jsonl one entity snapshot per year
//   dictionary.tsv         surface form dictionary
//   classes.tsv            class hierarchy

#ifndef NEWS_PLACER_DATASET_H_
#define NEWS_PLACER_DATASET_H_

#include <map>
#include <string>
#include <vector>

#include "news_placer/corpus.h"

namespace news_placer {

struct Dataset {
  std::vector<NewsArticle> corpus;
  std::map<int, WikipediaSnapshot> snapshots;
  SurfaceFormDictionary dictionary;
  ClassHierarchy hierarchy;

  // Throws when the year is missing.
  const WikipediaSnapshot& snapshot(int year) const;
};

Dataset load_dataset(const std::string& dir);
void write_dataset(const Dataset& data, const std::string& dir);

}  // namespace news_placer

#endif  // NEWS_PLACER_DATASET_H_
