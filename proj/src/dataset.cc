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

#include "news_placer/dataset.h"

#include <filesystem>

#include "news_placer/common.h"

namespace news_placer {

namespace fs = std::filesystem;

const WikipediaSnapshot& Dataset::snapshot(int year) const {
  auto it = snapshots.find(year);
  if (it == snapshots.end()) throw Error("no snapshot for year " + std::to_string(year));
  return it->second;
}

Dataset load_dataset(const std::string& dir) {
  const fs::path root(dir);
  if (!fs::is_directory(root)) throw Error("data directory not found: " + dir);
  Dataset data;
  data.corpus = load_news_corpus((root / "news.jsonl").string());
  const fs::path snapshots = root / "snapshots";
  if (fs::is_directory(snapshots)) {
    for (const auto& entry : fs::directory_iterator(snapshots)) {
      if (entry.path().extension() != ".jsonl") continue;
      int year = 0;
      try {
        year = std::stoi(entry.path().stem().string());
      } catch (const std::exception&) {
        throw Error("snapshot file name is not a year: " + entry.path().string());
      }
      data.snapshots.emplace(year, load_snapshot(entry.path().string(), year));
    }
  }
  if (fs::exists(root / "dictionary.tsv")) {
    data.dictionary = load_dictionary((root / "dictionary.tsv").string());
  }
  if (fs::exists(root / "classes.tsv")) {
    data.hierarchy = load_class_hierarchy((root / "classes.tsv").string());
  }
  return data;
}

void write_dataset(const Dataset& data, const std::string& dir) {
  const fs::path root(dir);
  write_news_corpus(data.corpus, (root / "news.jsonl").string());
  for (const auto& [year, snapshot] : data.snapshots) {
    write_snapshot(snapshot, (root / "snapshots" / (std::to_string(year) + ".jsonl")).string());
  }
  write_dictionary(data.dictionary, (root / "dictionary.tsv").string());
  write_class_hierarchy(data.hierarchy, (root / "classes.tsv").string());
}

}  // namespace news_placer
