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

#include "news_placer/config.h"

#include <functional>
#include <type_traits>
#include <vector>

#include <json.hpp>

#include "news_placer/common.h"
#include "news_placer/csv.h"

namespace news_placer {
namespace {

using Json = nlohmann::ordered_json;

// One entry per key: reads into and writes from a RunConfig field.
struct Field {
  const char* name;
  std::function<Json(const RunConfig&)> get;
  std::function<void(RunConfig&, const Json&)> put;
};

template <typename T>
Field field(const char* name, T RunConfig::*member) {
  return Field{
      name, [member](const RunConfig& c) { return Json(c.*member); },
      [member, name](RunConfig& c, const Json& v) {
        bool ok = false;
        if constexpr (std::is_same_v<T, bool>) {
          ok = v.is_boolean();
        } else if constexpr (std::is_same_v<T, std::string>) {
          ok = v.is_string();
        } else if constexpr (std::is_floating_point_v<T>) {
          ok = v.is_number();
        } else if constexpr (std::is_unsigned_v<T>) {
          ok = v.is_number_unsigned();
        } else {
          ok = v.is_number_integer();
        }
        if (!ok) throw Error(std::string("config: wrong type for '") + name + "'");
        c.*member = v.get<T>();
      }};
}

const std::vector<Field>& fields() {
  static const std::vector<Field> f = {
      field("seed", &RunConfig::seed),
      field("threads", &RunConfig::threads),
      field("train_year", &RunConfig::train_year),
      field("link_min_prior", &RunConfig::link_min_prior),
      field("include_unlinked_citations", &RunConfig::include_unlinked_citations),
      field("authority", &RunConfig::authority),
      field("authority_tau", &RunConfig::authority_tau),
      field("pagerank_damping", &RunConfig::pagerank_damping),
      field("pagerank_tolerance", &RunConfig::pagerank_tolerance),
      field("pagerank_max_iterations", &RunConfig::pagerank_max_iterations),
      field("novelty_lambda", &RunConfig::novelty_lambda),
      field("novelty_mode", &RunConfig::novelty_mode),
      field("smoothing_beta", &RunConfig::smoothing_beta),
      field("domain_laplace", &RunConfig::domain_laplace),
      field("template_k_min", &RunConfig::template_k_min),
      field("template_k_max", &RunConfig::template_k_max),
      field("template_max_terms", &RunConfig::template_max_terms),
      field("template_min_df", &RunConfig::template_min_df),
      field("lda_topics", &RunConfig::lda_topics),
      field("lda_iterations", &RunConfig::lda_iterations),
      field("lda_alpha", &RunConfig::lda_alpha),
      field("lda_eta", &RunConfig::lda_eta),
      field("topic_terms", &RunConfig::topic_terms),
      field("top_k_global", &RunConfig::top_k_global),
      field("rf_trees", &RunConfig::rf_trees),
      field("rf_max_depth", &RunConfig::rf_max_depth),
      field("rf_features_per_split", &RunConfig::rf_features_per_split),
      field("rf_min_leaf", &RunConfig::rf_min_leaf),
      field("aep_class_weighting", &RunConfig::aep_class_weighting),
      field("asp_class_weighting", &RunConfig::asp_class_weighting),
      field("suggest_threshold", &RunConfig::suggest_threshold),
      field("synth_entities", &RunConfig::synth_entities),
      field("synth_classes", &RunConfig::synth_classes),
      field("synth_slots", &RunConfig::synth_slots),
      field("synth_articles", &RunConfig::synth_articles),
      field("synth_first_year", &RunConfig::synth_first_year),
      field("synth_last_year", &RunConfig::synth_last_year),
      field("synth_mentions", &RunConfig::synth_mentions),
      field("synth_cited", &RunConfig::synth_cited),
      field("synth_salience", &RunConfig::synth_salience),
      field("synth_authority", &RunConfig::synth_authority),
      field("synth_novelty", &RunConfig::synth_novelty),
      field("synth_adversarial", &RunConfig::synth_adversarial),
      field("synth_slot_presence", &RunConfig::synth_slot_presence),
  };
  return f;
}

const Field& find_field(const std::string& key) {
  for (const auto& f : fields()) {
    if (key == f.name) return f;
  }
  throw Error("config: unknown key '" + key + "'");
}

void validate(const RunConfig& c) {
  if (c.authority != "frequency" && c.authority != "pagerank") {
    throw Error("config: authority must be 'frequency' or 'pagerank'");
  }
  if (c.novelty_mode != "corrected" && c.novelty_mode != "literal") {
    throw Error("config: novelty_mode must be 'corrected' or 'literal'");
  }
  if (c.threads < 1) throw Error("config: threads must be positive");
  if (c.novelty_lambda < 0.0 || c.novelty_lambda > 1.0) {
    throw Error("config: novelty_lambda outside [0, 1]");
  }
  if (c.smoothing_beta <= 0.0 || c.smoothing_beta > 1.0) {
    throw Error("config: smoothing_beta outside (0, 1]");
  }
  if (c.template_k_min < 1 || c.template_k_max < c.template_k_min) {
    throw Error("config: invalid template k range");
  }
}

}  // namespace

std::string RunConfig::to_json() const {
  Json j = Json::object();
  for (const auto& f : fields()) j[f.name] = f.get(*this);
  return j.dump(2);
}

std::string RunConfig::echo_json() const {
  Json j = Json::parse(to_json());
  j.erase("threads");
  return j.dump(2);
}

RunConfig RunConfig::from_json(std::string_view json) {
  Json j;
  try {
    j = Json::parse(json);
  } catch (const Json::exception& e) {
    throw Error(std::string("config: malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw Error("config: top level must be an object");
  RunConfig c;
  for (const auto& [key, value] : j.items()) find_field(key).put(c, value);
  validate(c);
  return c;
}

RunConfig RunConfig::load(const std::string& path) { return from_json(read_file(path)); }

void RunConfig::set(const std::string& key, const std::string& value) {
  const Field& f = find_field(key);
  const Json current = f.get(*this);
  Json parsed;
  if (current.is_string()) {
    parsed = value;
  } else {
    try {
      parsed = Json::parse(value);
    } catch (const Json::exception&) {
      throw Error("config: bad value for '" + key + "': " + value);
    }
  }
  RunConfig next = *this;
  f.put(next, parsed);
  validate(next);
  *this = next;
}

}  // namespace news_placer
