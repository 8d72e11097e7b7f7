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

#include "cli.h"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "news_placer/common.h"
#include "news_placer/config.h"
#include "news_placer/csv.h"
#include "news_placer/dataset.h"
#include "news_placer/experiment.h"
#include "news_placer/pipeline.h"
#include "news_placer/report.h"
#include "news_placer/synth.h"
#include "news_placer/templates.h"

namespace news_placer {
namespace {

namespace fs = std::filesystem;

void setup_logging() {
  auto logger = spdlog::get("news_placer");
  if (!logger) {
    logger = spdlog::stderr_color_mt("news_placer");
    spdlog::set_default_logger(logger);
  }
  const char* level = std::getenv("NEWS_PLACER_LOG");
  const std::string name = level == nullptr ? "error" : level;
  if (name == "debug") {
    spdlog::set_level(spdlog::level::debug);
  } else if (name == "info") {
    spdlog::set_level(spdlog::level::info);
  } else {
    spdlog::set_level(spdlog::level::err);
  }
}

struct Options {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<int> threads;
  std::string out;
  std::string data;
  std::string task = "aep";
  std::optional<int> year;
  std::optional<int> train_year;
  std::string models;
  std::string article;
};

RunConfig resolve_config(const Options& o) {
  RunConfig config = o.config_path.empty() ? RunConfig{} : RunConfig::load(o.config_path);
  if (o.seed) config.set("seed", std::to_string(*o.seed));
  if (o.threads) config.set("threads", std::to_string(*o.threads));
  if (o.train_year) config.set("train_year", std::to_string(*o.train_year));
  return config;
}

int require_year(const Options& o) {
  if (!o.year) throw CLI::RequiredError("--year");
  return *o.year;
}

void check_task(const std::string& task) {
  if (task != "aep" && task != "asp") {
    throw CLI::ValidationError("--task", "must be aep or asp, got " + task);
  }
}

std::string path_in(const std::string& dir, const std::string& name) {
  return (fs::path(dir) / name).string();
}

std::vector<AepPair> year_pairs(const Dataset& data, int year, const RunConfig& config) {
  return build_aep_ground_truth(data.corpus, data.snapshot(year), data.snapshot(year - 1), nullptr,
                                config.include_unlinked_citations);
}

// --- subcommands -----------------------------------------------------------

void cmd_synth(const Options& o, const RunConfig& config) {
  Dataset data = generate_synthetic_corpus(SyntheticSpec::from_config(config));
  write_dataset(data, o.out);
  write_file(path_in(o.out, "config.json"), config.echo_json() + "\n");
  spdlog::info("synthetic corpus: {} articles, {} snapshots", data.corpus.size(),
               data.snapshots.size());
}

void cmd_ingest(const Options& o, const RunConfig&) {
  Dataset data = load_dataset(o.data);
  for (auto& a : data.corpus) ensure_tagged(a);
  write_dataset(data, o.out);
  spdlog::info("ingested {} articles", data.corpus.size());
}

void cmd_link(const Options& o, const RunConfig& config) {
  Dataset data = load_dataset(o.data);
  std::vector<NewsArticle> linked(data.corpus.size());
  parallel_for(data.corpus.size(), config.threads, [&](std::size_t i) {
    NewsArticle a = data.corpus[i];
    ensure_tagged(a);
    linked[i] = link_entities(std::move(a), data.dictionary, config.link_min_prior);
  });
  data.corpus = std::move(linked);
  write_dataset(data, o.out);
}

void cmd_ground_truth(const Options& o, const RunConfig& config) {
  const Dataset data = load_dataset(o.data);
  const int year = require_year(o);
  GroundTruthStats stats;
  const auto pairs = build_aep_ground_truth(data.corpus, data.snapshot(year),
                                            data.snapshot(year - 1), &stats,
                                            config.include_unlinked_citations);
  const TemplateSet templates =
      build_templates(data.snapshot(year - 1), data.hierarchy, template_config(config),
                      config.threads);
  const auto triples =
      build_asp_ground_truth(pairs, data.corpus, data.snapshot(year), templates, &stats);
  write_aep_ground_truth(pairs, path_in(o.out, fmt::format("aep_{}.tsv", year)));
  write_asp_ground_truth(triples, path_in(o.out, fmt::format("asp_{}.tsv", year)));
  spdlog::info("{} pairs, {} triples, {} unlinked citations, {} unmapped sections",
               pairs.size(), triples.size(), stats.unlinked_citations, stats.unmapped_sections);
}

void cmd_templates(const Options& o, const RunConfig& config) {
  const Dataset data = load_dataset(o.data);
  const int year = require_year(o);
  const TemplateSet templates = build_templates(data.snapshot(year - 1), data.hierarchy,
                                                template_config(config), config.threads);
  for (const auto& [class_id, tmpl] : templates.templates()) {
    write_file(path_in(o.out, class_id + ".json"), template_to_json(tmpl) + "\n");
  }
}

void cmd_features(const Options& o, const RunConfig& config) {
  const Dataset data = load_dataset(o.data);
  const int year = require_year(o);
  if (o.task == "aep") {
    const AepYear aep = compute_aep_year(data, year, config);
    write_file(path_in(o.out, fmt::format("aep_features_{}.csv", year)),
               aep_feature_matrix(aep.vectors).to_csv());
    return;
  }
  const AspIndexes indexes = build_asp_indexes(data, year, config);
  const AspYear asp = compute_asp_year(data, year, config, year_pairs(data, year, config), indexes);
  std::vector<AspRow> rows;
  for (const auto& r : asp.rows) rows.insert(rows.end(), r.begin(), r.end());
  write_file(path_in(o.out, fmt::format("asp_features_{}.csv", year)),
             asp_feature_matrix(rows).to_csv());
}

void cmd_train(const Options& o, const RunConfig& config) {
  const Dataset data = load_dataset(o.data);
  const int year = config.train_year;
  if (o.task == "aep") {
    const AepYear aep = compute_aep_year(data, year, config);
    write_file(path_in(o.out, "aep_model.json"), train_aep_model(aep.vectors, config).to_json());
    return;
  }
  const AspIndexes indexes = build_asp_indexes(data, year, config);
  const AspYear asp = compute_asp_year(data, year, config, year_pairs(data, year, config), indexes);
  std::vector<AspRow> rows;
  for (const auto& r : asp.rows) rows.insert(rows.end(), r.begin(), r.end());
  if (rows.empty()) throw Error(fmt::format("no section placement instances in {}", year));
  write_file(path_in(o.out, "asp_model.json"), train_asp_model(rows, config).to_json());
}

void cmd_evaluate(const Options& o, const RunConfig& config) {
  const Dataset data = load_dataset(o.data);
  if (o.task == "aep") {
    emit_report(run_aep_experiment(data, config.train_year, config), o.out);
  } else {
    emit_report(run_asp_experiment(data, config.train_year, config).report, o.out);
  }
}

void cmd_suggest(const Options& o, const RunConfig& config, std::ostream& out) {
  const Dataset data = load_dataset(o.data);
  const int year = require_year(o);
  auto articles = parse_news_corpus(read_file(o.article), o.article);
  if (articles.size() != 1) throw Error(o.article + ": expected exactly one article");
  NewsArticle article = std::move(articles.front());
  ensure_tagged(article);
  if (article.mentions.empty()) {
    article = link_entities(std::move(article), data.dictionary, config.link_min_prior);
  }
  const RandomForest aep_model = RandomForest::from_json(read_file(path_in(o.models, "aep_model.json")));
  const RandomForest asp_model = RandomForest::from_json(read_file(path_in(o.models, "asp_model.json")));

  const AepIndexes aep = build_aep_indexes(data, year, config);
  AepContext context;
  context.previous = &data.snapshot(year - 1);
  context.authority = &aep.authority;
  context.domains = &aep.domains;
  context.articles = aep.articles.get();
  context.config = aep_config(config);

  std::vector<std::pair<std::string, double>> relevant;
  for (const auto& entity : article.entities()) {
    if (context.previous->find(entity) == nullptr) continue;
    const AepPair pair{article.id, entity, Relevance::kNonRelevant, year};
    const auto v = assemble_aep_vector(pair, article, context).values();
    const double c = aep_model.confidence(v, 1);
    if (c >= config.suggest_threshold) relevant.emplace_back(entity, c);
  }
  std::stable_sort(relevant.begin(), relevant.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });

  out << "entity\tconfidence\tsection\n";
  if (relevant.empty()) return;
  const AspIndexes asp = build_asp_indexes(data, year, config, std::span(&article, 1));
  AspContext base;
  base.previous = context.previous;
  base.topics = &asp.topics;
  base.articles = asp.articles.get();
  base.tables = &asp.tables;
  base.config = asp_config(config);
  for (const auto& [entity, confidence] : relevant) {
    std::string section;
    const SectionTemplate* tmpl = template_for(asp, data, entity, year);
    if (tmpl != nullptr && !tmpl->slots.empty()) {
      AspContext c = base;
      c.tmpl = tmpl;
      c.slots = &asp.slots.at(tmpl->class_id);
      // The slot only fixes the label, which is unused here.
      const AspTriple triple{article.id, entity, tmpl->slots.front().slot_id, year, ""};
      const auto rows = assemble_asp_vectors(triple, article, c);
      section = argmax_candidate(asp_model, rows);
    }
    out << entity << '\t' << format_double(confidence) << '\t' << section << '\n';
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out) {
  setup_logging();
  CLI::App app{"Suggests news articles for entity pages and their sections."};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--config", o.config_path, "Run configuration (JSON)")->check(CLI::ExistingFile);
  app.add_option("--seed", o.seed, "Overrides the configured seed");
  app.add_option("--threads", o.threads, "Worker threads; never changes results")
      ->check(CLI::PositiveNumber);

  auto data_opt = [&](CLI::App* c) {
    c->add_option("--data", o.data, "Data directory")->required()->check(CLI::ExistingDirectory);
  };
  auto out_opt = [&](CLI::App* c) {
    c->add_option("--out", o.out, "Output directory")->required();
  };
  auto task_opt = [&](CLI::App* c) {
    c->add_option("--task", o.task, "aep or asp")->check(CLI::IsMember({"aep", "asp"}));
  };

  auto* synth = app.add_subcommand("synth", "Generate a synthetic data directory");
  out_opt(synth);
  auto* ingest = app.add_subcommand("ingest", "Validate and tag a raw data directory");
  data_opt(ingest);
  out_opt(ingest);
  auto* link = app.add_subcommand("link", "Link entity mentions with the dictionary");
  data_opt(link);
  out_opt(link);
  auto* gt = app.add_subcommand("ground-truth", "Write the labeled pairs and triples of a year");
  data_opt(gt);
  out_opt(gt);
  gt->add_option("--year", o.year, "Year t")->required();
  auto* templates = app.add_subcommand("templates", "Write the section templates used at a year");
  data_opt(templates);
  out_opt(templates);
  templates->add_option("--year", o.year, "Year t; templates come from t-1")->required();
  auto* features = app.add_subcommand("features", "Write the feature matrix of a year");
  data_opt(features);
  out_opt(features);
  task_opt(features);
  features->add_option("--year", o.year, "Year t")->required();
  auto* train = app.add_subcommand("train", "Train a model on one year");
  data_opt(train);
  out_opt(train);
  task_opt(train);
  train->add_option("--train-year", o.train_year, "Training year");
  auto* evaluate = app.add_subcommand("evaluate", "Run a temporal experiment and write a report");
  data_opt(evaluate);
  out_opt(evaluate);
  task_opt(evaluate);
  evaluate->add_option("--train-year", o.train_year, "Training year");
  auto* suggest = app.add_subcommand("suggest", "Suggest entities and sections for one article");
  data_opt(suggest);
  suggest->add_option("--models", o.models, "Directory with aep_model.json and asp_model.json")
      ->required()
      ->check(CLI::ExistingDirectory);
  suggest->add_option("--article", o.article, "One article in corpus JSON format")
      ->required()
      ->check(CLI::ExistingFile);
  suggest->add_option("--year", o.year, "Year t of the suggestion")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const RunConfig config = resolve_config(o);
    check_task(o.task);
    CLI::App* cmd = app.get_subcommands().front();
    const std::string name = cmd->get_name();
    spdlog::info("{} with seed {} and {} threads", name, config.seed, config.threads);
    if (name == "synth") {
      cmd_synth(o, config);
    } else if (name == "ingest") {
      cmd_ingest(o, config);
    } else if (name == "link") {
      cmd_link(o, config);
    } else if (name == "ground-truth") {
      cmd_ground_truth(o, config);
    } else if (name == "templates") {
      cmd_templates(o, config);
    } else if (name == "features") {
      cmd_features(o, config);
    } else if (name == "train") {
      cmd_train(o, config);
    } else if (name == "evaluate") {
      cmd_evaluate(o, config);
    } else if (name == "suggest") {
      cmd_suggest(o, config, out);
    }
  } catch (const CLI::Error& e) {
    spdlog::error("{}", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    spdlog::error("{}", e.what());
    return kExitDataError;
  }
  return kExitOk;
}

}  // namespace news_placer
