// Copyright 2026 The parenteval Authors.
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

// parenteval: command-line front end.
//
//   parenteval score      --instances d.jsonl [--entailment word-overlap]
//                         [--lambda auto] [--out per_instance.jsonl]
//   parenteval train-cooc --pairs train.jsonl --out model.tsv
//   parenteval bleu       --instances d.jsonl
//   parenteval bleu-t     --instances d.jsonl
//   parenteval extractive --instances d.jsonl --gen-extractions g.jsonl
//                         --ref-extractions r.jsonl
//   parenteval meta-eval  --metrics parent=p.jsonl,bleu=b.jsonl
//                         --judgments j.jsonl [--iterations 500] [--seed 7]
//
// Machine-readable JSON goes to stdout (or --report), diagnostics and a
// human-readable summary to stderr. Exit codes: 0 success, 2 invalid input
// or flags, 1 internal error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"
#include "json.hpp"
#include "manifest.h"
#include "parenteval/baselines.h"
#include "parenteval/corpus.h"
#include "parenteval/entailment.h"
#include "parenteval/metaeval.h"
#include "parenteval/parent.h"

namespace parenteval::tools {
namespace {

using nlohmann::json;

constexpr char kJobsEnv[] = "PARENTEVAL_JOBS";

int DefaultJobs() {
  if (const char* env = std::getenv(kJobsEnv)) {
    int jobs = std::atoi(env);
    if (jobs >= 1) return jobs;
  }
  return 1;
}

int ExitCode(const absl::Status& status) {
  switch (status.code()) {
    case absl::StatusCode::kOk:
      return 0;
    case absl::StatusCode::kInvalidArgument:
    case absl::StatusCode::kNotFound:
    case absl::StatusCode::kFailedPrecondition:
    case absl::StatusCode::kOutOfRange:
      return 2;
    default:
      return 1;
  }
}

absl::Status Emit(const json& j, const std::string& path) {
  if (path.empty()) {
    std::cout << j.dump(2) << '\n';
    return absl::OkStatus();
  }
  std::ofstream out(path);
  if (!out) return absl::UnavailableError(absl::StrCat("cannot write ", path));
  out << j.dump(2) << '\n';
  return absl::OkStatus();
}

absl::Status WriteJsonLines(const std::vector<json>& rows,
                            const std::string& path) {
  std::ofstream out(path);
  if (!out) return absl::UnavailableError(absl::StrCat("cannot write ", path));
  for (const json& row : rows) out << row.dump() << '\n';
  return out ? absl::OkStatus()
             : absl::DataLossError(absl::StrCat("write failed: ", path));
}

void AddIds(const EvalInstance& inst, json& row) {
  if (!inst.instance_id.empty()) row["instance_id"] = inst.instance_id;
  if (!inst.system.empty()) row["system"] = inst.system;
}

absl::StatusOr<std::optional<double>> ParseLambda(const std::string& flag) {
  if (flag == "auto") return std::optional<double>();
  double value = 0.0;
  std::istringstream in(flag);
  if (!(in >> value) || !in.eof() || !(value >= 0.0 && value <= 1.0)) {
    return absl::InvalidArgumentError(absl::StrCat(
        "--lambda must be \"auto\" or a number in [0, 1], got \"", flag, "\""));
  }
  return std::optional<double>(value);
}

absl::StatusOr<std::shared_ptr<const EntailmentModel>> ParseEntailment(
    const std::string& flag) {
  if (flag == "word-overlap") return std::make_shared<WordOverlapModel>();
  constexpr std::string_view kCooc = "cooccurrence:";
  if (flag.starts_with(kCooc) && flag.size() > kCooc.size()) {
    auto model = LoadModel(flag.substr(kCooc.size()));
    if (!model.ok()) {
      return absl::Status(model.status().code(),
                          absl::StrCat("--entailment: ", model.status().message()));
    }
    return std::make_shared<CooccurrenceModel>(*std::move(model));
  }
  return absl::InvalidArgumentError(absl::StrCat(
      "--entailment must be \"word-overlap\" or \"cooccurrence:<model.tsv>\", "
      "got \"", flag, "\""));
}

// ---------------------------------------------------------------- score

struct ScoreFlags {
  std::string instances;
  std::string entailment = "word-overlap";
  std::string lambda = "auto";
  double epsilon = kDefaultEpsilon;
  int max_order = kMaxNgramOrder;
  bool ablate_entailment = false;
  std::string out;
  std::string report;
  int jobs = 1;
};

absl::Status RunScore(const ScoreFlags& flags) {
  auto lambda = ParseLambda(flags.lambda);
  if (!lambda.ok()) return lambda.status();
  auto model = ParseEntailment(flags.entailment);
  if (!model.ok()) return model.status();

  ParentConfig config;
  config.epsilon = flags.epsilon;
  config.fixed_lambda = *lambda;
  config.max_order = flags.max_order;
  config.ablate_entailment = flags.ablate_entailment;
  config.entailment = *model;
  if (absl::Status s = ValidateConfig(config); !s.ok()) return s;

  RunManifest manifest("score");
  if (absl::Status s = manifest.AddInput("instances", flags.instances); !s.ok())
    return s;
  if (flags.entailment != "word-overlap") {
    if (absl::Status s = manifest.AddInput(
            "entailment", flags.entailment.substr(flags.entailment.find(':') + 1));
        !s.ok())
      return s;
  }
  manifest.SetFlag("entailment", flags.entailment);
  manifest.SetFlag("lambda", flags.lambda);
  manifest.SetFlag("epsilon", flags.epsilon);
  manifest.SetFlag("max_order", flags.max_order);
  manifest.SetFlag("ablate_entailment", flags.ablate_entailment);
  manifest.SetFlag("out", flags.out);

  auto instances = LoadInstances(flags.instances);
  if (!instances.ok()) return instances.status();
  auto corpus = ParentCorpus(*instances, config, flags.jobs);
  if (!corpus.ok()) return corpus.status();

  if (!flags.out.empty()) {
    std::vector<json> rows;
    rows.reserve(corpus->per_instance.size());
    for (size_t i = 0; i < corpus->per_instance.size(); ++i) {
      const ParentScore& s = corpus->per_instance[i];
      json row = {{"index", i},          {"parent", s.f_score},
                  {"e_p", s.e_p},        {"e_r", s.e_r},
                  {"e_r_ref", s.e_r_ref}, {"e_r_table", s.e_r_table},
                  {"lambda", s.lambda_used},
                  {"ref_index", s.chosen_reference_index}};
      AddIds((*instances)[i], row);
      rows.push_back(std::move(row));
    }
    if (absl::Status s = WriteJsonLines(rows, flags.out); !s.ok()) return s;
  }

  json summary = {{"metric", "parent"},
                  {"entailment", (*model)->Name()},
                  {"mean_parent", corpus->mean_parent},
                  {"mean_lambda", corpus->mean_lambda},
                  {"n_instances", corpus->n_instances},
                  {"manifest", manifest.ToJson()}};
  std::cerr << std::fixed << std::setprecision(4) << "PARENT ("
            << (*model)->Name() << "): " << corpus->mean_parent
            << "  mean lambda: " << corpus->mean_lambda
            << "  instances: " << corpus->n_instances << '\n';
  return Emit(summary, flags.report);
}

// ----------------------------------------------------------- train-cooc

struct TrainFlags {
  std::string pairs;
  std::string out;
  int min_count = 1;
  std::string report;
};

absl::Status RunTrainCooc(const TrainFlags& flags) {
  RunManifest manifest("train-cooc");
  if (absl::Status s = manifest.AddInput("pairs", flags.pairs); !s.ok()) return s;
  manifest.SetFlag("out", flags.out);
  manifest.SetFlag("min_count", flags.min_count);

  auto pairs = LoadPairs(flags.pairs);
  if (!pairs.ok()) return pairs.status();
  CoocTrainingOptions options;
  options.min_count = flags.min_count;
  auto model = TrainCooccurrence(*pairs, options);
  if (!model.ok()) return model.status();
  if (absl::Status s = SaveModel(*model, flags.out); !s.ok()) return s;

  std::cerr << "trained on " << model->trained_pair_count() << " pairs, "
            << model->size() << " entries -> " << flags.out << '\n';
  json summary = {{"pairs", model->trained_pair_count()},
                  {"entries", model->size()},
                  {"model", flags.out},
                  {"manifest", manifest.ToJson()}};
  return Emit(summary, flags.report);
}

// ---------------------------------------------------------- bleu, bleu-t

struct BleuFlags {
  std::string instances;
  double epsilon = 1e-5;
  int max_order = kMaxNgramOrder;
  std::string out;
  std::string report;
};

absl::Status RunBleu(const BleuFlags& flags, bool with_table) {
  const char* name = with_table ? "bleu-t" : "bleu";
  RunManifest manifest(name);
  if (absl::Status s = manifest.AddInput("instances", flags.instances); !s.ok())
    return s;
  manifest.SetFlag("epsilon", flags.epsilon);
  manifest.SetFlag("max_order", flags.max_order);
  manifest.SetFlag("out", flags.out);

  BleuOptions options;
  options.epsilon = flags.epsilon;
  options.max_order = flags.max_order;
  auto instances = LoadInstances(flags.instances);
  if (!instances.ok()) return instances.status();
  auto score = with_table ? BleuT(*instances, options)
                          : BleuInstances(*instances, options);
  if (!score.ok()) return score.status();

  if (!flags.out.empty()) {
    const std::vector<BleuStats> stats =
        InstanceBleuStats(*instances, with_table, options.max_order);
    std::vector<json> rows;
    for (size_t i = 0; i < stats.size(); ++i) {
      json row = {{"index", i},
                  {"score", BleuFromStats(stats[i], options).score}};
      AddIds((*instances)[i], row);
      rows.push_back(std::move(row));
    }
    if (absl::Status s = WriteJsonLines(rows, flags.out); !s.ok()) return s;
  }

  std::cerr << std::fixed << std::setprecision(4) << name << ": "
            << score->score << "  BP: " << score->brevity_penalty
            << "  hyp/ref length: " << score->hypothesis_length << '/'
            << score->reference_length << '\n';
  json summary = {{"metric", name},
                  {"score", score->score},
                  {"precisions", score->precisions},
                  {"brevity_penalty", score->brevity_penalty},
                  {"hypothesis_length", score->hypothesis_length},
                  {"reference_length", score->reference_length},
                  {"n_instances", instances->size()},
                  {"manifest", manifest.ToJson()}};
  return Emit(summary, flags.report);
}

// ----------------------------------------------------------- extractive

struct ExtractiveFlags {
  std::string instances;
  std::string gen_extractions;
  std::string ref_extractions;
  std::string out;
  std::string report;
};

absl::Status RunExtractive(const ExtractiveFlags& flags) {
  RunManifest manifest("extractive");
  for (const auto& [flag, path] :
       {std::pair{"instances", flags.instances},
        std::pair{"gen_extractions", flags.gen_extractions},
        std::pair{"ref_extractions", flags.ref_extractions}}) {
    if (absl::Status s = manifest.AddInput(flag, path); !s.ok()) return s;
  }
  manifest.SetFlag("out", flags.out);

  auto instances = LoadInstances(flags.instances);
  if (!instances.ok()) return instances.status();
  auto gen = LoadExtractions(flags.gen_extractions);
  if (!gen.ok()) return gen.status();
  auto ref = LoadExtractions(flags.ref_extractions);
  if (!ref.ok()) return ref.status();
  const int64_t n = static_cast<int64_t>(instances->size());
  for (const auto* set : {&*gen, &*ref}) {
    if (!set->empty() && set->rbegin()->first >= n) {
      return absl::InvalidArgumentError(absl::StrCat(
          "extraction index ", set->rbegin()->first, " but only ", n,
          " instances"));
    }
  }
  if (n == 0) return absl::InvalidArgumentError("no instances");

  const ExtractionSet empty;
  auto lookup = [&](const std::map<int64_t, ExtractionSet>& m, int64_t i)
      -> const ExtractionSet& {
    auto it = m.find(i);
    return it == m.end() ? empty : it->second;
  };
  double cs = 0.0, rg = 0.0, rg_f = 0.0;
  std::vector<json> rows;
  for (int64_t i = 0; i < n; ++i) {
    auto scores = ExtractiveMetrics(lookup(*gen, i), lookup(*ref, i),
                                    (*instances)[i].table);
    if (!scores.ok()) return scores.status();
    cs += scores->cs;
    rg += scores->rg;
    rg_f += scores->rg_f;
    json row = {{"index", i}, {"cs", scores->cs}, {"rg", scores->rg},
                {"rg_f", scores->rg_f}};
    AddIds((*instances)[i], row);
    rows.push_back(std::move(row));
  }
  if (!flags.out.empty()) {
    if (absl::Status s = WriteJsonLines(rows, flags.out); !s.ok()) return s;
  }
  const double dn = static_cast<double>(n);
  std::cerr << std::fixed << std::setprecision(4) << "CS: " << cs / dn
            << "  RG: " << rg / dn << "  RG-F: " << rg_f / dn << '\n';
  json summary = {{"cs", cs / dn},
                  {"rg", rg / dn},
                  {"rg_f", rg_f / dn},
                  {"n_instances", n},
                  {"manifest", manifest.ToJson()}};
  return Emit(summary, flags.report);
}

// ------------------------------------------------------------ meta-eval

struct MetaEvalFlags {
  std::vector<std::string> metrics;
  std::string judgments;
  int iterations = 500;
  double alpha = 0.1;
  uint64_t seed = 0;
  std::string labels;
  std::vector<double> proportions = {0.0, 0.25, 0.5, 0.75, 1.0};
  int slice_size = 0;
  bool freeze_human_scores = false;
  std::string report;
  int jobs = 1;
};

// Largest slice size for which every proportion is feasible.
size_t AutoSliceSize(std::span<const LabeledInstance> labels,
                     std::span<const double> proportions) {
  size_t entailed = 0;
  for (const auto& l : labels) entailed += l.entailed ? 1 : 0;
  const size_t divergent = labels.size() - entailed;
  for (size_t size = labels.size(); size > 0; --size) {
    bool ok = true;
    for (double p : proportions) {
      const size_t k = static_cast<size_t>(std::llround(p * size));
      if (k > entailed || size - k > divergent) ok = false;
    }
    if (ok) return size;
  }
  return 0;
}

absl::Status RunMetaEval(const MetaEvalFlags& flags) {
  RunManifest manifest("meta-eval");
  if (absl::Status s = manifest.AddInput("judgments", flags.judgments); !s.ok())
    return s;
  manifest.SetFlag("metrics", flags.metrics);
  manifest.SetFlag("iterations", flags.iterations);
  manifest.SetFlag("alpha", flags.alpha);
  manifest.SetFlag("proportions", flags.proportions);
  manifest.SetFlag("slice_size", flags.slice_size);
  manifest.SetFlag("freeze_human_scores", flags.freeze_human_scores);
  manifest.SetSeed(flags.seed);

  auto judgments = LoadJudgments(flags.judgments);
  if (!judgments.ok()) return judgments.status();
  if (judgments->comparisons.empty()) {
    return absl::InvalidArgumentError(
        absl::StrCat(flags.judgments, ": no comparisons"));
  }

  std::vector<MetricScores> metrics;
  for (const std::string& entry : flags.metrics) {
    std::string name, path;
    if (auto eq = entry.find('='); eq != std::string::npos) {
      name = entry.substr(0, eq);
      path = entry.substr(eq + 1);
    } else {
      path = entry;
      name = std::filesystem::path(entry).stem().string();
    }
    for (const MetricScores& m : metrics) {
      if (m.name() == name) {
        return absl::InvalidArgumentError(
            absl::StrCat("--metrics: duplicate metric name \"", name, "\""));
      }
    }
    if (absl::Status s = manifest.AddInput(absl::StrCat("metric:", name), path);
        !s.ok())
      return s;
    auto metric = LoadMetricScores(path, name);
    if (!metric.ok()) return metric.status();
    metrics.push_back(*std::move(metric));
  }
  if (metrics.empty()) return absl::InvalidArgumentError("--metrics is empty");

  auto human = ThurstoneScores(*judgments);
  if (!human.ok()) return human.status();

  BootstrapOptions options;
  options.iterations = flags.iterations;
  options.alpha = flags.alpha;
  options.seed = flags.seed;
  options.jobs = flags.jobs;
  options.freeze_human_scores = flags.freeze_human_scores;
  auto boot = BootstrapCorrelations(metrics, *judgments, options);
  if (!boot.ok()) return boot.status();

  json report;
  json human_json = json::object();
  for (size_t i = 0; i < human->systems.size(); ++i) {
    human_json[human->systems[i]] = human->values[i];
  }
  report["human_scores"] = human_json;

  json per_metric = json::object();
  std::vector<std::vector<bool>> correct(metrics.size());
  for (size_t m = 0; m < metrics.size(); ++m) {
    const BootstrapResult& r = (*boot)[m];
    auto full = SystemCorrelation(metrics[m], *judgments);
    if (!full.ok()) return full.status();
    auto accuracy = PairwiseAccuracy(metrics[m], *judgments);
    if (!accuracy.ok()) return accuracy.status();
    auto agreement = PairwiseAgreement(metrics[m], *judgments);
    if (!agreement.ok()) return agreement.status();
    for (double a : *agreement) correct[m].push_back(a == 1.0);
    per_metric[metrics[m].name()] = {
        {"mean_correlation", r.mean},
        {"ci", {r.ci_lower, r.ci_upper}},
        {"full_sample_correlation", *full},
        {"pairwise_accuracy", *accuracy}};
  }
  report["metrics"] = per_metric;

  json significance = json::object();
  json mcnemar = json::object();
  for (size_t a = 0; a < metrics.size(); ++a) {
    for (size_t b = 0; b < metrics.size(); ++b) {
      if (a == b) continue;
      auto diff = CorrelationCiDifference((*boot)[a], (*boot)[b], flags.alpha);
      if (!diff.ok()) return diff.status();
      significance[metrics[a].name()][metrics[b].name()] = {
          {"interval", {diff->lower, diff->upper}},
          {"significant", diff->significant}};
      auto p = McNemarTest(correct[a], correct[b]);
      if (!p.ok()) return p.status();
      mcnemar[metrics[a].name()][metrics[b].name()] = *p;
    }
  }
  report["significance"] = significance;
  report["mcnemar_p"] = mcnemar;
  report["bootstrap"] = {{"iterations", flags.iterations},
                         {"alpha", flags.alpha},
                         {"seed", flags.seed},
                         {"freeze_human_scores", flags.freeze_human_scores},
                         {"sample_digest", (*boot)[0].sample_digest}};

  if (!flags.labels.empty()) {
    if (absl::Status s = manifest.AddInput("labels", flags.labels); !s.ok())
      return s;
    auto labels = LoadEntailedLabels(flags.labels);
    if (!labels.ok()) return labels.status();
    const size_t size = flags.slice_size > 0
                            ? static_cast<size_t>(flags.slice_size)
                            : AutoSliceSize(*labels, flags.proportions);
    auto slices = EntailedProportionSlices(*labels, flags.proportions, size,
                                           flags.seed);
    if (!slices.ok()) return slices.status();
    json slices_json = json::array();
    for (size_t p = 0; p < slices->size(); ++p) {
      json corr = json::object();
      for (const MetricScores& m : metrics) {
        auto r = SystemCorrelation(m, *judgments, (*slices)[p]);
        corr[m.name()] = r.ok() ? json(*r) : json(nullptr);
      }
      slices_json.push_back({{"proportion", flags.proportions[p]},
                             {"size", size},
                             {"correlations", corr}});
    }
    report["slices"] = slices_json;
  }
  report["manifest"] = manifest.ToJson();

  std::cerr << std::left << std::setw(16) << "metric" << std::right
            << std::setw(10) << "mean r" << std::setw(20) << "CI"
            << std::setw(12) << "accuracy" << '\n';
  for (size_t m = 0; m < metrics.size(); ++m) {
    const BootstrapResult& r = (*boot)[m];
    std::ostringstream ci;
    ci << std::fixed << std::setprecision(3) << '[' << r.ci_lower << ", "
       << r.ci_upper << ']';
    std::cerr << std::left << std::setw(16) << metrics[m].name() << std::right
              << std::fixed << std::setprecision(3) << std::setw(10) << r.mean
              << std::setw(20) << ci.str() << std::setw(12)
              << per_metric[metrics[m].name()]["pairwise_accuracy"].get<double>()
              << '\n';
  }
  return Emit(report, flags.report);
}

}  // namespace
}  // namespace parenteval::tools

int main(int argc, char** argv) {
  using namespace parenteval::tools;
  CLI::App app{"PARENT and baseline metrics for table-to-text generation"};
  app.require_subcommand(1);
  const int default_jobs = DefaultJobs();

  ScoreFlags score;
  score.jobs = default_jobs;
  auto* score_cmd = app.add_subcommand("score", "Score instances with PARENT");
  score_cmd->add_option("--instances", score.instances, "Instances JSONL")
      ->required();
  score_cmd->add_option("--entailment", score.entailment,
                        "word-overlap | cooccurrence:<model.tsv>");
  score_cmd->add_option("--lambda", score.lambda, "auto | value in [0, 1]");
  score_cmd->add_option("--epsilon", score.epsilon, "Smoothing constant");
  score_cmd->add_option("--max-order", score.max_order, "Maximum n-gram order");
  score_cmd->add_flag("--ablate-entailment", score.ablate_entailment,
                      "Use w(g)=0 in precision and w(g)=1 in recall");
  score_cmd->add_option("--out", score.out, "Per-instance JSONL output");
  score_cmd->add_option("--report", score.report,
                        "Write the summary here instead of stdout");
  score_cmd->add_option("--jobs", score.jobs, "Worker threads")
      ->check(CLI::PositiveNumber);

  TrainFlags train;
  auto* train_cmd =
      app.add_subcommand("train-cooc", "Train the co-occurrence model");
  train_cmd->add_option("--pairs", train.pairs, "Training pairs JSONL")
      ->required();
  train_cmd->add_option("--out", train.out, "Model TSV output")->required();
  train_cmd->add_option("--min-count", train.min_count,
                        "Minimum co-occurrence count to keep an entry")
      ->check(CLI::PositiveNumber);
  train_cmd->add_option("--report", train.report, "Summary output path");

  BleuFlags bleu;
  auto* bleu_cmd = app.add_subcommand("bleu", "Corpus BLEU");
  BleuFlags bleu_t;
  auto* bleu_t_cmd =
      app.add_subcommand("bleu-t", "Corpus BLEU with table values as references");
  for (auto [cmd, flags] : {std::pair{bleu_cmd, &bleu},
                            std::pair{bleu_t_cmd, &bleu_t}}) {
    cmd->add_option("--instances", flags->instances, "Instances JSONL")
        ->required();
    cmd->add_option("--epsilon", flags->epsilon, "Floor for zero precisions");
    cmd->add_option("--max-order", flags->max_order, "Maximum n-gram order");
    cmd->add_option("--out", flags->out, "Per-instance sentence BLEU JSONL");
    cmd->add_option("--report", flags->report, "Summary output path");
  }

  ExtractiveFlags extractive;
  auto* extractive_cmd =
      app.add_subcommand("extractive", "CS / RG / RG-F over extractions");
  extractive_cmd->add_option("--instances", extractive.instances)->required();
  extractive_cmd
      ->add_option("--gen-extractions", extractive.gen_extractions,
                   "Extractions from generations (JSONL)")
      ->required();
  extractive_cmd
      ->add_option("--ref-extractions", extractive.ref_extractions,
                   "Extractions from references (JSONL)")
      ->required();
  extractive_cmd->add_option("--out", extractive.out, "Per-instance JSONL");
  extractive_cmd->add_option("--report", extractive.report,
                             "Summary output path");

  MetaEvalFlags meta;
  meta.jobs = default_jobs;
  auto* meta_cmd = app.add_subcommand(
      "meta-eval", "Correlate metrics with pairwise human judgments");
  meta_cmd
      ->add_option("--metrics", meta.metrics,
                   "Comma-separated [name=]path list of per-instance scores")
      ->delimiter(',')
      ->required();
  meta_cmd->add_option("--judgments", meta.judgments, "Judgments JSONL")
      ->required();
  meta_cmd->add_option("--iterations", meta.iterations, "Bootstrap iterations")
      ->check(CLI::PositiveNumber);
  meta_cmd->add_option("--alpha", meta.alpha, "1 - confidence level")
      ->check(CLI::Range(0.0, 1.0));
  meta_cmd->add_option("--seed", meta.seed, "Bootstrap seed");
  meta_cmd->add_option("--labels", meta.labels, "Entailed-label JSONL");
  meta_cmd->add_option("--proportions", meta.proportions,
                       "Entailed proportions for slicing")
      ->delimiter(',');
  meta_cmd->add_option("--slice-size", meta.slice_size,
                       "Instances per slice (0: largest feasible)");
  meta_cmd->add_flag("--freeze-human-scores", meta.freeze_human_scores,
                     "Keep full-data human scores fixed across iterations");
  meta_cmd->add_option("--report", meta.report, "Report output path");
  meta_cmd->add_option("--jobs", meta.jobs, "Worker threads")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  absl::Status status;
  try {
    if (*score_cmd) status = RunScore(score);
    else if (*train_cmd) status = RunTrainCooc(train);
    else if (*bleu_cmd) status = RunBleu(bleu, false);
    else if (*bleu_t_cmd) status = RunBleu(bleu_t, true);
    else if (*extractive_cmd) status = RunExtractive(extractive);
    else if (*meta_cmd) status = RunMetaEval(meta);
  } catch (const std::exception& e) {
    status = absl::InternalError(e.what());
  }
  if (!status.ok()) {
    std::cerr << "error: " << status.message() << '\n';
  }
  return ExitCode(status);
}
