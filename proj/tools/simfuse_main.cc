/*
 * Copyright 2026 The simfuse Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
// Command-line front end: fuse, eval, split, gen, validate, bench.
//
// Exit status: 0 success, 1 configuration error, 2 runtime error. Data goes
// to files or standard output, diagnostics to standard error.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "simfuse/cv.h"
#include "simfuse/errors.h"
#include "simfuse/experiment.h"
#include "simfuse/fgs.h"
#include "simfuse/integrate.h"
#include "simfuse/io.h"
#include "simfuse/linear.h"
#include "simfuse/parallel.h"
#include "simfuse/report.h"
#include "simfuse/snf.h"
#include "simfuse/synthetic.h"
#include "simfuse/validation.h"

namespace simfuse {
namespace {

namespace fs = std::filesystem;

// Thrown for bad flags that CLI11 cannot catch on its own.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IntegratorFlags {
  std::string method = "fgs";
  int k = 5;
  double rho = 0.5;
  double lambda1 = 0.25;
  double lambda2 = 0.25;
  int iters = 2;
  double c1 = 0.7;
  double c2 = 0.6;
  std::string normalization = "printed";
  std::string reading = "neighbor";
  int inner_folds = 5;

  void add_to(CLI::App* app) {
    app->add_option("--method", method, "Integrator: " + valid_method_names());
    app->add_option("--k", k, "Neighbourhood size for LIC, FGS and SNF")->check(CLI::PositiveNumber);
    app->add_option("--rho", rho, "FGS filter ratio in [0,1)");
    app->add_option("--lambda1", lambda1, "HSIC Laplacian regularizer");
    app->add_option("--lambda2", lambda2, "HSIC norm regularizer");
    app->add_option("--iters", iters, "SNF diffusion rounds")->check(CLI::PositiveNumber);
    app->add_option("--c1", c1, "SNF-H entropy quantile");
    app->add_option("--c2", c2, "SNF-H redundancy quantile");
    app->add_option("--snf-normalization", normalization, "printed, column or row");
    app->add_option("--consistency", reading, "neighbor or literal");
    app->add_option("--inner-folds", inner_folds, "SNF-F inner CV folds")->check(CLI::PositiveNumber);
  }

  IntegratorConfig config(const std::string& name, std::uint64_t seed) const {
    const auto m = parse_method(name);
    if (!m) throw ConfigError("unknown method '" + name + "'; valid methods: " + valid_method_names());
    IntegratorConfig c;
    c.method = *m;
    if (reading == "neighbor") {
      c.reading = ConsistencyReading::kNeighborSameTarget;
    } else if (reading == "literal") {
      c.reading = ConsistencyReading::kLiteral;
    } else {
      throw ConfigError("--consistency must be neighbor or literal");
    }
    c.fgs.k = k;
    c.fgs.rho = rho;
    c.fgs.reading = c.reading;
    c.lic_k = k;
    c.hsic.lambda1 = lambda1;
    c.hsic.lambda2 = lambda2;
    c.snf.k = k;
    c.snf.iters = iters;
    c.snf.c1 = c1;
    c.snf.c2 = c2;
    if (normalization == "printed") {
      c.snf.normalization = SnfNormalization::kAsPrinted;
    } else if (normalization == "column") {
      c.snf.normalization = SnfNormalization::kColumnOffDiagonal;
    } else if (normalization == "row") {
      c.snf.normalization = SnfNormalization::kRowOffDiagonal;
    } else {
      throw ConfigError("--snf-normalization must be printed, column or row");
    }
    c.snff_inner_folds = inner_folds;
    c.snff_seed = seed;
    return c;
  }
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<std::string> view_labels(const std::vector<SimilarityView>& views) {
  std::vector<std::string> labels;
  for (std::size_t h = 0; h < views.size(); ++h) {
    labels.push_back(views[h].label.empty() ? "view" + std::to_string(h) : views[h].label);
  }
  return labels;
}

CvSetting setting_of(const std::string& name) {
  const auto s = parse_cv_setting(name);
  if (!s) throw ConfigError("unknown setting '" + name + "'; valid: CVS_d, CVS_t, CVS_dt, CVS_p, cluCVS_d");
  return *s;
}

// ---------------------------------------------------------------- fuse

struct FuseCommand {
  std::string manifest;
  std::string side = "drug";
  std::string out;
  std::string weights_out;
  std::uint64_t seed = 0;
  NeighborhoodParams model;
  IntegratorFlags flags;

  int run() const {
    if (side != "drug" && side != "target") throw ConfigError("--side must be drug or target");
    const IntegratorConfig config = flags.config(flags.method, seed);
    const Dataset ds = load_dataset(manifest);
    const bool drug = side == "drug";
    const auto& views = drug ? ds.drug_views : ds.target_views;
    const auto& other = drug ? ds.target_views : ds.drug_views;
    const Matrix y = drug ? ds.interactions.matrix : Matrix(ds.interactions.matrix.transpose());
    const auto& ids = drug ? ds.interactions.drug_ids : ds.interactions.target_ids;

    const SideIntegration result = integrate_side(views, other, y, config, neighborhood_factory(model));
    write_matrix_tsv(fs::path(out), ids, ids, result.fused.matrix);

    const fs::path weights_path = weights_out.empty() ? fs::path(out + ".weights.tsv") : fs::path(weights_out);
    const auto labels = view_labels(views);
    if (result.weights) {
      write_matrix_tsv(weights_path, ids, labels, result.weights->matrix);
    } else if (result.global_weights) {
      write_matrix_tsv(weights_path, {"weight"}, labels, result.global_weights->weights.transpose());
    } else if (!result.selected_views.empty()) {
      Matrix chosen = Matrix::Zero(1, static_cast<Eigen::Index>(views.size()));
      for (int h : result.selected_views) chosen(0, h) = 1.0;
      write_matrix_tsv(weights_path, {"selected"}, labels, chosen);
    }
    return 0;
  }
};

// ---------------------------------------------------------------- eval

struct EvalCommand {
  std::string manifest;
  std::string methods = "fgs";
  std::string settings = "CVS_d";
  int folds = 10;
  std::uint64_t seed = 0;
  std::string out_dir = ".";
  std::string cluster_view;
  double cluster_threshold = 0.6;
  NeighborhoodParams model;
  IntegratorFlags flags;

  int run() const {
    std::vector<IntegratorConfig> configs;
    for (const auto& name : split_list(methods)) configs.push_back(flags.config(name, seed));
    std::vector<CvSetting> chosen;
    for (const auto& name : split_list(settings)) chosen.push_back(setting_of(name));
    if (configs.empty() || chosen.empty()) throw ConfigError("need at least one method and one setting");
    if (folds < 2) throw ConfigError("--folds must be at least 2");
    for (CvSetting s : chosen) {
      if (s == CvSetting::kCluCvsD && cluster_view.empty()) {
        throw ConfigError("cluCVS_d needs --cluster-view");
      }
    }

    const Dataset ds = load_dataset(manifest);
    BaseModelConfig base;
    base.neighborhood = model;
    std::vector<EvalReport> reports;
    for (CvSetting s : chosen) {
      const CvPlan plan = s == CvSetting::kCluCvsD
                              ? make_cluster_cv_plan(ds, cluster_view, cluster_threshold, folds, seed)
                              : make_cv_plan(ds, s, folds, seed);
      for (const auto& config : configs) reports.push_back(run_experiment(ds, config, base, plan));
    }
    fs::create_directories(out_dir);
    std::ofstream(fs::path(out_dir) / "report.json", std::ios::binary) << reports_to_json(reports);
    std::ofstream(fs::path(out_dir) / "report.tsv", std::ios::binary) << reports_to_tsv(reports);
    for (const auto& r : reports) {
      std::cerr << to_string(r.setting) << ' ' << r.integrator << ": AUPR " << format_double(r.mean_aupr)
                << " AUC " << format_double(r.mean_auc) << " (" << r.evaluated_folds << " folds)\n";
    }
    return 0;
  }
};

// ---------------------------------------------------------------- split

struct SplitCommand {
  std::string manifest;
  int drugs = 0;
  int targets = 0;
  std::string setting = "CVS_d";
  int folds = 10;
  std::uint64_t seed = 0;
  std::string cluster_view;
  double cluster_threshold = 0.6;

  int run() const {
    const CvSetting s = setting_of(setting);
    CvPlan plan;
    if (!manifest.empty()) {
      const Dataset ds = load_dataset(manifest);
      plan = s == CvSetting::kCluCvsD ? make_cluster_cv_plan(ds, cluster_view, cluster_threshold, folds, seed)
                                      : make_cv_plan(ds, s, folds, seed);
    } else {
      if (drugs < 1 || targets < 1) throw ConfigError("split needs --manifest or --drugs and --targets");
      if (s == CvSetting::kCluCvsD) throw ConfigError("cluCVS_d needs --manifest");
      plan = make_cv_plan(drugs, targets, s, folds, seed);
    }
    std::cout << "kind\tdrug\ttarget\tfold\n";
    if (!plan.pair_fold.empty()) {
      for (int i = 0; i < plan.num_drugs; ++i) {
        for (int j = 0; j < plan.num_targets; ++j) {
          std::cout << "pair\t" << i << '\t' << j << '\t'
                    << plan.pair_fold[static_cast<std::size_t>(i) * plan.num_targets + j] << '\n';
        }
      }
      return 0;
    }
    for (int i = 0; i < plan.num_drugs; ++i) {
      if (plan.drug_fold[i] >= 0) std::cout << "drug\t" << i << "\t-\t" << plan.drug_fold[i] << '\n';
    }
    for (int j = 0; j < plan.num_targets; ++j) {
      if (plan.target_fold[j] >= 0) std::cout << "target\t-\t" << j << '\t' << plan.target_fold[j] << '\n';
    }
    return 0;
  }
};

// ---------------------------------------------------------------- gen

struct GenCommand {
  std::string out_dir;
  SyntheticSpec spec;

  int run() const {
    const SyntheticDataset syn = generate_synthetic(spec);
    std::cout << write_dataset(syn.dataset, out_dir).string() << '\n';
    return 0;
  }
};

// ---------------------------------------------------------------- validate

struct ValidateCommand {
  std::string manifest;

  int run() const {
    LoadOptions options;
    options.sanitize = false;
    const Dataset ds = load_dataset(manifest, options);
    const ValidationReport report = validate_dataset(ds);
    for (const auto& v : report.violations) std::cerr << v.location << ": " << v.message << '\n';
    if (report.ok()) {
      std::cerr << "ok: " << ds.num_drugs() << " drugs, " << ds.num_targets() << " targets, "
                << ds.drug_views.size() << "+" << ds.target_views.size() << " views, "
                << count_interactions(ds.interactions) << " interactions, sparsity "
                << format_double(sparsity(ds.interactions)) << '\n';
    }
    return report.ok() ? 0 : 1;
  }
};

// ---------------------------------------------------------------- bench

struct BenchCommand {
  std::string methods = "fgs";
  std::string sizes = "200,400,800";
  int views = 6;
  int repeats = 3;
  std::uint64_t seed = 0;
  IntegratorFlags flags;

  static double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }

  // Time spent producing the weights alone. SNF-style methods have none and
  // return a negative value; their full fusion time is reported instead.
  static double weight_time(const IntegratorConfig& c, const Dataset& ds) {
    const auto& views = ds.drug_views;
    const Matrix& y = ds.interactions.matrix;
    const auto start = std::chrono::steady_clock::now();
    switch (c.method) {
      case Method::kFgs:
        fgs_weights(views, y, c.fgs);
        break;
      case Method::kAve:
        ave_weights(static_cast<int>(views.size()));
        break;
      case Method::kKa:
        ka_weights(views, y);
        break;
      case Method::kHsic:
        hsic_weights(views, y, c.hsic);
        break;
      case Method::kLic:
        lic_weights(views, y, c.lic_k, c.reading);
        break;
      default:
        return -1.0;
    }
    return seconds_since(start);
  }

  int run() const {
    std::vector<int> ns;
    for (const auto& s : split_list(sizes)) {
      try {
        ns.push_back(std::stoi(s));
      } catch (const std::exception&) {
        throw ConfigError("bad size '" + s + "' in --sizes");
      }
    }
    std::vector<IntegratorConfig> configs;
    for (const auto& name : split_list(methods)) configs.push_back(flags.config(name, seed));
    if (repeats < 1) throw ConfigError("--repeats must be positive");

    std::cout << "method\tn\tm\twall_seconds\tweight_seconds\n";
    for (int n : ns) {
      SyntheticSpec spec;
      spec.num_drugs = n;
      spec.num_targets = n;
      spec.drug_views = views;
      spec.target_views = 1;
      spec.signal_views = 1;
      spec.seed = seed;
      const Dataset ds = generate_synthetic(spec).dataset;
      for (const auto& c : configs) {
        double wall = 1e300, weights = 1e300;
        for (int r = 0; r < repeats; ++r) {
          const auto start = std::chrono::steady_clock::now();
          integrate_side(ds.drug_views, ds.target_views, ds.interactions.matrix, c, neighborhood_factory());
          const double full = seconds_since(start);
          wall = std::min(wall, full);
          const double w = weight_time(c, ds);
          weights = std::min(weights, w < 0.0 ? full : w);
        }
        std::cout << to_string(c.method) << '\t' << n << '\t' << views << '\t' << format_double(wall) << '\t'
                  << format_double(weights) << '\n';
      }
    }
    return 0;
  }
};

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
    case ErrorCode::kParseError:
    case ErrorCode::kIdMismatch:
    case ErrorCode::kIoError:
      return 1;
    default:
      return 2;
  }
}

void add_model_flags(CLI::App* app, NeighborhoodParams& p) {
  app->add_option("--model-k", p.k, "Base model neighbours")->check(CLI::PositiveNumber);
  app->add_option("--model-eta", p.eta, "Base model rank decay in (0,1]");
}

int run_cli(int argc, char** argv) {
  CLI::App app{"Similarity integration for drug-target interaction prediction"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "Worker threads (default: SIMFUSE_THREADS or all cores)");

  FuseCommand fuse;
  auto* fuse_cmd = app.add_subcommand("fuse", "Fuse one side's similarity views");
  fuse_cmd->add_option("--manifest", fuse.manifest, "Dataset manifest")->required();
  fuse_cmd->add_option("--side", fuse.side, "drug or target");
  fuse_cmd->add_option("--out", fuse.out, "Fused similarity TSV")->required();
  fuse_cmd->add_option("--weights-out", fuse.weights_out, "Weight TSV (default: <out>.weights.tsv)");
  fuse_cmd->add_option("--seed", fuse.seed, "Seed for SNF-F inner folds");
  fuse.flags.add_to(fuse_cmd);
  add_model_flags(fuse_cmd, fuse.model);

  EvalCommand eval;
  auto* eval_cmd = app.add_subcommand("eval", "Cross-validate integrators with the base model");
  eval_cmd->add_option("--manifest", eval.manifest, "Dataset manifest")->required();
  eval_cmd->add_option("--methods", eval.methods, "Comma-separated integrators");
  eval_cmd->add_option("--settings", eval.settings, "Comma-separated CV settings");
  eval_cmd->add_option("--folds", eval.folds, "Folds per setting");
  eval_cmd->add_option("--seed", eval.seed, "Fold seed");
  eval_cmd->add_option("--out-dir", eval.out_dir, "Directory for report.json and report.tsv");
  eval_cmd->add_option("--cluster-view", eval.cluster_view, "Drug view label for cluCVS_d");
  eval_cmd->add_option("--cluster-threshold", eval.cluster_threshold, "Homology threshold for cluCVS_d");
  eval.flags.add_to(eval_cmd);
  eval_cmd->remove_option(eval_cmd->get_option("--method"));
  eval_cmd->add_option("--method", eval.methods, "Alias of --methods");
  add_model_flags(eval_cmd, eval.model);

  SplitCommand split;
  auto* split_cmd = app.add_subcommand("split", "Print a fold assignment as TSV");
  split_cmd->add_option("--manifest", split.manifest, "Dataset manifest");
  split_cmd->add_option("--drugs", split.drugs, "Number of drugs when no manifest is given");
  split_cmd->add_option("--targets", split.targets, "Number of targets when no manifest is given");
  split_cmd->add_option("--setting", split.setting, "CV setting");
  split_cmd->add_option("--folds", split.folds, "Folds");
  split_cmd->add_option("--seed", split.seed, "Fold seed");
  split_cmd->add_option("--cluster-view", split.cluster_view, "Drug view label for cluCVS_d");
  split_cmd->add_option("--cluster-threshold", split.cluster_threshold, "Homology threshold");

  GenCommand gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write a planted-signal synthetic dataset");
  gen_cmd->add_option("--out-dir", gen.out_dir, "Output directory")->required();
  gen_cmd->add_option("--drugs", gen.spec.num_drugs, "Drugs");
  gen_cmd->add_option("--targets", gen.spec.num_targets, "Targets");
  gen_cmd->add_option("--drug-views", gen.spec.drug_views, "Drug views");
  gen_cmd->add_option("--target-views", gen.spec.target_views, "Target views");
  gen_cmd->add_option("--signal-views", gen.spec.signal_views, "Signal views per side");
  gen_cmd->add_option("--noise", gen.spec.noise_level, "Gaussian noise on signal views");
  gen_cmd->add_option("--cluster-size", gen.spec.cluster_size, "Entities per planted cluster");
  gen_cmd->add_option("--seed", gen.spec.seed, "Generator seed");

  ValidateCommand validate;
  auto* validate_cmd = app.add_subcommand("validate", "Lint a dataset without repairing it");
  validate_cmd->add_option("--manifest", validate.manifest, "Dataset manifest")->required();

  BenchCommand bench;
  auto* bench_cmd = app.add_subcommand("bench", "Time integrators over entity counts");
  bench_cmd->add_option("--methods", bench.methods, "Comma-separated integrators");
  bench_cmd->add_option("--sizes", bench.sizes, "Comma-separated entity counts");
  bench_cmd->add_option("--views", bench.views, "Views per side")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--repeats", bench.repeats, "Repetitions; the minimum is reported");
  bench_cmd->add_option("--seed", bench.seed, "Generator seed");
  bench.flags.add_to(bench_cmd);
  bench_cmd->remove_option(bench_cmd->get_option("--method"));
  bench_cmd->add_option("--method", bench.methods, "Alias of --methods");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e);
    return status == 0 ? 0 : 1;
  }

  try {
    if (threads > 0) set_thread_count(threads);
    if (*fuse_cmd) return fuse.run();
    if (*eval_cmd) return eval.run();
    if (*split_cmd) return split.run();
    if (*gen_cmd) return gen.run();
    if (*validate_cmd) return validate.run();
    if (*bench_cmd) return bench.run();
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 1;
}

}  // namespace
}  // namespace simfuse

int main(int argc, char** argv) { return simfuse::run_cli(argc, argv); }
