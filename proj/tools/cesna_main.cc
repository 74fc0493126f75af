// Copyright 2026 The cesna Authors.
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

// Command-line front end: detect, select-c, eval, gen, robustness, scaling.
//
// Exit codes: 0 success, 2 usage or input error, 1 internal error. Standard
// output carries only the requested result; logs go to standard error.

#include <chrono>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cesna/evaluation.h"
#include "cesna/experiments.h"
#include "cesna/io.h"
#include "cesna/model_selection.h"
#include "cesna/solver.h"
#include "cesna/synthetic.h"

namespace {

using namespace cesna;
namespace fs = std::filesystem;

constexpr int kUsageError = 2;
constexpr int kInternalError = 1;

class Stopwatch {
 public:
  double Lap() {
    const auto now = std::chrono::steady_clock::now();
    const double s = std::chrono::duration<double>(now - last_).count();
    last_ = now;
    return s;
  }

 private:
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

template <typename T>
std::vector<T> ParseList(const std::string& text, const char* what) {
  std::vector<T> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::istringstream is(item);
    T value{};
    if (!(is >> value) || !(is >> std::ws).eof()) {
      throw InputError(std::string("bad ") + what + " list entry '" + item + "'");
    }
    out.push_back(value);
  }
  if (out.empty()) throw InputError(std::string("empty ") + what + " list");
  return out;
}

struct FitFlags {
  std::string edges;
  std::string attrs;
  double alpha = 0.5;
  double lambda = 1.0;
  std::optional<double> delta;
  int max_iters = 1000;
  double tol = 1e-5;
  int threads = 1;
  std::uint64_t seed = 0;

  void Register(CLI::App* app, bool with_delta) {
    app->add_option("-i,--edges", edges, "edge file (u<TAB>v)")->required();
    app->add_option("-a,--attrs", attrs, "attribute file (u<TAB>k)");
    app->add_option("--alpha", alpha, "attribute likelihood weight in [0,1]");
    app->add_option("--lambda", lambda, "l1 strength on attribute weights");
    if (with_delta) {
      app->add_option("--delta", delta, "membership threshold override");
    }
    app->add_option("--max-iters", max_iters, "maximum outer iterations");
    app->add_option("--tol", tol, "relative improvement stopping tolerance");
    app->add_option("--threads", threads, "worker threads");
    app->add_option("--seed", seed, "random seed");
  }

  FitConfig Config() const {
    FitConfig config;
    config.alpha = alpha;
    config.lambda = lambda;
    config.delta = delta;
    config.max_outer_iters = max_iters;
    config.rel_improvement_tol = tol;
    config.num_workers = threads;
    config.rng_seed = seed;
    config.Validate();
    return config;
  }

  AttributedGraph Load(RunManifest& manifest) const {
    BuildDiagnostics diag;
    std::optional<fs::path> attr_path;
    if (!attrs.empty()) attr_path = attrs;
    AttributedGraph g = LoadGraph(edges, attr_path, &diag);
    manifest.Set("edges_path", edges);
    manifest.Set("edges_digest", FileDigest(edges));
    if (attr_path) {
      manifest.Set("attrs_path", attrs);
      manifest.Set("attrs_digest", FileDigest(attrs));
    }
    manifest.Set("nodes", static_cast<std::int64_t>(g.num_nodes()));
    manifest.Set("attributes", static_cast<std::int64_t>(g.num_attrs()));
    manifest.Set("edge_count", g.num_edges());
    manifest.Set("attr_pair_count", g.num_attr_pairs());
    manifest.Set("self_loops_dropped", diag.self_loops_dropped);
    manifest.Set("duplicate_edges_dropped", diag.duplicate_edges_dropped);
    manifest.Set("duplicate_attrs_dropped", diag.duplicate_attrs_dropped);
    if (diag.self_loops_dropped + diag.duplicate_edges_dropped +
            diag.duplicate_attrs_dropped >
        0) {
      std::cerr << "warning: dropped " << diag.self_loops_dropped
                << " self-loops, " << diag.duplicate_edges_dropped
                << " duplicate edges, " << diag.duplicate_attrs_dropped
                << " duplicate attribute pairs\n";
    }
    return g;
  }
};

void RecordConfig(RunManifest& m, const FitConfig& config) {
  m.Set("alpha", config.alpha);
  m.Set("lambda", config.lambda);
  m.Set("max_iters", config.max_outer_iters);
  m.Set("tol", config.rel_improvement_tol);
  m.Set("threads", config.num_workers);
  m.Set("seed", static_cast<std::int64_t>(config.rng_seed));
  m.Set("line_search", std::to_string(config.line_search.init_step) + "," +
                           std::to_string(config.line_search.shrink_factor) +
                           "," + std::to_string(config.line_search.armijo_const) +
                           "," + std::to_string(config.line_search.max_trials));
  m.Set("min_dot_guard", config.min_dot_guard);
  m.Set("max_f", config.max_f);
}

void WriteManifest(const RunManifest& manifest, const fs::path& path) {
  auto out = OpenForWrite(path);
  manifest.Write(out);
}

int RunDetect(const FitFlags& flags, const std::string& communities,
              const std::string& candidates, bool candidates_given,
              const std::string& prefix) {
  Stopwatch clock;
  RunManifest manifest;
  manifest.Set("command", "detect");
  const FitConfig config = flags.Config();
  const bool automatic = communities == "auto";
  if (candidates_given && !automatic) {
    throw InputError("--candidates requires --communities auto");
  }
  int num_communities = 0;
  if (!automatic) {
    num_communities = ParseList<int>(communities, "community count").at(0);
    if (num_communities < 1 || communities.find(',') != std::string::npos) {
      throw InputError("--communities must be a positive count or 'auto'");
    }
  }
  const AttributedGraph g = flags.Load(manifest);
  RecordConfig(manifest, config);
  manifest.Set("communities_flag", communities);
  manifest.Set("time_load_s", clock.Lap());

  if (automatic) {
    const auto cands = ParseList<int>(candidates, "candidate");
    const Selection sel = ChooseNumCommunities(g, cands, config);
    std::string scores;
    for (const auto& s : sel.scores) {
      if (!scores.empty()) scores += ",";
      char buf[64];
      std::snprintf(buf, sizeof(buf), "%d:%.9g", s.num_communities,
                    s.holdout_loglik);
      scores += buf;
    }
    manifest.Set("candidates", candidates);
    manifest.Set("holdout_scores", scores);
    num_communities = sel.best;
    manifest.Set("time_select_s", clock.Lap());
    std::cerr << "selected C = " << num_communities << "\n";
  }
  manifest.Set("num_communities", num_communities);

  const FitResult fit = Fit(g, num_communities, config);
  manifest.Set("time_fit_s", clock.Lap());
  const double delta =
      config.delta ? *config.delta : MembershipThreshold(g.num_nodes());
  const CommunityCover cover = ThresholdMemberships(fit.F, delta);

  const fs::path community_path = prefix + ".communities";
  const fs::path weights_path = prefix + ".weights";
  const fs::path manifest_path = prefix + ".manifest";
  {
    auto out = OpenForWrite(community_path);
    WriteCommunities(out, cover);
  }
  {
    auto out = OpenForWrite(weights_path);
    WriteWeights(out, fit.W);
  }
  manifest.Set("time_write_s", clock.Lap());
  const ObjectiveValue& last = fit.objective_trace.back();
  manifest.Set("delta", delta);
  manifest.Set("iterations", fit.iterations_run);
  manifest.Set("converged", fit.converged);
  manifest.Set("attribute_likelihood_included", config.alpha > 0.0);
  manifest.Set("objective_scaled_total", last.scaled_total);
  manifest.Set("objective_l_graph", last.l_graph);
  manifest.Set("objective_l_attr", last.l_attr);
  manifest.Set("objective_l1_penalty", last.l1_penalty);
  manifest.Set("detected_communities", static_cast<std::int64_t>(cover.size()));
  manifest.Set("communities_path", community_path.string());
  manifest.Set("weights_path", weights_path.string());
  WriteManifest(manifest, manifest_path);
  std::cerr << "fit " << num_communities << " communities in "
            << fit.iterations_run << " iterations (converged="
            << (fit.converged ? "true" : "false") << "), "
            << cover.size() << " detected\n";
  return 0;
}

int RunSelect(const FitFlags& flags, const std::string& candidates,
              bool sweep) {
  RunManifest unused;
  const AttributedGraph g = flags.Load(unused);
  const auto cands = ParseList<int>(candidates, "candidate");
  if (!sweep) {
    const Selection sel = ChooseNumCommunities(g, cands, flags.Config());
    std::printf("communities\tholdout_loglik\n");
    for (const auto& s : sel.scores) {
      std::printf("%d\t%.9g\n", s.num_communities, s.holdout_loglik);
    }
    std::printf("best\t%d\n", sel.best);
    return 0;
  }
  std::printf("alpha\tlambda\tbest\tholdout_loglik\n");
  for (double alpha : {0.25, 0.5, 0.75}) {
    for (double lambda : {0.1, 1.0}) {
      FitFlags f = flags;
      f.alpha = alpha;
      f.lambda = lambda;
      const Selection sel = ChooseNumCommunities(g, cands, f.Config());
      double best = 0.0;
      for (const auto& s : sel.scores) {
        if (s.num_communities == sel.best) best = s.holdout_loglik;
      }
      std::printf("%g\t%g\t%d\t%.9g\n", alpha, lambda, sel.best, best);
    }
  }
  return 0;
}

int RunEval(const std::string& truth_path, const std::string& detected_path,
            const std::string& metric) {
  const SimilarityKind kind = ParseSimilarityKind(metric);
  const CommunityCover truth = ReadCommunities(truth_path);
  const CommunityCover detected = ReadCommunities(detected_path);
  if (truth.empty()) throw InputError(truth_path + " has no communities");
  if (detected.empty()) throw InputError(detected_path + " has no communities");
  std::printf("%.6f\n", MatchScore(truth, detected, kind));
  return 0;
}

struct PlantedFlags {
  PlantedSpec spec;
  void Register(CLI::App* app, bool require_n) {
    auto* n = app->add_option("--n", spec.n, "number of nodes");
    if (require_n) n->required();
    app->add_option("--c", spec.c, "number of communities");
    app->add_option("--k", spec.k, "number of attributes");
    app->add_option("--membership-prob", spec.membership_prob,
                    "probability of joining each community");
    app->add_option("--strength", spec.strength, "planted membership strength");
    app->add_option("--weight-scale", spec.weight_scale,
                    "planted attribute weight");
    app->add_option("--bias", spec.bias, "attribute intercept");
    app->add_option("--seed", spec.seed, "random seed");
  }
};

void WriteGraphFiles(const AttributedGraph& g, const std::string& prefix,
                     bool with_attrs) {
  {
    auto out = OpenForWrite(prefix + ".edges");
    WriteEdges(out, g);
  }
  if (with_attrs) {
    auto out = OpenForWrite(prefix + ".attrs");
    WriteAttrs(out, g);
  }
}

int Main(int argc, char** argv) {
  CLI::App app{"Overlapping community detection in networks with node attributes"};
  app.require_subcommand(1);

  FitFlags detect_flags;
  std::string communities;
  std::string candidates = "2,4,8,16,32";
  std::string out_prefix;
  auto* detect = app.add_subcommand("detect", "fit the model and write communities");
  detect_flags.Register(detect, true);
  detect->add_option("-c,--communities", communities,
                     "community count, or 'auto' for held-out selection")
      ->required();
  auto* candidates_opt = detect->add_option(
      "--candidates", candidates, "comma-separated candidates for -c auto");
  detect->add_option("-o,--out", out_prefix, "output prefix")->required();

  FitFlags select_flags;
  std::string select_candidates = "2,4,8,16,32";
  bool sweep = false;
  auto* select = app.add_subcommand("select-c", "held-out selection of the community count");
  select_flags.Register(select, false);
  select->add_option("--candidates", select_candidates, "comma-separated candidates");
  select->add_flag("--sweep", sweep, "also sweep alpha x lambda");

  std::string truth_path, detected_path, metric = "f1";
  auto* eval = app.add_subcommand("eval", "score detected communities against ground truth");
  eval->add_option("truth", truth_path, "ground-truth community file")->required();
  eval->add_option("detected", detected_path, "detected community file")->required();
  eval->add_option("--metric", metric, "f1 or jaccard");

  auto* gen = app.add_subcommand("gen", "generate synthetic inputs");
  gen->require_subcommand(1);
  ForestFireParams ff;
  AttrId ff_k = 0;
  double ff_attr_p = 0.5;
  std::string gen_prefix;
  auto* gen_ff = gen->add_subcommand("forest-fire", "Forest Fire graph");
  gen_ff->add_option("--n", ff.n, "number of nodes")->required();
  gen_ff->add_option("--p-forward", ff.p_forward, "forward burning probability");
  gen_ff->add_option("--p-backward", ff.p_backward, "backward burning probability");
  gen_ff->add_option("--k", ff_k, "Bernoulli attributes per node");
  gen_ff->add_option("--attr-p", ff_attr_p, "attribute probability");
  gen_ff->add_option("--seed", ff.seed, "random seed");
  gen_ff->add_option("-o,--out", gen_prefix, "output prefix")->required();
  PlantedFlags planted;
  std::string planted_prefix;
  auto* gen_planted = gen->add_subcommand("planted", "instance sampled from the model");
  planted.Register(gen_planted, true);
  gen_planted->add_option("-o,--out", planted_prefix, "output prefix")->required();

  PlantedFlags robust;
  std::string gammas = "0,0.6", alphas = "0,0.5", robust_metric = "f1";
  int robust_seeds = 20;
  double robust_lambda = 1.0;
  int robust_iters = 1000, robust_threads = 1;
  auto* robustness = app.add_subcommand("robustness", "edge-removal robustness grid");
  robust.Register(robustness, false);
  robustness->add_option("--gammas", gammas, "comma-separated edge-removal fractions");
  robustness->add_option("--alphas", alphas, "comma-separated alpha values");
  robustness->add_option("--seeds", robust_seeds, "number of planted instances");
  robustness->add_option("--lambda", robust_lambda, "l1 strength");
  robustness->add_option("--max-iters", robust_iters, "maximum outer iterations");
  robustness->add_option("--threads", robust_threads, "worker threads");
  robustness->add_option("--metric", robust_metric, "f1 or jaccard");

  std::string sizes = "10000,30000,100000";
  AttrId scaling_k = 10;
  int scaling_c = 10, scaling_iters = 3;
  std::uint64_t scaling_seed = 0;
  int scaling_threads = 1;
  auto* scaling = app.add_subcommand("scaling", "per-iteration time on Forest Fire graphs");
  scaling->add_option("--sizes", sizes, "comma-separated node counts");
  scaling->add_option("--k", scaling_k, "Bernoulli(0.5) attributes");
  scaling->add_option("-c,--communities", scaling_c, "communities");
  scaling->add_option("--iters", scaling_iters, "outer iterations per size");
  scaling->add_option("--seed", scaling_seed, "random seed");
  scaling->add_option("--threads", scaling_threads, "worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }

  if (detect->parsed()) {
    return RunDetect(detect_flags, communities, candidates,
                     candidates_opt->count() > 0, out_prefix);
  }
  if (select->parsed()) return RunSelect(select_flags, select_candidates, sweep);
  if (eval->parsed()) return RunEval(truth_path, detected_path, metric);
  if (gen_ff->parsed()) {
    AttributedGraph g = ForestFire(ff);
    if (ff_k > 0) g = BernoulliAttributes(g, ff_k, ff_attr_p, ff.seed + 1);
    WriteGraphFiles(g, gen_prefix, ff_k > 0);
    return 0;
  }
  if (gen_planted->parsed()) {
    const PlantedInstance inst = MakePlantedInstance(planted.spec);
    WriteGraphFiles(inst.graph, planted_prefix, true);
    auto out = OpenForWrite(planted_prefix + ".truth");
    WriteCommunities(out, inst.truth);
    return 0;
  }
  if (robustness->parsed()) {
    FitConfig config;
    config.lambda = robust_lambda;
    config.max_outer_iters = robust_iters;
    config.num_workers = robust_threads;
    config.Validate();
    const auto cells = RunRobustness(
        robust.spec, ParseList<double>(gammas, "gamma"),
        ParseList<double>(alphas, "alpha"), robust_seeds, config,
        ParseSimilarityKind(robust_metric));
    WriteRobustnessTable(std::cout, cells);
    return 0;
  }
  if (scaling->parsed()) {
    FitConfig config;
    config.num_workers = scaling_threads;
    std::vector<ScalingPoint> points;
    for (int n : ParseList<int>(sizes, "size")) {
      if (n < 1) throw InputError("sizes must be positive");
      points.push_back(RunScalingPoint(n, scaling_k, scaling_c, scaling_iters,
                                       scaling_seed, config));
    }
    WriteScalingTable(std::cout, points);
    return 0;
  }
  return kUsageError;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return Main(argc, argv);
  } catch (const cesna::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
}
