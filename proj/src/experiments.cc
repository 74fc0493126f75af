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

#include "cesna/experiments.h"

#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>

namespace cesna {

double ScoreDetection(const CommunityCover& truth,
                      const CommunityCover& detected, SimilarityKind kind) {
  if (detected.empty()) return 0.0;
  return MatchScore(truth, detected, kind);
}

std::vector<RobustnessCell> RunRobustness(const PlantedSpec& spec,
                                          const std::vector<double>& gammas,
                                          const std::vector<double>& alphas,
                                          int num_seeds, const FitConfig& base,
                                          SimilarityKind kind) {
  if (gammas.empty() || alphas.empty() || num_seeds < 1) {
    throw InputError("robustness grid needs gammas, alphas and seeds");
  }
  std::vector<RobustnessCell> cells;
  for (double gamma : gammas) {
    for (double alpha : alphas) cells.push_back({gamma, alpha, 0.0, 0.0, {}});
  }
  for (int s = 0; s < num_seeds; ++s) {
    PlantedSpec instance_spec = spec;
    instance_spec.seed = spec.seed + s;
    const PlantedInstance instance = MakePlantedInstance(instance_spec);
    std::size_t cell = 0;
    for (double gamma : gammas) {
      const AttributedGraph noisy =
          RemoveEdges(instance.graph, gamma, instance_spec.seed);
      for (double alpha : alphas) {
        FitConfig config = base;
        config.alpha = alpha;
        config.rng_seed = instance_spec.seed;
        const FitResult fit = Fit(noisy, spec.c, config);
        cells[cell++].scores.push_back(ScoreDetection(
            instance.truth, ThresholdMemberships(fit.F, config.delta), kind));
      }
    }
  }
  for (auto& cell : cells) {
    const double n = static_cast<double>(cell.scores.size());
    cell.mean = std::accumulate(cell.scores.begin(), cell.scores.end(), 0.0) / n;
    double ss = 0.0;
    for (double x : cell.scores) ss += (x - cell.mean) * (x - cell.mean);
    cell.stddev = cell.scores.size() > 1 ? std::sqrt(ss / (n - 1.0)) : 0.0;
  }
  return cells;
}

void WriteRobustnessTable(std::ostream& out,
                          const std::vector<RobustnessCell>& cells) {
  out << "gamma\talpha\tmean\tstddev\truns\n";
  char buf[160];
  for (const auto& c : cells) {
    std::snprintf(buf, sizeof(buf), "%g\t%g\t%.6f\t%.6f\t%zu\n", c.gamma,
                  c.alpha, c.mean, c.stddev, c.scores.size());
    out << buf;
  }
}

ScalingPoint RunScalingPoint(NodeId n, AttrId k, int num_communities,
                             int iterations, std::uint64_t seed,
                             const FitConfig& base) {
  ForestFireParams params;
  params.n = n;
  params.seed = seed;
  const AttributedGraph g =
      BernoulliAttributes(ForestFire(params), k, 0.5, seed + 1);
  FitConfig config = base;
  config.max_outer_iters = iterations;
  config.rel_improvement_tol = 0.0;
  config.rng_seed = seed;
  const FitResult fit = Fit(g, num_communities, config);

  ScalingPoint point;
  point.n = n;
  point.num_edges = g.num_edges();
  point.work = g.num_edges() + static_cast<std::int64_t>(n) * k;
  point.iterations = fit.iterations_run;
  double total = 0.0;
  for (double s : fit.iteration_seconds) total += s;
  point.seconds_per_iter =
      fit.iterations_run > 0 ? total / fit.iterations_run : 0.0;
  return point;
}

void WriteScalingTable(std::ostream& out,
                       const std::vector<ScalingPoint>& points) {
  out << "n\tedges\twork\tseconds_per_iter\titerations\n";
  char buf[160];
  for (const auto& p : points) {
    std::snprintf(buf, sizeof(buf), "%d\t%lld\t%lld\t%.6f\t%d\n", p.n,
                  static_cast<long long>(p.num_edges),
                  static_cast<long long>(p.work), p.seconds_per_iter,
                  p.iterations);
    out << buf;
  }
}

}  // namespace cesna
