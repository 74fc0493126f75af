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

#ifndef CESNA_EXPERIMENTS_H_
#define CESNA_EXPERIMENTS_H_

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "cesna/config.h"
#include "cesna/evaluation.h"
#include "cesna/solver.h"
#include "cesna/synthetic.h"

namespace cesna {

// Scores a fitted cover against the truth; an empty detection scores 0.
double ScoreDetection(const CommunityCover& truth,
                      const CommunityCover& detected, SimilarityKind kind);

struct RobustnessCell {
  double gamma = 0.0;
  double alpha = 0.0;
  double mean = 0.0;
  double stddev = 0.0;  // sample standard deviation, 0 for a single run
  std::vector<double> scores;  // one per seed, in seed order
};

// Edge-removal robustness grid. For each of `num_seeds` planted instances
// (spec.seed + s), removes a fraction gamma of edges, fits with the true C at
// every alpha, and scores against the planted truth. Cells are ordered
// gamma-major.
std::vector<RobustnessCell> RunRobustness(const PlantedSpec& spec,
                                          const std::vector<double>& gammas,
                                          const std::vector<double>& alphas,
                                          int num_seeds, const FitConfig& base,
                                          SimilarityKind kind);

void WriteRobustnessTable(std::ostream& out,
                          const std::vector<RobustnessCell>& cells);

struct ScalingPoint {
  NodeId n = 0;
  std::int64_t num_edges = 0;
  // |E| + N * K.
  std::int64_t work = 0;
  double seconds_per_iter = 0.0;
  int iterations = 0;
};

// Forest Fire graph with K Bernoulli(0.5) attributes, fitted for exactly
// `iterations` outer iterations with C communities. Reports mean wall time
// per outer iteration.
ScalingPoint RunScalingPoint(NodeId n, AttrId k, int num_communities,
                             int iterations, std::uint64_t seed,
                             const FitConfig& base);

void WriteScalingTable(std::ostream& out,
                       const std::vector<ScalingPoint>& points);

}  // namespace cesna

#endif  // CESNA_EXPERIMENTS_H_
