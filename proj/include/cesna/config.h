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

#ifndef CESNA_CONFIG_H_
#define CESNA_CONFIG_H_

#include <cstdint>
#include <optional>

namespace cesna {

struct LineSearchConfig {
  double init_step = 1.0;
  double shrink_factor = 0.3;
  double armijo_const = 1e-4;
  int max_trials = 16;
  // Membership search directions are the gradient with each component
  // clipped to [-max_grad_component, max_grad_component]. The edge term's
  // derivative near the dot-product floor is ~1/min_dot_guard, which no
  // reachable step length could otherwise follow. <= 0 disables clipping.
  double max_grad_component = 10.0;
};

// Hyperparameters and numerical guards for fitting.
struct FitConfig {
  // Objective is (1 - alpha) * L_G + alpha * L_X - lambda * |W|_1.
  double alpha = 0.5;
  double lambda = 1.0;
  int max_outer_iters = 1000;
  // Stop once an outer iteration improves the objective by less than this
  // fraction of its magnitude.
  double rel_improvement_tol = 1e-5;
  LineSearchConfig line_search;
  // Floor on F_u . F_v inside log(1 - exp(-x)) for edges.
  double min_dot_guard = 1e-10;
  double max_f = 1000.0;
  std::uint64_t rng_seed = 0;
  int num_workers = 1;
  // Overrides the default membership threshold sqrt(-log(1 - 1/N)).
  std::optional<double> delta;

  // Throws InputError describing the first violated constraint.
  void Validate() const;
};

}  // namespace cesna

#endif  // CESNA_CONFIG_H_
