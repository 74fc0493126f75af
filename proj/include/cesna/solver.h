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

#ifndef CESNA_SOLVER_H_
#define CESNA_SOLVER_H_

#include <optional>
#include <utility>
#include <vector>

#include "cesna/affiliation.h"
#include "cesna/config.h"
#include "cesna/graph.h"
#include "cesna/holdout_mask.h"
#include "cesna/likelihood.h"

namespace cesna {

struct FitResult {
  AffiliationMatrix F;
  AttributeWeights W;
  // Entry 0 is the objective at initialization; entry i the objective after
  // outer iteration i.
  std::vector<ObjectiveValue> objective_trace;
  int iterations_run = 0;
  bool converged = false;
  // Wall time of each outer iteration, objective evaluation included.
  std::vector<double> iteration_seconds;
};

// One projected backtracking line-search step on the node-local objective of
// u. On acceptance the row is replaced (entries kept in [0, max_f]) and the
// column-sum cache shifted by the row delta; otherwise F is unchanged.
// Returns whether a step was taken.
bool UpdateNode(NodeId u, const AttributedGraph& g, AffiliationMatrix& f,
                const AttributeWeights& w, const FitConfig& config,
                const HoldoutMask& mask = HoldoutMask::None());

// One backtracking step for attribute k's weights on
//   alpha * sum_u log P(X_uk | F, W_k) - lambda * |W_k|_1
// along the gradient minus lambda * sign(W_kc) (sign(0) = 0, intercept not
// penalized). Returns whether a step was taken.
bool UpdateAttrWeights(AttrId k, const AttributedGraph& g,
                       const AffiliationMatrix& f, AttributeWeights& w,
                       const FitConfig& config,
                       const HoldoutMask& mask = HoldoutMask::None());

// Block coordinate ascent from the locally-minimal-neighborhood
// initialization with W = 0. Held-out pairs are invisible to every stage,
// initialization included. Throws InputError for C < 1 or a bad config.
FitResult Fit(const AttributedGraph& g, int num_communities,
              const FitConfig& config,
              const HoldoutMask& mask = HoldoutMask::None());

// Same loop from a caller-provided F (W starts at zero).
FitResult FitFrom(const AttributedGraph& g, AffiliationMatrix init,
                  const FitConfig& config,
                  const HoldoutMask& mask = HoldoutMask::None());

// G with held-out edges and held-out attribute ones removed.
AttributedGraph TrainingGraph(const AttributedGraph& g,
                              const HoldoutMask& mask);

// sqrt(-log(1 - 1/N)), rounded up so that two members at exactly the
// threshold still connect with probability >= 1/N. Throws for N < 2.
double MembershipThreshold(NodeId num_nodes);

// Community c = { u : F_uc >= delta }, dropping empty and repeated sets.
// `delta` defaults to MembershipThreshold(N).
CommunityCover ThresholdMemberships(const AffiliationMatrix& f,
                                    std::optional<double> delta = std::nullopt);

// Attributes by descending l2 norm of their community weights (intercept
// excluded); equal norms keep ascending attribute order.
std::vector<std::pair<AttrId, double>> RankAttributes(
    const AttributeWeights& w);

}  // namespace cesna

#endif  // CESNA_SOLVER_H_
