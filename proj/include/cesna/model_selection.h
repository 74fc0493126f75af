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

#ifndef CESNA_MODEL_SELECTION_H_
#define CESNA_MODEL_SELECTION_H_

#include <cstdint>
#include <span>
#include <vector>

#include "cesna/affiliation.h"
#include "cesna/config.h"
#include "cesna/graph.h"
#include "cesna/holdout_mask.h"

namespace cesna {

// Above this node count, holding out a fraction of all N(N-1)/2 pairs is
// replaced by fraction * |E| edges plus as many uniformly drawn non-edges.
inline constexpr NodeId kExactPairSamplingMaxNodes = 2000;

// Held-out counts are round(fraction * population), halves to even.
// Throws InputError unless 0 < fraction < 1.
HoldoutMask MakeHoldout(const AttributedGraph& g, double fraction,
                        std::uint64_t seed);

// Scaled Bernoulli log-likelihood of the held-out entries:
//   (1 - alpha) * sum_pairs log P(A_uv) + alpha * sum_attrs log P(X_uk).
// Observed values come from the mask. Always <= 0.
double HoldoutLogLik(const AffiliationMatrix& f, const AttributeWeights& w,
                     const HoldoutMask& mask, const FitConfig& config);

struct CandidateScore {
  int num_communities = 0;
  double holdout_loglik = 0.0;
};

struct Selection {
  int best = 0;
  std::vector<CandidateScore> scores;  // in candidate order
};

// Fits every candidate C on the same held-out mask (seeded by
// config.rng_seed) and returns the candidate with the highest held-out
// likelihood; ties go to the smaller C. Throws InputError for an empty
// candidate list or a candidate < 1.
Selection ChooseNumCommunities(const AttributedGraph& g,
                               std::span<const int> candidates,
                               const FitConfig& config,
                               double fraction = 0.1);

}  // namespace cesna

#endif  // CESNA_MODEL_SELECTION_H_
