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

#ifndef CESNA_INITIALIZER_H_
#define CESNA_INITIALIZER_H_

#include <cstdint>
#include <span>
#include <vector>

#include "cesna/affiliation.h"
#include "cesna/graph.h"

namespace cesna {

// Closed neighborhood N(u) + {u} of `center`.
struct SeedSet {
  NodeId center = 0;
  std::vector<NodeId> members;  // sorted
  double conductance = 1.0;
};

// cut(S) / min(vol(S), 2|E| - vol(S)); 1 when the denominator is 0.
// Throws InputError when S is empty or covers every node.
double Conductance(const AttributedGraph& g, std::span<const NodeId> members);

// Closed neighborhoods that beat the closed neighborhood of every neighbor
// of their center, ordered by (conductance, center id). Comparisons between
// equal conductances go to the smaller center id. Neighborhoods with
// conductance 1 (including the whole node set and isolated nodes) never
// qualify. Sorted ascending by conductance, then center.
std::vector<SeedSet> LocallyMinimalNeighborhoods(const AttributedGraph& g);

// Indicator columns for the best min(C, #seeds) seed sets, then random
// nonempty indicator columns (density = mean seed size / N) for the rest.
// Throws InputError for C < 1.
AffiliationMatrix InitAffiliations(const AttributedGraph& g,
                                   int num_communities, std::uint64_t seed);

}  // namespace cesna

#endif  // CESNA_INITIALIZER_H_
