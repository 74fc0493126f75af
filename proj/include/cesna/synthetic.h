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

#ifndef CESNA_SYNTHETIC_H_
#define CESNA_SYNTHETIC_H_

#include <cstdint>

#include "cesna/affiliation.h"
#include "cesna/graph.h"

namespace cesna {

struct ForestFireParams {
  NodeId n = 1000;
  double p_forward = 0.36;
  double p_backward = 0.32;
  std::uint64_t seed = 0;
};

// Forest Fire growth: each new node picks a uniform ambassador, then burns
// outward breadth-first. A burning node ignites Geometric(p_forward)
// (mean p/(1-p)) of its not-yet-burned out-links and Geometric(p_backward)
// of its in-links. The new node links to every burned node. Links are
// stored undirected; the result is connected and has no attributes.
AttributedGraph ForestFire(const ForestFireParams& params);

// Copy of g's edges with K fresh attributes, each X_uk ~ Bernoulli(p).
AttributedGraph BernoulliAttributes(const AttributedGraph& g, AttrId k,
                                    double p, std::uint64_t seed);

struct PlantedSpec {
  NodeId n = 400;
  int c = 4;
  AttrId k = 40;
  // Probability a node joins each community; nodes left with none are
  // placed in one uniformly chosen community.
  double membership_prob = 0.3;
  // F value of every membership.
  double strength = 1.0;
  // Each attribute gets one uniformly chosen community with this weight.
  double weight_scale = 5.0;
  // Intercept of every attribute; non-members see Q = sigmoid(bias).
  double bias = -2.5;
  std::uint64_t seed = 0;
};

struct PlantedInstance {
  AttributedGraph graph;
  CommunityCover truth;
  AffiliationMatrix true_f;
  AttributeWeights true_w;
};

// Runs the generative model forward: A_uv ~ Bernoulli(1 - exp(-F_u . F_v)),
// X_uk ~ Bernoulli(sigmoid(W_k . [F_u, 1])). The truth cover is the
// thresholded planted F.
PlantedInstance MakePlantedInstance(const PlantedSpec& spec);

// Deletes exactly round(gamma * |E|) edges chosen uniformly without
// replacement. Throws InputError unless 0 <= gamma < 1.
AttributedGraph RemoveEdges(const AttributedGraph& g, double gamma,
                            std::uint64_t seed);

}  // namespace cesna

#endif  // CESNA_SYNTHETIC_H_
