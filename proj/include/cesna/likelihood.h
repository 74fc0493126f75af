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

#ifndef CESNA_LIKELIHOOD_H_
#define CESNA_LIKELIHOOD_H_

#include <span>
#include <vector>

#include "cesna/affiliation.h"
#include "cesna/config.h"
#include "cesna/graph.h"
#include "cesna/holdout_mask.h"

namespace cesna {

// Probabilities below are clamped to [kProbClamp, 1 - kProbClamp] before
// any logarithm of an attribute likelihood.
inline constexpr double kProbClamp = 1e-12;

struct ObjectiveValue {
  double l_graph = 0.0;
  double l_attr = 0.0;
  // lambda * |W|_1 over community coordinates (intercepts excluded).
  double l1_penalty = 0.0;
  // (1 - alpha) * l_graph + alpha * l_attr - l1_penalty.
  double scaled_total = 0.0;
};

double Dot(std::span<const double> a, std::span<const double> b);

// P_uv = 1 - exp(-F_u . F_v). Throws InputError on a length mismatch.
double EdgeProb(std::span<const double> f_u, std::span<const double> f_v);
// The same with the dot product floored at `min_dot_guard`, as used for
// edges inside the likelihood.
double GuardedEdgeProb(std::span<const double> f_u,
                       std::span<const double> f_v, double min_dot_guard);

// Q_uk = sigmoid(sum_c W_kc F_uc + W_k,bias). `w_k` carries the intercept in
// its last slot, so w_k.size() == f_u.size() + 1.
double AttrProb(std::span<const double> w_k, std::span<const double> f_u);

// log(1 - exp(-max(dot, guard))), the log-probability of an observed edge.
double EdgeLogProb(double dot, double min_dot_guard);
// Bernoulli log-likelihood of a binary observation under q, after clamping.
double BernoulliLogLik(bool observed, double q);

// L_G over unordered pairs, excluding held-out pairs. The non-edge sum is
// obtained from F.column_sums(), which must be fresh.
double LogLikGraph(const AttributedGraph& g, const AffiliationMatrix& f,
                   const HoldoutMask& mask = HoldoutMask::None(),
                   double min_dot_guard = 1e-10);

// L_X over all (u, k), excluding held-out pairs.
double LogLikAttr(const AttributedGraph& g, const AffiliationMatrix& f,
                  const AttributeWeights& w,
                  const HoldoutMask& mask = HoldoutMask::None());

// d/dF_u of (1 - alpha) L_G + alpha L_X. Length C.
std::vector<double> GradNode(NodeId u, const AttributedGraph& g,
                             const AffiliationMatrix& f,
                             const AttributeWeights& w, const FitConfig& config,
                             const HoldoutMask& mask = HoldoutMask::None());

// d/dW_k of sum_u log P(X_uk | F, W_k), unscaled and without the l1 term.
// Length C + 1, intercept last.
std::vector<double> GradAttrWeights(AttrId k, const AttributedGraph& g,
                                    const AffiliationMatrix& f,
                                    const AttributeWeights& w,
                                    const HoldoutMask& mask = HoldoutMask::None());

ObjectiveValue Objective(const AttributedGraph& g, const AffiliationMatrix& f,
                         const AttributeWeights& w, const FitConfig& config,
                         const HoldoutMask& mask = HoldoutMask::None());

// The part of the scaled objective that depends on F_u, with every other row
// of F and all of W held fixed:
//
//   (1 - alpha) * [sum_{v in N(u)} log(1 - exp(-x.F_v)) - x . sum_{v not in N(u)} F_v]
//     + alpha * sum_k log P(X_uk | x, W_k)
//
// Construction gathers the neighbor rows and the non-neighbor column sums
// once (O(deg(u) C)); each evaluation is then O((deg(u) + K) C).
//
// With `concurrent` set, rows of other nodes are read with relaxed atomic
// loads, so other threads may be writing them.
class NodeObjective {
 public:
  NodeObjective(NodeId u, const AttributedGraph& g, const AffiliationMatrix& f,
                const AttributeWeights& w, const FitConfig& config,
                const HoldoutMask& mask = HoldoutMask::None(),
                bool concurrent = false);

  double Value(std::span<const double> x) const;
  void Gradient(std::span<const double> x, std::span<double> out) const;

  int num_communities() const { return num_communities_; }

 private:
  int num_communities_;
  double graph_scale_;
  double attr_scale_;
  double guard_;
  const AttributeWeights* weights_;
  std::vector<double> neighbor_rows_;
  std::vector<double> non_neighbor_sum_;
  std::vector<AttrId> attrs_;
  std::vector<char> observed_;
};

}  // namespace cesna

#endif  // CESNA_LIKELIHOOD_H_
