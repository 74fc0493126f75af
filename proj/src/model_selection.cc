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

#include "cesna/model_selection.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "cesna/likelihood.h"
#include "cesna/solver.h"
#include "sampling.h"

namespace cesna {
namespace {

using internal::RoundHalfEven;
using internal::SampleIndices;

std::vector<HeldOutPair> AllPairSample(const AttributedGraph& g,
                                       double fraction, std::mt19937_64& rng) {
  const std::int64_t n = g.num_nodes();
  const std::int64_t population = n * (n - 1) / 2;
  const auto picks =
      SampleIndices(population, RoundHalfEven(fraction * population), rng);
  std::vector<HeldOutPair> pairs;
  pairs.reserve(picks.size());
  // Row u of the upper triangle covers indices [start, start + n - 1 - u).
  std::int64_t start = 0;
  NodeId u = 0;
  for (std::int64_t idx : picks) {
    while (idx >= start + (n - 1 - u)) {
      start += n - 1 - u;
      ++u;
    }
    const auto v = static_cast<NodeId>(u + 1 + (idx - start));
    pairs.push_back({u, v, g.HasEdge(u, v)});
  }
  return pairs;
}

std::vector<HeldOutPair> BalancedPairSample(const AttributedGraph& g,
                                            double fraction,
                                            std::mt19937_64& rng) {
  const auto edges = g.Edges();
  const std::int64_t count =
      RoundHalfEven(fraction * static_cast<double>(edges.size()));
  std::vector<HeldOutPair> pairs;
  for (std::int64_t idx : SampleIndices(edges.size(), count, rng)) {
    pairs.push_back({edges[idx].first, edges[idx].second, true});
  }
  std::uniform_int_distribution<NodeId> node(0, g.num_nodes() - 1);
  std::set<std::pair<NodeId, NodeId>> drawn;
  while (static_cast<std::int64_t>(drawn.size()) < count) {
    NodeId u = node(rng);
    NodeId v = node(rng);
    if (u == v || g.HasEdge(u, v)) continue;
    if (u > v) std::swap(u, v);
    if (drawn.emplace(u, v).second) pairs.push_back({u, v, false});
  }
  return pairs;
}

}  // namespace

HoldoutMask MakeHoldout(const AttributedGraph& g, double fraction,
                        std::uint64_t seed) {
  if (!(fraction > 0.0 && fraction < 1.0)) {
    throw InputError("holdout fraction must lie in (0, 1)");
  }
  std::mt19937_64 rng(seed);
  auto pairs = g.num_nodes() <= kExactPairSamplingMaxNodes
                   ? AllPairSample(g, fraction, rng)
                   : BalancedPairSample(g, fraction, rng);

  const std::int64_t k = g.num_attrs();
  const std::int64_t population = static_cast<std::int64_t>(g.num_nodes()) * k;
  std::vector<HeldOutAttr> attrs;
  if (population > 0) {
    for (std::int64_t idx : SampleIndices(
             population, RoundHalfEven(fraction * population), rng)) {
      const auto u = static_cast<NodeId>(idx / k);
      const auto a = static_cast<AttrId>(idx % k);
      attrs.push_back({u, a, g.HasAttr(u, a)});
    }
  }
  return HoldoutMask(g.num_nodes(), g.num_attrs(), std::move(pairs),
                     std::move(attrs), fraction);
}

double HoldoutLogLik(const AffiliationMatrix& f, const AttributeWeights& w,
                     const HoldoutMask& mask, const FitConfig& config) {
  double graph = 0.0;
  for (const auto& p : mask.node_pairs()) {
    const double d = Dot(f.row(p.u), f.row(p.v));
    graph += p.observed ? EdgeLogProb(d, config.min_dot_guard) : -d;
  }
  double attr = 0.0;
  for (const auto& a : mask.attr_pairs()) {
    attr += BernoulliLogLik(a.observed, AttrProb(w.row(a.k), f.row(a.u)));
  }
  return (1.0 - config.alpha) * graph + config.alpha * attr;
}

Selection ChooseNumCommunities(const AttributedGraph& g,
                               std::span<const int> candidates,
                               const FitConfig& config, double fraction) {
  if (candidates.empty()) throw InputError("no candidate community counts");
  for (int c : candidates) {
    if (c < 1) throw InputError("candidate community counts must be >= 1");
  }
  const HoldoutMask mask = MakeHoldout(g, fraction, config.rng_seed);
  Selection out;
  for (int c : candidates) {
    const FitResult fit = Fit(g, c, config, mask);
    out.scores.push_back({c, HoldoutLogLik(fit.F, fit.W, mask, config)});
  }
  const CandidateScore* best = &out.scores.front();
  for (const auto& s : out.scores) {
    if (s.holdout_loglik > best->holdout_loglik ||
        (s.holdout_loglik == best->holdout_loglik &&
         s.num_communities < best->num_communities)) {
      best = &s;
    }
  }
  out.best = best->num_communities;
  return out;
}

}  // namespace cesna
