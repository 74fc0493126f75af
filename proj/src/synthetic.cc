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

#include "cesna/synthetic.h"

#include <algorithm>
#include <cmath>
#include <deque>
#include <random>
#include <vector>

#include "cesna/likelihood.h"
#include "cesna/solver.h"
#include "sampling.h"

namespace cesna {
namespace {

// Burns up to `count` unburned nodes of `links`, chosen uniformly.
void Ignite(const std::vector<NodeId>& links, int count, NodeId stamp,
            std::vector<NodeId>& burned_at, std::deque<NodeId>& frontier,
            std::vector<NodeId>& burned, std::mt19937_64& rng) {
  if (count <= 0) return;
  std::vector<NodeId> fresh;
  for (NodeId w : links) {
    if (burned_at[w] != stamp) fresh.push_back(w);
  }
  const std::size_t take = std::min<std::size_t>(count, fresh.size());
  for (std::size_t i = 0; i < take; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, fresh.size() - 1);
    std::swap(fresh[i], fresh[pick(rng)]);
    burned_at[fresh[i]] = stamp;
    frontier.push_back(fresh[i]);
    burned.push_back(fresh[i]);
  }
}

}  // namespace

AttributedGraph ForestFire(const ForestFireParams& params) {
  if (params.n < 1) throw InputError("forest fire needs n >= 1");
  for (double p : {params.p_forward, params.p_backward}) {
    if (!(p >= 0.0 && p < 1.0)) {
      throw InputError("burn probabilities must lie in [0, 1)");
    }
  }
  std::mt19937_64 rng(params.seed);
  std::geometric_distribution<int> forward(1.0 - params.p_forward);
  std::geometric_distribution<int> backward(1.0 - params.p_backward);

  const NodeId n = params.n;
  std::vector<std::vector<NodeId>> out_links(n);
  std::vector<std::vector<NodeId>> in_links(n);
  std::vector<NodeId> burned_at(n, -1);
  std::vector<Edge> edges;
  std::deque<NodeId> frontier;
  std::vector<NodeId> burned;
  for (NodeId v = 1; v < n; ++v) {
    std::uniform_int_distribution<NodeId> pick(0, v - 1);
    const NodeId ambassador = pick(rng);
    burned.assign(1, ambassador);
    burned_at[ambassador] = v;
    frontier.assign(1, ambassador);
    while (!frontier.empty()) {
      const NodeId w = frontier.front();
      frontier.pop_front();
      const int x = forward(rng);
      const int y = backward(rng);
      Ignite(out_links[w], x, v, burned_at, frontier, burned, rng);
      Ignite(in_links[w], y, v, burned_at, frontier, burned, rng);
    }
    for (NodeId w : burned) {
      out_links[v].push_back(w);
      in_links[w].push_back(v);
      edges.emplace_back(v, w);
    }
  }
  return AttributedGraph::Build(n, 0, edges, {});
}

AttributedGraph BernoulliAttributes(const AttributedGraph& g, AttrId k,
                                    double p, std::uint64_t seed) {
  if (k < 0) throw InputError("attribute count must be nonnegative");
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("p must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution draw(p);
  std::vector<AttrPair> attrs;
  for (NodeId u = 0; u < g.num_nodes(); ++u) {
    for (AttrId a = 0; a < k; ++a) {
      if (draw(rng)) attrs.emplace_back(u, a);
    }
  }
  return AttributedGraph::Build(g.num_nodes(), k, g.Edges(), attrs);
}

PlantedInstance MakePlantedInstance(const PlantedSpec& spec) {
  if (spec.n < 1 || spec.c < 1 || spec.k < 0) {
    throw InputError("planted instance needs n, c >= 1 and k >= 0");
  }
  if (!(spec.strength > 0.0)) throw InputError("strength must be positive");
  if (!(spec.membership_prob >= 0.0 && spec.membership_prob <= 1.0)) {
    throw InputError("membership_prob must lie in [0, 1]");
  }
  std::mt19937_64 rng(spec.seed);
  std::bernoulli_distribution join(spec.membership_prob);
  std::uniform_int_distribution<int> community(0, spec.c - 1);

  PlantedInstance out;
  out.true_f = AffiliationMatrix(spec.n, spec.c);
  for (NodeId u = 0; u < spec.n; ++u) {
    bool any = false;
    for (int c = 0; c < spec.c; ++c) {
      if (join(rng)) {
        out.true_f.Set(u, c, spec.strength);
        any = true;
      }
    }
    if (!any) out.true_f.Set(u, community(rng), spec.strength);
  }
  out.true_f.RefreshColumnSums();

  out.true_w = AttributeWeights(spec.k, spec.c);
  for (AttrId a = 0; a < spec.k; ++a) {
    out.true_w.Set(a, community(rng), spec.weight_scale);
    out.true_w.Set(a, spec.c, spec.bias);
  }

  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Edge> edges;
  for (NodeId u = 0; u < spec.n; ++u) {
    for (NodeId v = u + 1; v < spec.n; ++v) {
      const double d = Dot(out.true_f.row(u), out.true_f.row(v));
      if (d <= 0.0) continue;
      if (unit(rng) < -std::expm1(-d)) edges.emplace_back(u, v);
    }
  }
  std::vector<AttrPair> attrs;
  for (NodeId u = 0; u < spec.n; ++u) {
    for (AttrId a = 0; a < spec.k; ++a) {
      if (unit(rng) < AttrProb(out.true_w.row(a), out.true_f.row(u))) {
        attrs.emplace_back(u, a);
      }
    }
  }
  out.graph = AttributedGraph::Build(spec.n, spec.k, edges, attrs);

  if (spec.n >= 2) {
    out.truth = ThresholdMemberships(out.true_f);
  } else {
    out.truth = ThresholdMemberships(out.true_f, spec.strength);
  }
  return out;
}

AttributedGraph RemoveEdges(const AttributedGraph& g, double gamma,
                            std::uint64_t seed) {
  if (!(gamma >= 0.0 && gamma < 1.0)) {
    throw InputError("gamma must lie in [0, 1)");
  }
  const auto edges = g.Edges();
  std::mt19937_64 rng(seed);
  const auto doomed = internal::SampleIndices(
      edges.size(),
      internal::RoundHalfEven(gamma * static_cast<double>(edges.size())), rng);
  std::vector<Edge> kept;
  kept.reserve(edges.size() - doomed.size());
  auto d = doomed.begin();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (d != doomed.end() && *d == static_cast<std::int64_t>(i)) {
      ++d;
      continue;
    }
    kept.push_back(edges[i]);
  }
  const auto attrs = g.AttrPairs();
  return AttributedGraph::Build(g.num_nodes(), g.num_attrs(), kept, attrs);
}

}  // namespace cesna
