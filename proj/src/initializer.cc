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

#include "cesna/initializer.h"

#include <algorithm>
#include <random>
#include <utility>

namespace cesna {
namespace {

// Conductance of a set marked in `in_set`. Returns 1 for a zero denominator.
double MarkedConductance(const AttributedGraph& g,
                         std::span<const NodeId> members,
                         const std::vector<char>& in_set) {
  std::int64_t vol = 0;
  std::int64_t cut = 0;
  for (NodeId v : members) {
    vol += g.degree(v);
    for (NodeId w : g.neighbors(v)) {
      if (!in_set[w]) ++cut;
    }
  }
  const std::int64_t denom = std::min(vol, 2 * g.num_edges() - vol);
  if (denom <= 0) return 1.0;
  return static_cast<double>(cut) / static_cast<double>(denom);
}

std::vector<NodeId> ClosedNeighborhood(const AttributedGraph& g, NodeId u) {
  auto nbrs = g.neighbors(u);
  std::vector<NodeId> members(nbrs.begin(), nbrs.end());
  members.insert(std::upper_bound(members.begin(), members.end(), u), u);
  return members;
}

}  // namespace

double Conductance(const AttributedGraph& g, std::span<const NodeId> members) {
  std::vector<NodeId> set(members.begin(), members.end());
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  if (set.empty()) throw InputError("conductance of an empty set");
  if (set.front() < 0 || set.back() >= g.num_nodes()) {
    throw InputError("conductance set has a node id out of range");
  }
  if (static_cast<NodeId>(set.size()) == g.num_nodes()) {
    throw InputError("conductance of the whole node set");
  }
  std::vector<char> in_set(g.num_nodes(), 0);
  for (NodeId v : set) in_set[v] = 1;
  return MarkedConductance(g, set, in_set);
}

std::vector<SeedSet> LocallyMinimalNeighborhoods(const AttributedGraph& g) {
  const NodeId n = g.num_nodes();
  std::vector<double> cond(n, 1.0);
  std::vector<char> in_set(n, 0);
  for (NodeId u = 0; u < n; ++u) {
    if (g.degree(u) == 0) continue;
    auto members = ClosedNeighborhood(g, u);
    for (NodeId v : members) in_set[v] = 1;
    cond[u] = MarkedConductance(g, members, in_set);
    for (NodeId v : members) in_set[v] = 0;
  }

  std::vector<SeedSet> seeds;
  for (NodeId u = 0; u < n; ++u) {
    if (g.degree(u) == 0 || cond[u] >= 1.0) continue;
    const auto key = std::make_pair(cond[u], u);
    bool minimal = true;
    for (NodeId v : g.neighbors(u)) {
      if (!(key < std::make_pair(cond[v], v))) {
        minimal = false;
        break;
      }
    }
    if (minimal) seeds.push_back({u, ClosedNeighborhood(g, u), cond[u]});
  }
  std::sort(seeds.begin(), seeds.end(), [](const SeedSet& a, const SeedSet& b) {
    return std::make_pair(a.conductance, a.center) <
           std::make_pair(b.conductance, b.center);
  });
  return seeds;
}

AffiliationMatrix InitAffiliations(const AttributedGraph& g,
                                   int num_communities, std::uint64_t seed) {
  if (num_communities < 1) throw InputError("need at least one community");
  const NodeId n = g.num_nodes();
  AffiliationMatrix f(n, num_communities);
  auto seeds = LocallyMinimalNeighborhoods(g);
  const int seeded =
      std::min<int>(num_communities, static_cast<int>(seeds.size()));
  for (int c = 0; c < seeded; ++c) {
    for (NodeId v : seeds[c].members) f.Set(v, c, 1.0);
  }

  if (seeded < num_communities) {
    double mean_size = 0.0;
    if (!seeds.empty()) {
      for (const auto& s : seeds) mean_size += s.members.size();
      mean_size /= seeds.size();
    } else {
      mean_size = 1.0 + 2.0 * g.num_edges() / n;
    }
    const double p = std::clamp(mean_size / n, 1.0 / n, 1.0);
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution join(p);
    for (int c = seeded; c < num_communities; ++c) {
      bool any = false;
      while (!any) {
        for (NodeId v = 0; v < n; ++v) {
          const bool in = join(rng);
          f.Set(v, c, in ? 1.0 : 0.0);
          any = any || in;
        }
      }
    }
  }
  f.RefreshColumnSums();
  return f;
}

}  // namespace cesna
