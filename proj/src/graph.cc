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

#include "cesna/graph.h"

#include <algorithm>
#include <string>

namespace cesna {
namespace {

// Builds CSR offsets/targets from (source, target) pairs that are already
// sorted and unique.
template <typename Src, typename Dst>
void FillCsr(std::int64_t num_sources,
             const std::vector<std::pair<Src, Dst>>& pairs,
             std::vector<std::int64_t>& offsets, std::vector<Dst>& targets) {
  offsets.assign(num_sources + 1, 0);
  for (const auto& [s, t] : pairs) ++offsets[s + 1];
  for (std::int64_t i = 0; i < num_sources; ++i) offsets[i + 1] += offsets[i];
  targets.resize(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) targets[i] = pairs[i].second;
}

}  // namespace

AttributedGraph AttributedGraph::Build(NodeId n, AttrId k,
                                       std::span<const Edge> edges,
                                       std::span<const AttrPair> attrs,
                                       BuildDiagnostics* diagnostics) {
  if (n <= 0) throw InputError("graph must have at least one node");
  if (k < 0) throw InputError("attribute count must be nonnegative");

  BuildDiagnostics diag;
  std::vector<Edge> directed;
  directed.reserve(2 * edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [u, v] = edges[i];
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw InputError("edge " + std::to_string(i) + " (" + std::to_string(u) +
                           ", " + std::to_string(v) + ") has a node id outside [0, " +
                           std::to_string(n) + ")",
                       static_cast<std::int64_t>(i));
    }
    if (u == v) {
      ++diag.self_loops_dropped;
      continue;
    }
    directed.emplace_back(u, v);
    directed.emplace_back(v, u);
  }
  std::sort(directed.begin(), directed.end());
  auto last = std::unique(directed.begin(), directed.end());
  diag.duplicate_edges_dropped = (directed.end() - last) / 2;
  directed.erase(last, directed.end());

  std::vector<AttrPair> by_node(attrs.begin(), attrs.end());
  for (std::size_t i = 0; i < by_node.size(); ++i) {
    auto [u, a] = by_node[i];
    if (u < 0 || u >= n || a < 0 || a >= k) {
      throw InputError("attribute pair " + std::to_string(i) + " (" +
                           std::to_string(u) + ", " + std::to_string(a) +
                           ") is outside the " + std::to_string(n) + " x " +
                           std::to_string(k) + " attribute matrix",
                       static_cast<std::int64_t>(i));
    }
  }
  std::sort(by_node.begin(), by_node.end());
  auto attr_last = std::unique(by_node.begin(), by_node.end());
  diag.duplicate_attrs_dropped = by_node.end() - attr_last;
  by_node.erase(attr_last, by_node.end());

  std::vector<std::pair<AttrId, NodeId>> by_attr;
  by_attr.reserve(by_node.size());
  for (auto [u, a] : by_node) by_attr.emplace_back(a, u);
  std::sort(by_attr.begin(), by_attr.end());

  AttributedGraph g;
  g.num_nodes_ = n;
  g.num_attrs_ = k;
  FillCsr(n, directed, g.adj_offsets_, g.neighbors_);
  FillCsr(n, by_node, g.node_attr_offsets_, g.node_attrs_);
  FillCsr(k, by_attr, g.attr_node_offsets_, g.attr_nodes_);
  if (diagnostics != nullptr) *diagnostics = diag;
  return g;
}

bool AttributedGraph::HasEdge(NodeId u, NodeId v) const {
  if (degree(u) > degree(v)) std::swap(u, v);
  auto nbrs = neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

bool AttributedGraph::HasAttr(NodeId u, AttrId k) const {
  auto a = attrs_of(u);
  return std::binary_search(a.begin(), a.end(), k);
}

std::vector<Edge> AttributedGraph::Edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (NodeId u = 0; u < num_nodes_; ++u) {
    for (NodeId v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<AttrPair> AttributedGraph::AttrPairs() const {
  std::vector<AttrPair> out;
  out.reserve(node_attrs_.size());
  for (NodeId u = 0; u < num_nodes_; ++u) {
    for (AttrId k : attrs_of(u)) out.emplace_back(u, k);
  }
  return out;
}

}  // namespace cesna
