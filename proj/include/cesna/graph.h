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

#ifndef CESNA_GRAPH_H_
#define CESNA_GRAPH_H_

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cesna {

using NodeId = std::int32_t;
using AttrId = std::int32_t;

using Edge = std::pair<NodeId, NodeId>;
// (node, attribute) with X_uk = 1.
using AttrPair = std::pair<NodeId, AttrId>;

// Raised for malformed caller input. index() is the position of the
// offending item (list index or 1-based file line), or -1 when not tied to
// a single item.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what, std::int64_t index = -1)
      : std::invalid_argument(what), index_(index) {}

  std::int64_t index() const { return index_; }

 private:
  std::int64_t index_;
};

struct BuildDiagnostics {
  std::int64_t self_loops_dropped = 0;
  std::int64_t duplicate_edges_dropped = 0;
  std::int64_t duplicate_attrs_dropped = 0;
};

// Undirected simple graph over nodes 0..N-1 with a sparse binary attribute
// matrix over attributes 0..K-1. Only the X_uk = 1 entries are stored; every
// other (node, attribute) pair is an observed zero.
//
// Storage is CSR in both directions for attributes (node -> attrs and
// attr -> nodes) so that per-node and per-attribute passes are both linear.
class AttributedGraph {
 public:
  AttributedGraph() = default;

  // Self-loops and duplicates are dropped and counted in `diagnostics`.
  // Throws InputError (with the offending list index) for ids out of range,
  // and for n == 0.
  static AttributedGraph Build(NodeId n, AttrId k, std::span<const Edge> edges,
                               std::span<const AttrPair> attrs,
                               BuildDiagnostics* diagnostics = nullptr);

  NodeId num_nodes() const { return num_nodes_; }
  AttrId num_attrs() const { return num_attrs_; }
  std::int64_t num_edges() const {
    return static_cast<std::int64_t>(neighbors_.size()) / 2;
  }
  std::int64_t num_attr_pairs() const {
    return static_cast<std::int64_t>(node_attrs_.size());
  }

  std::span<const NodeId> neighbors(NodeId u) const {
    return {neighbors_.data() + adj_offsets_[u],
            neighbors_.data() + adj_offsets_[u + 1]};
  }
  std::int64_t degree(NodeId u) const {
    return adj_offsets_[u + 1] - adj_offsets_[u];
  }
  // Sorted attribute ids k with X_uk = 1.
  std::span<const AttrId> attrs_of(NodeId u) const {
    return {node_attrs_.data() + node_attr_offsets_[u],
            node_attrs_.data() + node_attr_offsets_[u + 1]};
  }
  // Sorted node ids u with X_uk = 1.
  std::span<const NodeId> nodes_with(AttrId k) const {
    return {attr_nodes_.data() + attr_node_offsets_[k],
            attr_nodes_.data() + attr_node_offsets_[k + 1]};
  }

  bool HasEdge(NodeId u, NodeId v) const;
  bool HasAttr(NodeId u, AttrId k) const;

  // Edges as (u, v) with u < v, lexicographically sorted.
  std::vector<Edge> Edges() const;
  // Attribute pairs sorted by node then attribute.
  std::vector<AttrPair> AttrPairs() const;

  friend bool operator==(const AttributedGraph&,
                         const AttributedGraph&) = default;

 private:
  NodeId num_nodes_ = 0;
  AttrId num_attrs_ = 0;
  std::vector<std::int64_t> adj_offsets_{0};
  std::vector<NodeId> neighbors_;
  std::vector<std::int64_t> node_attr_offsets_{0};
  std::vector<AttrId> node_attrs_;
  std::vector<std::int64_t> attr_node_offsets_{0};
  std::vector<NodeId> attr_nodes_;
};

}  // namespace cesna

#endif  // CESNA_GRAPH_H_
