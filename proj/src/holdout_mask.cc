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

#include "cesna/holdout_mask.h"

#include <algorithm>
#include <string>
#include <utility>

namespace cesna {
namespace {

template <typename Src, typename Dst>
void Index(std::size_t num_sources, std::vector<std::pair<Src, Dst>> pairs,
           std::vector<std::size_t>& offsets, std::vector<Dst>& targets) {
  std::sort(pairs.begin(), pairs.end());
  offsets.assign(num_sources + 1, 0);
  for (const auto& p : pairs) ++offsets[p.first + 1];
  for (std::size_t i = 0; i < num_sources; ++i) offsets[i + 1] += offsets[i];
  targets.clear();
  for (const auto& p : pairs) targets.push_back(p.second);
}

template <typename T>
std::span<const T> Slice(const std::vector<std::size_t>& offsets,
                         const std::vector<T>& targets, std::int64_t i) {
  if (i < 0 || static_cast<std::size_t>(i) + 1 >= offsets.size()) return {};
  return {targets.data() + offsets[i], targets.data() + offsets[i + 1]};
}

}  // namespace

HoldoutMask::HoldoutMask(NodeId num_nodes, AttrId num_attrs,
                         std::vector<HeldOutPair> node_pairs,
                         std::vector<HeldOutAttr> attr_pairs, double fraction)
    : fraction_(fraction),
      node_pairs_(std::move(node_pairs)),
      attr_pairs_(std::move(attr_pairs)) {
  std::vector<std::pair<NodeId, NodeId>> directed;
  directed.reserve(2 * node_pairs_.size());
  for (auto& p : node_pairs_) {
    if (p.u > p.v) std::swap(p.u, p.v);
    if (p.u == p.v || p.u < 0 || p.v >= num_nodes) {
      throw InputError("held-out node pair (" + std::to_string(p.u) + ", " +
                       std::to_string(p.v) + ") is invalid");
    }
    directed.emplace_back(p.u, p.v);
    directed.emplace_back(p.v, p.u);
  }
  std::vector<std::pair<NodeId, AttrId>> by_node;
  std::vector<std::pair<AttrId, NodeId>> by_attr;
  for (const auto& a : attr_pairs_) {
    if (a.u < 0 || a.u >= num_nodes || a.k < 0 || a.k >= num_attrs) {
      throw InputError("held-out attribute pair (" + std::to_string(a.u) +
                       ", " + std::to_string(a.k) + ") is invalid");
    }
    by_node.emplace_back(a.u, a.k);
    by_attr.emplace_back(a.k, a.u);
  }
  Index(num_nodes, directed, partner_offsets_, partners_);
  Index(num_nodes, by_node, node_attr_offsets_, node_attrs_);
  Index(num_attrs, by_attr, attr_node_offsets_, attr_nodes_);
  for (NodeId u = 0; u < num_nodes; ++u) {
    auto p = partners(u);
    auto a = attrs_of(u);
    if (std::adjacent_find(p.begin(), p.end()) != p.end() ||
        std::adjacent_find(a.begin(), a.end()) != a.end()) {
      throw InputError("held-out mask contains a duplicate pair at node " +
                       std::to_string(u));
    }
  }
}

const HoldoutMask& HoldoutMask::None() {
  static const HoldoutMask kNone;
  return kNone;
}

std::span<const NodeId> HoldoutMask::partners(NodeId u) const {
  return Slice(partner_offsets_, partners_, u);
}

std::span<const AttrId> HoldoutMask::attrs_of(NodeId u) const {
  return Slice(node_attr_offsets_, node_attrs_, u);
}

std::span<const NodeId> HoldoutMask::nodes_of(AttrId k) const {
  return Slice(attr_node_offsets_, attr_nodes_, k);
}

bool HoldoutMask::IsHeldOutPair(NodeId u, NodeId v) const {
  auto p = partners(u);
  return std::binary_search(p.begin(), p.end(), v);
}

bool HoldoutMask::IsHeldOutAttr(NodeId u, AttrId k) const {
  auto a = attrs_of(u);
  return std::binary_search(a.begin(), a.end(), k);
}

}  // namespace cesna
