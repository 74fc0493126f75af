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

#ifndef CESNA_HOLDOUT_MASK_H_
#define CESNA_HOLDOUT_MASK_H_

#include <span>
#include <vector>

#include "cesna/graph.h"

namespace cesna {

struct HeldOutPair {
  NodeId u;  // u < v
  NodeId v;
  bool observed;  // A_uv
};

struct HeldOutAttr {
  NodeId u;
  AttrId k;
  bool observed;  // X_uk
};

// Node pairs and node-attribute pairs reserved for evaluation. Every
// likelihood and gradient that takes a mask behaves as if these entries of
// A and X were never observed.
class HoldoutMask {
 public:
  HoldoutMask() = default;
  // Canonicalizes pairs to u < v. Throws InputError on duplicates, self
  // pairs, or ids outside the N x N / N x K ranges.
  HoldoutMask(NodeId num_nodes, AttrId num_attrs,
              std::vector<HeldOutPair> node_pairs,
              std::vector<HeldOutAttr> attr_pairs, double fraction);

  static const HoldoutMask& None();

  bool empty() const { return node_pairs_.empty() && attr_pairs_.empty(); }
  double fraction() const { return fraction_; }
  const std::vector<HeldOutPair>& node_pairs() const { return node_pairs_; }
  const std::vector<HeldOutAttr>& attr_pairs() const { return attr_pairs_; }

  // Sorted partners v of u over held-out node pairs.
  std::span<const NodeId> partners(NodeId u) const;
  // Sorted held-out attributes of u.
  std::span<const AttrId> attrs_of(NodeId u) const;
  // Sorted nodes whose (u, k) pair is held out.
  std::span<const NodeId> nodes_of(AttrId k) const;

  bool IsHeldOutPair(NodeId u, NodeId v) const;
  bool IsHeldOutAttr(NodeId u, AttrId k) const;

 private:
  double fraction_ = 0.0;
  std::vector<HeldOutPair> node_pairs_;
  std::vector<HeldOutAttr> attr_pairs_;
  std::vector<std::size_t> partner_offsets_;
  std::vector<NodeId> partners_;
  std::vector<std::size_t> node_attr_offsets_;
  std::vector<AttrId> node_attrs_;
  std::vector<std::size_t> attr_node_offsets_;
  std::vector<NodeId> attr_nodes_;
};

}  // namespace cesna

#endif  // CESNA_HOLDOUT_MASK_H_
