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

#ifndef CESNA_AFFILIATION_H_
#define CESNA_AFFILIATION_H_

#include <cstddef>
#include <span>
#include <vector>

#include "cesna/graph.h"

namespace cesna {

// Nonnegative node-by-community membership strengths F (row-major, one row
// per node) together with a cache of the per-community column sums
// S_c = sum_v F_vc. The cache is what makes the non-neighbor part of the
// graph gradient O(deg(u)) instead of O(N).
class AffiliationMatrix {
 public:
  AffiliationMatrix() = default;
  AffiliationMatrix(NodeId num_nodes, int num_communities);

  NodeId num_nodes() const { return num_nodes_; }
  int num_communities() const { return num_communities_; }

  double operator()(NodeId u, int c) const {
    return values_[Index(u, c)];
  }
  std::span<const double> row(NodeId u) const {
    return {values_.data() + Index(u, 0),
            static_cast<std::size_t>(num_communities_)};
  }
  // Raw row access. Writing through it leaves column_sums() stale until
  // RefreshColumnSums().
  std::span<double> mutable_row(NodeId u) {
    return {values_.data() + Index(u, 0),
            static_cast<std::size_t>(num_communities_)};
  }
  std::span<const double> values() const { return values_; }
  std::span<double> mutable_values() { return values_; }

  // Replaces row u and shifts the cached column sums by the row delta.
  void SetRow(NodeId u, std::span<const double> new_row);
  // Sets a single entry without touching the cache.
  void Set(NodeId u, int c, double value) { values_[Index(u, c)] = value; }

  std::span<const double> column_sums() const { return column_sums_; }
  // Exact recomputation of the column-sum cache.
  void RefreshColumnSums();

  friend bool operator==(const AffiliationMatrix&,
                         const AffiliationMatrix&) = default;

 private:
  std::size_t Index(NodeId u, int c) const {
    return static_cast<std::size_t>(u) * num_communities_ + c;
  }

  NodeId num_nodes_ = 0;
  int num_communities_ = 0;
  std::vector<double> values_;
  std::vector<double> column_sums_;
};

// Logistic weights W, one row per attribute with C community coordinates
// followed by the intercept at index C.
class AttributeWeights {
 public:
  AttributeWeights() = default;
  AttributeWeights(AttrId num_attrs, int num_communities);

  AttrId num_attrs() const { return num_attrs_; }
  int num_communities() const { return num_communities_; }
  // Row width, C + 1.
  int width() const { return num_communities_ + 1; }

  double operator()(AttrId k, int c) const { return values_[Index(k, c)]; }
  double bias(AttrId k) const { return values_[Index(k, num_communities_)]; }
  std::span<const double> row(AttrId k) const {
    return {values_.data() + Index(k, 0), static_cast<std::size_t>(width())};
  }
  std::span<double> mutable_row(AttrId k) {
    return {values_.data() + Index(k, 0), static_cast<std::size_t>(width())};
  }
  void Set(AttrId k, int c, double value) { values_[Index(k, c)] = value; }

  bool AllFinite() const;

  friend bool operator==(const AttributeWeights&,
                         const AttributeWeights&) = default;

 private:
  std::size_t Index(AttrId k, int c) const {
    return static_cast<std::size_t>(k) * width() + c;
  }

  AttrId num_attrs_ = 0;
  int num_communities_ = 0;
  std::vector<double> values_;
};

// A set of (possibly overlapping) node sets over the universe 0..N-1.
// Members are kept sorted and unique; empty communities are dropped.
class CommunityCover {
 public:
  CommunityCover() = default;
  // Throws InputError if any member id is outside [0, universe).
  CommunityCover(NodeId universe, std::vector<std::vector<NodeId>> communities);

  NodeId universe() const { return universe_; }
  std::size_t size() const { return communities_.size(); }
  bool empty() const { return communities_.empty(); }
  const std::vector<NodeId>& operator[](std::size_t i) const {
    return communities_[i];
  }
  const std::vector<std::vector<NodeId>>& communities() const {
    return communities_;
  }

  // Descending size, ties lexicographic; the order community files use.
  CommunityCover Canonical() const;

  friend bool operator==(const CommunityCover&,
                         const CommunityCover&) = default;

 private:
  NodeId universe_ = 0;
  std::vector<std::vector<NodeId>> communities_;
};

}  // namespace cesna

#endif  // CESNA_AFFILIATION_H_
