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

#include "cesna/affiliation.h"

#include <algorithm>
#include <cmath>
#include <string>

namespace cesna {

AffiliationMatrix::AffiliationMatrix(NodeId num_nodes, int num_communities)
    : num_nodes_(num_nodes),
      num_communities_(num_communities),
      values_(static_cast<std::size_t>(num_nodes) * num_communities, 0.0),
      column_sums_(num_communities, 0.0) {}

void AffiliationMatrix::SetRow(NodeId u, std::span<const double> new_row) {
  auto r = mutable_row(u);
  for (int c = 0; c < num_communities_; ++c) {
    column_sums_[c] += new_row[c] - r[c];
    r[c] = new_row[c];
  }
}

void AffiliationMatrix::RefreshColumnSums() {
  std::fill(column_sums_.begin(), column_sums_.end(), 0.0);
  for (NodeId u = 0; u < num_nodes_; ++u) {
    auto r = row(u);
    for (int c = 0; c < num_communities_; ++c) column_sums_[c] += r[c];
  }
}

AttributeWeights::AttributeWeights(AttrId num_attrs, int num_communities)
    : num_attrs_(num_attrs),
      num_communities_(num_communities),
      values_(static_cast<std::size_t>(num_attrs) * (num_communities + 1),
              0.0) {}

bool AttributeWeights::AllFinite() const {
  return std::all_of(values_.begin(), values_.end(),
                     [](double w) { return std::isfinite(w); });
}

CommunityCover::CommunityCover(NodeId universe,
                               std::vector<std::vector<NodeId>> communities)
    : universe_(universe) {
  for (auto& members : communities) {
    if (members.empty()) continue;
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (members.front() < 0 || members.back() >= universe) {
      throw InputError("community member outside [0, " +
                       std::to_string(universe) + ")");
    }
    communities_.push_back(std::move(members));
  }
}

CommunityCover CommunityCover::Canonical() const {
  CommunityCover out = *this;
  std::sort(out.communities_.begin(), out.communities_.end(),
            [](const auto& a, const auto& b) {
              if (a.size() != b.size()) return a.size() > b.size();
              return a < b;
            });
  return out;
}

}  // namespace cesna
