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

#include "cesna/evaluation.h"

#include <algorithm>
#include <string>
#include <vector>

namespace cesna {
namespace {

std::span<const NodeId> Sorted(std::span<const NodeId> s,
                               std::vector<NodeId>& storage) {
  if (std::is_sorted(s.begin(), s.end()) &&
      std::adjacent_find(s.begin(), s.end()) == s.end()) {
    return s;
  }
  storage.assign(s.begin(), s.end());
  std::sort(storage.begin(), storage.end());
  storage.erase(std::unique(storage.begin(), storage.end()), storage.end());
  return storage;
}

}  // namespace

SimilarityKind ParseSimilarityKind(std::string_view name) {
  if (name == "f1") return SimilarityKind::kF1;
  if (name == "jaccard") return SimilarityKind::kJaccard;
  throw InputError("unknown metric '" + std::string(name) +
                   "' (expected f1 or jaccard)");
}

double SetSimilarity(std::span<const NodeId> a, std::span<const NodeId> b,
                     SimilarityKind kind) {
  if (a.empty() || b.empty()) throw InputError("similarity of an empty set");
  std::vector<NodeId> sa, sb;
  a = Sorted(a, sa);
  b = Sorted(b, sb);
  std::size_t common = 0;
  for (auto i = a.begin(), j = b.begin(); i != a.end() && j != b.end();) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++common;
      ++i;
      ++j;
    }
  }
  const double inter = static_cast<double>(common);
  if (kind == SimilarityKind::kF1) {
    return 2.0 * inter / static_cast<double>(a.size() + b.size());
  }
  return inter / static_cast<double>(a.size() + b.size() - common);
}

namespace {

std::vector<const std::vector<NodeId>*> Distinct(const CommunityCover& cover) {
  std::vector<const std::vector<NodeId>*> out;
  for (const auto& c : cover.communities()) {
    const bool seen = std::any_of(out.begin(), out.end(),
                                  [&](const auto* p) { return *p == c; });
    if (!seen) out.push_back(&c);
  }
  return out;
}

}  // namespace

double MatchScore(const CommunityCover& truth, const CommunityCover& detected,
                  SimilarityKind kind) {
  if (truth.empty() || detected.empty()) {
    throw InputError("match score of an empty cover");
  }
  // Covers are sets of communities; repeated member sets count once.
  const auto t = Distinct(truth);
  const auto d = Distinct(detected);
  const std::size_t nt = t.size();
  const std::size_t nd = d.size();
  std::vector<double> best_truth(nt, 0.0);
  std::vector<double> best_detected(nd, 0.0);
  for (std::size_t i = 0; i < nt; ++i) {
    for (std::size_t j = 0; j < nd; ++j) {
      const double s = SetSimilarity(*t[i], *d[j], kind);
      best_truth[i] = std::max(best_truth[i], s);
      best_detected[j] = std::max(best_detected[j], s);
    }
  }
  double sum_truth = 0.0;
  for (double s : best_truth) sum_truth += s;
  double sum_detected = 0.0;
  for (double s : best_detected) sum_detected += s;
  return sum_truth / (2.0 * nt) + sum_detected / (2.0 * nd);
}

double RelativeGain(double score, double baseline) {
  if (baseline == 0.0) throw InputError("relative gain over a zero baseline");
  return (score - baseline) / baseline;
}

}  // namespace cesna
