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

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "cesna/evaluation.h"
#include "oracles.h"

namespace cesna {
namespace {

using Sets = std::vector<std::vector<NodeId>>;

Sets RandomSets(std::mt19937_64& rng, int max_sets, NodeId universe) {
  Sets out(1 + rng() % max_sets);
  for (auto& s : out) {
    for (NodeId u = 0; u < universe; ++u) {
      if (rng() % 3 == 0) s.push_back(u);
    }
    if (s.empty()) s.push_back(static_cast<NodeId>(rng() % universe));
  }
  return out;
}

TEST(SetSimilarity, Examples) {
  const std::vector<NodeId> a = {1, 2}, b = {1, 2, 3}, c = {7, 8};
  EXPECT_EQ(SetSimilarity(b, b, SimilarityKind::kF1), 1.0);
  EXPECT_EQ(SetSimilarity(b, b, SimilarityKind::kJaccard), 1.0);
  EXPECT_EQ(SetSimilarity(a, c, SimilarityKind::kF1), 0.0);
  EXPECT_EQ(SetSimilarity(a, c, SimilarityKind::kJaccard), 0.0);
  EXPECT_DOUBLE_EQ(SetSimilarity(a, b, SimilarityKind::kF1), 0.8);
  EXPECT_NEAR(SetSimilarity(a, b, SimilarityKind::kJaccard), 2.0 / 3.0, 1e-15);
  EXPECT_THROW(SetSimilarity(a, std::vector<NodeId>{}, SimilarityKind::kF1),
               InputError);
}

TEST(MatchScore, Examples) {
  const CommunityCover truth(4, {{1, 2, 3}});
  const CommunityCover detected(4, {{1, 2}});
  EXPECT_DOUBLE_EQ(MatchScore(truth, detected, SimilarityKind::kF1), 0.8);
  const CommunityCover overlap(10, {{0, 1, 2}, {2, 3, 4, 5}, {9}});
  EXPECT_EQ(MatchScore(overlap, overlap, SimilarityKind::kF1), 1.0);
  EXPECT_EQ(MatchScore(overlap, overlap, SimilarityKind::kJaccard), 1.0);
  EXPECT_THROW(MatchScore(truth, CommunityCover(), SimilarityKind::kF1),
               InputError);
}

TEST(MatchScore, EqualsBruteForce) {
  std::mt19937_64 rng(61);
  for (int t = 0; t < 200; ++t) {
    const Sets a = RandomSets(rng, 4, 12), b = RandomSets(rng, 4, 12);
    const CommunityCover ta(12, a), tb(12, b);
    for (auto kind : {SimilarityKind::kF1, SimilarityKind::kJaccard}) {
      const double fast = MatchScore(ta, tb, kind);
      EXPECT_NEAR(fast,
                  oracle::MatchScore(ta.communities(), tb.communities(),
                                     kind == SimilarityKind::kF1),
                  1e-12);
      EXPECT_NEAR(fast, MatchScore(tb, ta, kind), 1e-12);
      EXPECT_GE(fast, 0.0);
      EXPECT_LE(fast, 1.0);
    }
  }
}

TEST(MatchScore, InvariantUnderRelabeling) {
  std::mt19937_64 rng(62);
  for (int t = 0; t < 50; ++t) {
    const Sets a = RandomSets(rng, 5, 15), b = RandomSets(rng, 5, 15);
    std::vector<NodeId> perm(15);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    auto relabel = [&](Sets s) {
      for (auto& c : s) {
        for (auto& u : c) u = perm[u];
      }
      return CommunityCover(15, s);
    };
    EXPECT_NEAR(MatchScore(CommunityCover(15, a), CommunityCover(15, b),
                           SimilarityKind::kF1),
                MatchScore(relabel(a), relabel(b), SimilarityKind::kF1),
                1e-12);
  }
}

TEST(MatchScore, DuplicateDetectedCommunityIsNeutral) {
  std::mt19937_64 rng(63);
  for (int t = 0; t < 50; ++t) {
    const Sets a = RandomSets(rng, 4, 10);
    Sets b = RandomSets(rng, 4, 10);
    const double before =
        MatchScore(CommunityCover(10, a), CommunityCover(10, b),
                   SimilarityKind::kJaccard);
    b.push_back(b[rng() % b.size()]);
    EXPECT_NEAR(MatchScore(CommunityCover(10, a), CommunityCover(10, b),
                           SimilarityKind::kJaccard),
                before, 1e-12);
  }
}

TEST(RelativeGain, Examples) {
  EXPECT_EQ(RelativeGain(0.4, 0.4), 0.0);
  EXPECT_NEAR(RelativeGain(0.3, 0.2), 0.5, 1e-12);
  EXPECT_NEAR(RelativeGain(0.1, 0.2), -0.5, 1e-12);
  EXPECT_THROW(RelativeGain(0.3, 0.0), InputError);
}

TEST(ParseSimilarityKind, Names) {
  EXPECT_EQ(ParseSimilarityKind("f1"), SimilarityKind::kF1);
  EXPECT_EQ(ParseSimilarityKind("jaccard"), SimilarityKind::kJaccard);
  EXPECT_THROW(ParseSimilarityKind("nmi"), InputError);
}

}  // namespace
}  // namespace cesna
