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

#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "cesna/initializer.h"
#include "cesna/solver.h"
#include "cesna/synthetic.h"
#include "oracles.h"

namespace cesna {
namespace {

std::vector<double> Row(const AffiliationMatrix& f, NodeId u) {
  return {f.row(u).begin(), f.row(u).end()};
}

AttributedGraph TwoCliques() {
  std::vector<Edge> edges;
  for (NodeId base : {0, 5}) {
    for (NodeId u = 0; u < 5; ++u) {
      for (NodeId v = u + 1; v < 5; ++v) edges.emplace_back(base + u, base + v);
    }
  }
  return AttributedGraph::Build(10, 0, edges, {});
}

TEST(UpdateNode, ZeroGradientIsFixedPoint) {
  const auto g = AttributedGraph::Build(2, 0, {}, {});
  AffiliationMatrix f(2, 2);
  f.RefreshColumnSums();
  AttributeWeights w(0, 2);
  FitConfig config;
  EXPECT_FALSE(UpdateNode(0, g, f, w, config));
  EXPECT_EQ(Row(f, 0), (std::vector<double>{0.0, 0.0}));
}

TEST(UpdateNode, StepTowardNeighborImproves) {
  const std::vector<Edge> edges = {{0, 1}};
  const auto g = AttributedGraph::Build(2, 0, edges, {});
  AffiliationMatrix f(2, 1);
  f.Set(0, 0, 0.1);
  f.Set(1, 0, 1.0);
  f.RefreshColumnSums();
  AttributeWeights w(0, 1);
  FitConfig config;
  const double before = LogLikGraph(g, f);
  EXPECT_TRUE(UpdateNode(0, g, f, w, config));
  EXPECT_GT(LogLikGraph(g, f), before);
  EXPECT_GT(f(0, 0), 0.1);
  EXPECT_DOUBLE_EQ(f.column_sums()[0], f(0, 0) + 1.0);
}

TEST(UpdateNode, ProjectionKeepsZeroCoordinate) {
  const std::vector<Edge> edges = {{0, 2}};
  const auto g = AttributedGraph::Build(3, 0, edges, {});
  AffiliationMatrix f(3, 2);
  f.Set(0, 1, 0.5);
  f.Set(1, 0, 1.0);
  f.Set(2, 1, 1.0);
  f.RefreshColumnSums();
  AttributeWeights w(0, 2);
  FitConfig config;
  ASSERT_LT(GradNode(0, g, f, w, config)[0], 0.0);
  UpdateNode(0, g, f, w, config);
  EXPECT_EQ(f(0, 0), 0.0);
}

TEST(UpdateAttrWeights, BalancedZeroGradientUnchanged) {
  const std::vector<AttrPair> attrs = {{0, 0}};
  const auto g = AttributedGraph::Build(2, 1, {}, attrs);
  AffiliationMatrix f(2, 2);
  AttributeWeights w(1, 2);
  FitConfig config;
  config.lambda = 0.0;
  EXPECT_FALSE(UpdateAttrWeights(0, g, f, w, config));
  EXPECT_EQ(w, AttributeWeights(1, 2));
}

TEST(UpdateAttrWeights, HugeLambdaKeepsWeightsAtZero) {
  // Attribute held by exactly half the nodes, so the intercept has no pull.
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> val(0.0, 1.0);
  const NodeId n = 20;
  std::vector<AttrPair> attrs;
  for (NodeId u = 0; u < n; u += 2) attrs.emplace_back(u, 0);
  const auto g = AttributedGraph::Build(n, 1, {}, attrs);
  AffiliationMatrix f(n, 3);
  for (NodeId u = 0; u < n; ++u) {
    for (int c = 0; c < 3; ++c) f.Set(u, c, val(rng));
  }
  AttributeWeights w(1, 3);
  FitConfig config;
  config.lambda = n;
  UpdateAttrWeights(0, g, f, w, config);
  for (int c = 0; c < 3; ++c) EXPECT_EQ(w(0, c), 0.0);
}

TEST(UpdateAttrWeights, UnpenalizedAscentNeverDecreases) {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 10; ++t) {
    auto inst = oracle::RandomInstance(rng, 15, 3, 3, 0.2, 0.4);
    AttributeWeights w(3, 3);
    FitConfig config;
    config.lambda = 0.0;
    const AttrId k = static_cast<AttrId>(rng() % 3);
    auto column = [&] {
      std::vector<long double> x(w.row(k).begin(), w.row(k).end());
      return oracle::AttrColumn(k, x, inst.g, inst.f);
    };
    long double previous = column();
    for (int step = 0; step < 50; ++step) {
      UpdateAttrWeights(k, inst.g, inst.f, w, config);
      const long double now = column();
      EXPECT_GE(now, previous - 1e-12L);
      previous = now;
    }
  }
}

TEST(Fit, RecoversTwoCliques) {
  FitConfig config;
  config.alpha = 0.5;
  const auto result = Fit(TwoCliques(), 2, config);
  const auto cover = ThresholdMemberships(result.F).Canonical();
  ASSERT_EQ(cover.size(), 2u);
  EXPECT_EQ(cover[0], (std::vector<NodeId>{0, 1, 2, 3, 4}));
  EXPECT_EQ(cover[1], (std::vector<NodeId>{5, 6, 7, 8, 9}));
}

TEST(Fit, ZeroIterationsReturnsInitialization) {
  FitConfig config;
  config.max_outer_iters = 0;
  const auto g = TwoCliques();
  const auto result = Fit(g, 3, config);
  EXPECT_EQ(result.F, InitAffiliations(g, 3, config.rng_seed));
  EXPECT_FALSE(result.converged);
  EXPECT_EQ(result.iterations_run, 0);
  EXPECT_EQ(result.objective_trace.size(), 1u);
}

TEST(Fit, RejectsBadArguments) {
  FitConfig config;
  EXPECT_THROW(Fit(TwoCliques(), 0, config), InputError);
  config.alpha = 1.5;
  EXPECT_THROW(Fit(TwoCliques(), 2, config), InputError);
}

TEST(Fit, BitIdenticalRepeat) {
  PlantedSpec spec;
  spec.n = 120;
  spec.k = 12;
  spec.seed = 5;
  const auto inst = MakePlantedInstance(spec);
  FitConfig config;
  config.rng_seed = 3;
  config.max_outer_iters = 40;
  const auto a = Fit(inst.graph, 4, config);
  const auto b = Fit(inst.graph, 4, config);
  EXPECT_EQ(a.F, b.F);
  EXPECT_EQ(a.W, b.W);
  EXPECT_EQ(a.iterations_run, b.iterations_run);
}

TEST(Fit, MonotoneTraceAndBoundedMemberships) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    PlantedSpec spec;
    spec.n = 100;
    spec.k = 10;
    spec.seed = seed;
    const auto inst = MakePlantedInstance(spec);
    FitConfig config;
    config.max_outer_iters = 30;
    config.rel_improvement_tol = 0.0;
    config.max_f = 2.0;
    const auto result = Fit(inst.graph, 4, config);
    for (std::size_t i = 1; i < result.objective_trace.size(); ++i) {
      EXPECT_GE(result.objective_trace[i].scaled_total,
                result.objective_trace[i - 1].scaled_total - 1e-9);
    }
    for (double x : result.F.values()) {
      EXPECT_GE(x, 0.0);
      EXPECT_LE(x, 2.0);
    }
  }
}

TEST(Fit, AlphaZeroIgnoresAttributeColumnOrder) {
  PlantedSpec spec;
  spec.n = 80;
  spec.k = 8;
  spec.seed = 9;
  const auto inst = MakePlantedInstance(spec);
  std::vector<AttrId> perm(spec.k);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), std::mt19937_64(1));
  std::vector<AttrPair> permuted;
  for (const auto& [u, k] : inst.graph.AttrPairs()) permuted.emplace_back(u, perm[k]);
  const auto edges = inst.graph.Edges();
  const auto shuffled =
      AttributedGraph::Build(spec.n, spec.k, edges, permuted);
  FitConfig config;
  config.alpha = 0.0;
  config.max_outer_iters = 25;
  const auto a = Fit(inst.graph, 4, config);
  const auto b = Fit(shuffled, 4, config);
  EXPECT_EQ(a.F, b.F);
  EXPECT_EQ(a.W, AttributeWeights(spec.k, 4));
}

TEST(Fit, ParallelWorkersReportGenuineObjective) {
  PlantedSpec spec;
  spec.n = 200;
  spec.k = 20;
  spec.seed = 2;
  const auto inst = MakePlantedInstance(spec);
  FitConfig config;
  config.num_workers = 4;
  config.max_outer_iters = 20;
  const auto result = Fit(inst.graph, 4, config);
  const auto recomputed = Objective(inst.graph, result.F, result.W, config);
  EXPECT_NEAR(result.objective_trace.back().scaled_total,
              recomputed.scaled_total,
              1e-9 * std::abs(recomputed.scaled_total));
  EXPECT_TRUE(result.W.AllFinite());
}

TEST(Threshold, ClosedForm) {
  EXPECT_NEAR(MembershipThreshold(2), 0.8325546, 1e-7);
  EXPECT_NEAR(MembershipThreshold(100), std::sqrt(-std::log(0.99)), 1e-15);
  EXPECT_NEAR(MembershipThreshold(100), 0.1002514, 1e-7);
  for (NodeId n : {2, 3, 7, 100, 1000, 123457}) {
    const double d = MembershipThreshold(n);
    EXPECT_GE(-std::expm1(-d * d), 1.0 / n);
  }
  EXPECT_THROW(MembershipThreshold(1), InputError);
}

TEST(Threshold, ZeroMembershipsGiveEmptyCover) {
  EXPECT_TRUE(ThresholdMemberships(AffiliationMatrix(5, 3)).empty());
}

TEST(Threshold, DropsDuplicatesAndUsesInclusiveCut) {
  AffiliationMatrix f(4, 3);
  const double d = MembershipThreshold(4);
  f.Set(0, 0, d);
  f.Set(1, 0, 1.0);
  f.Set(0, 1, 2.0);
  f.Set(1, 1, d);
  f.Set(2, 2, std::nextafter(d, 0.0));
  const auto cover = ThresholdMemberships(f);
  ASSERT_EQ(cover.size(), 1u);
  EXPECT_EQ(cover[0], (std::vector<NodeId>{0, 1}));
}

TEST(Threshold, IntraCommunityPairsReachInverseN) {
  PlantedSpec spec;
  spec.n = 150;
  spec.seed = 4;
  const auto inst = MakePlantedInstance(spec);
  FitConfig config;
  config.max_outer_iters = 50;
  const auto result = Fit(inst.graph, 4, config);
  const auto cover = ThresholdMemberships(result.F);
  const double cut = MembershipThreshold(spec.n);
  for (std::size_t i = 0; i < cover.size(); ++i) {
    int c = 0;
    for (; c < 4; ++c) {
      bool match = true;
      for (NodeId u : cover[i]) match = match && result.F(u, c) >= cut;
      if (match) break;
    }
    ASSERT_LT(c, 4);
    for (NodeId u : cover[i]) {
      for (NodeId v : cover[i]) {
        if (u == v) continue;
        EXPECT_GE(-std::expm1(-result.F(u, c) * result.F(v, c)), 1.0 / spec.n);
      }
    }
  }
}

TEST(RankAttributes, Examples) {
  AttributeWeights zeros(3, 2);
  const auto r0 = RankAttributes(zeros);
  ASSERT_EQ(r0.size(), 3u);
  for (AttrId k = 0; k < 3; ++k) {
    EXPECT_EQ(r0[k].first, k);
    EXPECT_EQ(r0[k].second, 0.0);
  }
  AttributeWeights w(2, 2);
  w.Set(0, 0, 3.0);
  w.Set(0, 1, 4.0);
  w.Set(0, 2, 99.0);
  w.Set(1, 0, 1.0);
  const auto r = RankAttributes(w);
  EXPECT_EQ(r[0].first, 0);
  EXPECT_EQ(r[0].second, 5.0);
  EXPECT_EQ(RankAttributes(AttributeWeights(1, 4)).size(), 1u);
}

}  // namespace
}  // namespace cesna
