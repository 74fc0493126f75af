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

#include "cesna/solver.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <cmath>
#include <string>
#include <thread>

#include "cesna/initializer.h"

namespace cesna {

void FitConfig::Validate() const {
  auto fail = [](const std::string& what) { throw InputError(what); };
  if (!(alpha >= 0.0 && alpha <= 1.0)) fail("alpha must lie in [0, 1]");
  if (!(lambda >= 0.0)) fail("lambda must be nonnegative");
  if (max_outer_iters < 0) fail("max_outer_iters must be nonnegative");
  if (!(rel_improvement_tol >= 0.0)) fail("tolerance must be nonnegative");
  if (!(line_search.init_step > 0.0)) fail("init_step must be positive");
  if (!(line_search.shrink_factor > 0.0 && line_search.shrink_factor < 1.0)) {
    fail("shrink_factor must lie in (0, 1)");
  }
  if (!(line_search.armijo_const >= 0.0)) fail("armijo_const must be >= 0");
  if (line_search.max_trials < 1) fail("max_trials must be at least 1");
  if (!(min_dot_guard > 0.0)) fail("min_dot_guard must be positive");
  if (!(max_f > 0.0)) fail("max_f must be positive");
  if (num_workers < 1) fail("num_workers must be at least 1");
  if (delta && !(*delta > 0.0)) fail("delta must be positive");
}

namespace {

double Clip(double g, double bound) {
  return bound > 0.0 ? std::clamp(g, -bound, bound) : g;
}

// Projected backtracking search from x0. Writes the accepted point to `out`.
bool SearchRow(const NodeObjective& objective, std::span<const double> x0,
               const FitConfig& config, std::span<double> out) {
  const auto& ls = config.line_search;
  const std::size_t c_count = x0.size();
  std::vector<double> grad(c_count);
  objective.Gradient(x0, grad);
  std::vector<double> dir(c_count);
  bool any = false;
  for (std::size_t c = 0; c < c_count; ++c) {
    dir[c] = Clip(grad[c], ls.max_grad_component);
    any = any || dir[c] != 0.0;
  }
  if (!any) return false;

  const double f0 = objective.Value(x0);
  double step = ls.init_step;
  for (int trial = 0; trial < ls.max_trials; ++trial) {
    double ascent = 0.0;
    bool moved = false;
    for (std::size_t c = 0; c < c_count; ++c) {
      out[c] = std::clamp(x0[c] + step * dir[c], 0.0, config.max_f);
      const double delta = out[c] - x0[c];
      ascent += grad[c] * delta;
      moved = moved || delta != 0.0;
    }
    // Every coordinate is pinned at a bound; smaller steps stay pinned too.
    if (!moved) return false;
    const double f = objective.Value(out);
    if (std::isfinite(f) && f - f0 >= ls.armijo_const * ascent) return true;
    step *= ls.shrink_factor;
  }
  return false;
}

void ParallelFor(int num_workers, std::int64_t count,
                 const std::function<void(std::int64_t, std::int64_t)>& body) {
  if (num_workers <= 1 || count < 2) {
    body(0, count);
    return;
  }
  std::vector<std::jthread> workers;
  const std::int64_t chunk = (count + num_workers - 1) / num_workers;
  for (std::int64_t begin = 0; begin < count; begin += chunk) {
    workers.emplace_back(body, begin, std::min(count, begin + chunk));
  }
}

void NodePass(const AttributedGraph& g, AffiliationMatrix& f,
              const AttributeWeights& w, const FitConfig& config,
              const HoldoutMask& mask) {
  if (config.num_workers <= 1) {
    for (NodeId u = 0; u < g.num_nodes(); ++u) {
      UpdateNode(u, g, f, w, config, mask);
    }
    return;
  }
  // Rows are single-writer; other rows are read through relaxed atomics and
  // may be one update stale. Column sums stay frozen for the pass.
  ParallelFor(config.num_workers, g.num_nodes(),
              [&](std::int64_t begin, std::int64_t end) {
                std::vector<double> next(f.num_communities());
                for (auto u = static_cast<NodeId>(begin); u < end; ++u) {
                  NodeObjective objective(u, g, f, w, config, mask, true);
                  if (!SearchRow(objective, f.row(u), config, next)) continue;
                  auto r = f.mutable_row(u);
                  for (std::size_t c = 0; c < next.size(); ++c) {
                    std::atomic_ref<double>(r[c]).store(
                        next[c], std::memory_order_relaxed);
                  }
                }
              });
}

void AttrPass(const AttributedGraph& g, const AffiliationMatrix& f,
              AttributeWeights& w, const FitConfig& config,
              const HoldoutMask& mask) {
  ParallelFor(config.num_workers, g.num_attrs(),
              [&](std::int64_t begin, std::int64_t end) {
                for (auto k = static_cast<AttrId>(begin); k < end; ++k) {
                  UpdateAttrWeights(k, g, f, w, config, mask);
                }
              });
}

double Seconds(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       since)
      .count();
}

}  // namespace

bool UpdateNode(NodeId u, const AttributedGraph& g, AffiliationMatrix& f,
                const AttributeWeights& w, const FitConfig& config,
                const HoldoutMask& mask) {
  NodeObjective objective(u, g, f, w, config, mask);
  std::vector<double> next(f.num_communities());
  if (!SearchRow(objective, f.row(u), config, next)) return false;
  f.SetRow(u, next);
  return true;
}

bool UpdateAttrWeights(AttrId k, const AttributedGraph& g,
                       const AffiliationMatrix& f, AttributeWeights& w,
                       const FitConfig& config, const HoldoutMask& mask) {
  const int c_count = f.num_communities();
  const double alpha = config.alpha;
  const double lambda = config.lambda;
  auto w0 = w.row(k);

  std::vector<double> dir = GradAttrWeights(k, g, f, w, mask);
  double dir_sq = 0.0;
  for (int c = 0; c <= c_count; ++c) {
    dir[c] *= alpha;
    if (c < c_count && w0[c] != 0.0) {
      dir[c] -= lambda * (w0[c] > 0.0 ? 1.0 : -1.0);
    }
    dir_sq += dir[c] * dir[c];
  }
  if (dir_sq == 0.0) return false;

  // Along the ray w0 + t * dir each node's score is base + t * slope.
  std::vector<double> base;
  std::vector<double> slope;
  std::vector<char> observed;
  if (alpha != 0.0) {
    auto ones = g.nodes_with(k);
    auto held = mask.nodes_of(k);
    auto o = ones.begin();
    auto h = held.begin();
    base.reserve(g.num_nodes());
    slope.reserve(g.num_nodes());
    observed.reserve(g.num_nodes());
    for (NodeId u = 0; u < g.num_nodes(); ++u) {
      while (o != ones.end() && *o < u) ++o;
      while (h != held.end() && *h < u) ++h;
      if (h != held.end() && *h == u) continue;
      auto fu = f.row(u);
      double z = w0[c_count];
      double s = dir[c_count];
      for (int c = 0; c < c_count; ++c) {
        z += w0[c] * fu[c];
        s += dir[c] * fu[c];
      }
      base.push_back(z);
      slope.push_back(s);
      observed.push_back(o != ones.end() && *o == u);
    }
  }
  auto value = [&](double t) {
    double ll = 0.0;
    for (std::size_t i = 0; i < base.size(); ++i) {
      const double q = 1.0 / (1.0 + std::exp(-(base[i] + t * slope[i])));
      ll += BernoulliLogLik(observed[i], q);
    }
    double l1 = 0.0;
    for (int c = 0; c < c_count; ++c) l1 += std::abs(w0[c] + t * dir[c]);
    return alpha * ll - lambda * l1;
  };

  const auto& ls = config.line_search;
  const double f0 = value(0.0);
  double step = ls.init_step;
  for (int trial = 0; trial < ls.max_trials; ++trial) {
    const double fv = value(step);
    if (std::isfinite(fv) && fv - f0 >= ls.armijo_const * step * dir_sq) {
      auto row = w.mutable_row(k);
      for (int c = 0; c <= c_count; ++c) row[c] += step * dir[c];
      return true;
    }
    step *= ls.shrink_factor;
  }
  return false;
}

AttributedGraph TrainingGraph(const AttributedGraph& g,
                              const HoldoutMask& mask) {
  std::vector<Edge> edges;
  edges.reserve(g.num_edges());
  for (const auto& [u, v] : g.Edges()) {
    if (!mask.IsHeldOutPair(u, v)) edges.emplace_back(u, v);
  }
  std::vector<AttrPair> attrs;
  attrs.reserve(g.num_attr_pairs());
  for (const auto& [u, k] : g.AttrPairs()) {
    if (!mask.IsHeldOutAttr(u, k)) attrs.emplace_back(u, k);
  }
  return AttributedGraph::Build(g.num_nodes(), g.num_attrs(), edges, attrs);
}

FitResult Fit(const AttributedGraph& g, int num_communities,
              const FitConfig& config, const HoldoutMask& mask) {
  config.Validate();
  if (num_communities < 1) throw InputError("need at least one community");
  if (mask.empty()) {
    return FitFrom(g, InitAffiliations(g, num_communities, config.rng_seed),
                   config, mask);
  }
  const AttributedGraph train = TrainingGraph(g, mask);
  return FitFrom(train,
                 InitAffiliations(train, num_communities, config.rng_seed),
                 config, mask);
}

FitResult FitFrom(const AttributedGraph& g, AffiliationMatrix init,
                  const FitConfig& config, const HoldoutMask& mask) {
  config.Validate();
  if (init.num_nodes() != g.num_nodes()) {
    throw InputError("initial memberships have the wrong number of rows");
  }
  FitResult result;
  result.F = std::move(init);
  result.W = AttributeWeights(g.num_attrs(), result.F.num_communities());
  for (double& x : result.F.mutable_values()) {
    x = std::clamp(x, 0.0, config.max_f);
  }
  result.F.RefreshColumnSums();
  result.objective_trace.push_back(
      Objective(g, result.F, result.W, config, mask));

  for (int iter = 0; iter < config.max_outer_iters; ++iter) {
    const auto start = std::chrono::steady_clock::now();
    NodePass(g, result.F, result.W, config, mask);
    result.F.RefreshColumnSums();
    AttrPass(g, result.F, result.W, config, mask);
    const ObjectiveValue current =
        Objective(g, result.F, result.W, config, mask);
    const double previous = result.objective_trace.back().scaled_total;
    result.objective_trace.push_back(current);
    result.iteration_seconds.push_back(Seconds(start));
    ++result.iterations_run;
    if (current.scaled_total - previous <=
        config.rel_improvement_tol * std::abs(previous)) {
      result.converged = true;
      break;
    }
  }
  return result;
}

double MembershipThreshold(NodeId num_nodes) {
  if (num_nodes < 2) throw InputError("threshold needs at least two nodes");
  const double target = 1.0 / num_nodes;
  double delta = std::sqrt(-std::log1p(-target));
  while (-std::expm1(-delta * delta) < target) {
    delta = std::nextafter(delta, 2.0 * delta);
  }
  return delta;
}

CommunityCover ThresholdMemberships(const AffiliationMatrix& f,
                                    std::optional<double> delta) {
  const double cut = delta ? *delta : MembershipThreshold(f.num_nodes());
  std::vector<std::vector<NodeId>> communities;
  for (int c = 0; c < f.num_communities(); ++c) {
    std::vector<NodeId> members;
    for (NodeId u = 0; u < f.num_nodes(); ++u) {
      if (f(u, c) >= cut) members.push_back(u);
    }
    if (members.empty()) continue;
    if (std::find(communities.begin(), communities.end(), members) !=
        communities.end()) {
      continue;
    }
    communities.push_back(std::move(members));
  }
  return CommunityCover(f.num_nodes(), std::move(communities));
}

std::vector<std::pair<AttrId, double>> RankAttributes(
    const AttributeWeights& w) {
  std::vector<std::pair<AttrId, double>> ranked;
  ranked.reserve(w.num_attrs());
  for (AttrId k = 0; k < w.num_attrs(); ++k) {
    double sq = 0.0;
    for (int c = 0; c < w.num_communities(); ++c) sq += w(k, c) * w(k, c);
    ranked.emplace_back(k, std::sqrt(sq));
  }
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto& a, const auto& b) {
                     return a.second > b.second;
                   });
  return ranked;
}

}  // namespace cesna
