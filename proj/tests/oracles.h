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

// Slow reference implementations used as test oracles. Everything here walks
// all pairs explicitly and accumulates in long double.

#ifndef CESNA_TESTS_ORACLES_H_
#define CESNA_TESTS_ORACLES_H_

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <vector>

#include "cesna/affiliation.h"
#include "cesna/graph.h"
#include "cesna/holdout_mask.h"

namespace cesna::oracle {

struct Instance {
  AttributedGraph g;
  AffiliationMatrix f;
  AttributeWeights w;
};

// Erdos-Renyi edges and attributes with F entries in [lo, hi] (zero with
// probability zero_prob) and W entries in [-2, 2].
inline Instance RandomInstance(std::mt19937_64& rng, NodeId n, int c, AttrId k,
                               double edge_p, double attr_p, double lo = 0.05,
                               double hi = 1.5, double zero_prob = 0.0) {
  std::bernoulli_distribution edge(edge_p), attr(attr_p), zero(zero_prob);
  std::uniform_real_distribution<double> fval(lo, hi), wval(-2.0, 2.0);
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      if (edge(rng)) edges.emplace_back(u, v);
    }
  }
  std::vector<AttrPair> attrs;
  for (NodeId u = 0; u < n; ++u) {
    for (AttrId a = 0; a < k; ++a) {
      if (attr(rng)) attrs.emplace_back(u, a);
    }
  }
  Instance inst;
  inst.g = AttributedGraph::Build(n, k, edges, attrs);
  inst.f = AffiliationMatrix(n, c);
  for (NodeId u = 0; u < n; ++u) {
    for (int j = 0; j < c; ++j) inst.f.Set(u, j, zero(rng) ? 0.0 : fval(rng));
  }
  inst.f.RefreshColumnSums();
  inst.w = AttributeWeights(k, c);
  for (AttrId a = 0; a < k; ++a) {
    for (int j = 0; j <= c; ++j) inst.w.Set(a, j, wval(rng));
  }
  return inst;
}

inline long double DotL(const AffiliationMatrix& f, NodeId u,
                        const std::vector<long double>& x) {
  long double s = 0;
  for (int j = 0; j < f.num_communities(); ++j) s += x[j] * f(u, j);
  return s;
}

inline std::vector<long double> RowL(const AffiliationMatrix& f, NodeId u) {
  std::vector<long double> r(f.num_communities());
  for (int j = 0; j < f.num_communities(); ++j) r[j] = f(u, j);
  return r;
}

inline long double EdgeTerm(long double dot, long double guard) {
  return std::log(-std::expm1(-std::max(dot, guard)));
}

inline long double Sigmoid(long double z) { return 1.0L / (1.0L + std::exp(-z)); }

inline long double AttrTerm(bool x, long double z) {
  long double q = Sigmoid(z);
  q = std::clamp(q, 1e-12L, 1.0L - 1e-12L);
  return x ? std::log(q) : std::log1p(-q);
}

inline long double AttrLogit(const AttributeWeights& w, AttrId k,
                             const std::vector<long double>& x) {
  long double z = w.bias(k);
  for (int j = 0; j < w.num_communities(); ++j) z += w(k, j) * x[j];
  return z;
}

inline long double LogLikGraph(const AttributedGraph& g,
                               const AffiliationMatrix& f,
                               const HoldoutMask& mask, double guard) {
  long double total = 0;
  for (NodeId u = 0; u < g.num_nodes(); ++u) {
    const auto fu = RowL(f, u);
    for (NodeId v = u + 1; v < g.num_nodes(); ++v) {
      if (mask.IsHeldOutPair(u, v)) continue;
      const long double d = DotL(f, v, fu);
      total += g.HasEdge(u, v) ? EdgeTerm(d, guard) : -d;
    }
  }
  return total;
}

inline long double LogLikAttr(const AttributedGraph& g,
                              const AffiliationMatrix& f,
                              const AttributeWeights& w,
                              const HoldoutMask& mask) {
  long double total = 0;
  for (NodeId u = 0; u < g.num_nodes(); ++u) {
    const auto fu = RowL(f, u);
    for (AttrId k = 0; k < g.num_attrs(); ++k) {
      if (mask.IsHeldOutAttr(u, k)) continue;
      total += AttrTerm(g.HasAttr(u, k), AttrLogit(w, k, fu));
    }
  }
  return total;
}

// Terms of (1 - alpha) L_G + alpha L_X that involve row u, with F_u = x.
inline long double NodeLocal(NodeId u, const std::vector<long double>& x,
                             const AttributedGraph& g,
                             const AffiliationMatrix& f,
                             const AttributeWeights& w, double alpha,
                             double guard, const HoldoutMask& mask) {
  long double lg = 0, lx = 0;
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    if (v == u || mask.IsHeldOutPair(u, v)) continue;
    const long double d = DotL(f, v, x);
    lg += g.HasEdge(u, v) ? EdgeTerm(d, guard) : -d;
  }
  for (AttrId k = 0; k < g.num_attrs(); ++k) {
    if (mask.IsHeldOutAttr(u, k)) continue;
    lx += AttrTerm(g.HasAttr(u, k), AttrLogit(w, k, x));
  }
  return (1.0L - alpha) * lg + alpha * lx;
}

// Explicit non-neighbor loop; the edge coefficient uses the guarded dot.
inline std::vector<long double> GradNode(NodeId u, const AttributedGraph& g,
                                         const AffiliationMatrix& f,
                                         const AttributeWeights& w,
                                         double alpha, double guard,
                                         const HoldoutMask& mask) {
  const int c = f.num_communities();
  const auto fu = RowL(f, u);
  std::vector<long double> gg(c, 0), gx(c, 0);
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    if (v == u || mask.IsHeldOutPair(u, v)) continue;
    if (g.HasEdge(u, v)) {
      const long double d = std::max(DotL(f, v, fu), (long double)guard);
      const long double coef = 1.0L / std::expm1(d);
      for (int j = 0; j < c; ++j) gg[j] += coef * f(v, j);
    } else {
      for (int j = 0; j < c; ++j) gg[j] -= f(v, j);
    }
  }
  for (AttrId k = 0; k < g.num_attrs(); ++k) {
    if (mask.IsHeldOutAttr(u, k)) continue;
    const long double r =
        (g.HasAttr(u, k) ? 1.0L : 0.0L) - Sigmoid(AttrLogit(w, k, fu));
    for (int j = 0; j < c; ++j) gx[j] += r * w(k, j);
  }
  std::vector<long double> out(c);
  for (int j = 0; j < c; ++j) out[j] = (1.0L - alpha) * gg[j] + alpha * gx[j];
  return out;
}

// sum_u log P(X_uk | F_u, x) as a function of the weight row x (C + 1 long).
inline long double AttrColumn(AttrId k, const std::vector<long double>& x,
                              const AttributedGraph& g,
                              const AffiliationMatrix& f) {
  const int c = f.num_communities();
  long double total = 0;
  for (NodeId u = 0; u < g.num_nodes(); ++u) {
    long double z = x[c];
    for (int j = 0; j < c; ++j) z += x[j] * f(u, j);
    total += AttrTerm(g.HasAttr(u, k), z);
  }
  return total;
}

inline double SetSimilarity(const std::vector<NodeId>& a,
                            const std::vector<NodeId>& b, bool f1) {
  std::set<NodeId> sa(a.begin(), a.end()), sb(b.begin(), b.end());
  int inter = 0;
  for (NodeId x : sa) inter += sb.count(x) ? 1 : 0;
  const int uni = static_cast<int>(sa.size() + sb.size()) - inter;
  return f1 ? 2.0 * inter / static_cast<double>(sa.size() + sb.size())
            : inter / static_cast<double>(uni);
}

// Covers are taken as sets of communities, so repeats collapse first.
inline double MatchScore(const std::vector<std::vector<NodeId>>& truth_in,
                         const std::vector<std::vector<NodeId>>& detected_in,
                         bool f1) {
  auto distinct = [](const std::vector<std::vector<NodeId>>& cover) {
    std::set<std::set<NodeId>> sets;
    for (const auto& c : cover) sets.emplace(c.begin(), c.end());
    std::vector<std::vector<NodeId>> out;
    for (const auto& s : sets) out.emplace_back(s.begin(), s.end());
    return out;
  };
  const auto truth = distinct(truth_in);
  const auto detected = distinct(detected_in);
  double forward = 0, backward = 0;
  for (const auto& t : truth) {
    double best = 0;
    for (const auto& d : detected) best = std::max(best, SetSimilarity(t, d, f1));
    forward += best;
  }
  for (const auto& d : detected) {
    double best = 0;
    for (const auto& t : truth) best = std::max(best, SetSimilarity(t, d, f1));
    backward += best;
  }
  return forward / (2.0 * truth.size()) + backward / (2.0 * detected.size());
}

// Brute-force locally minimal closed neighborhoods by conductance, returned
// as sorted center ids. Ties between a center and a neighbor go to the
// smaller id; conductance-1 neighborhoods never qualify.
inline std::vector<NodeId> LocallyMinimalCenters(const AttributedGraph& g) {
  const NodeId n = g.num_nodes();
  const long double two_m = 2.0L * g.num_edges();
  std::vector<long double> cond(n, 1.0L);
  for (NodeId u = 0; u < n; ++u) {
    std::vector<char> in(n, 0);
    in[u] = 1;
    for (NodeId v = 0; v < n; ++v) {
      if (g.HasEdge(u, v)) in[v] = 1;
    }
    long double vol = 0, cut = 0;
    int size = 0;
    for (NodeId a = 0; a < n; ++a) {
      if (!in[a]) continue;
      ++size;
      for (NodeId b = 0; b < n; ++b) {
        if (!g.HasEdge(a, b)) continue;
        vol += 1;
        if (!in[b]) cut += 1;
      }
    }
    const long double denom = std::min(vol, two_m - vol);
    cond[u] = (size == n || denom <= 0) ? 1.0L : cut / denom;
  }
  std::vector<NodeId> out;
  for (NodeId u = 0; u < n; ++u) {
    if (cond[u] >= 1.0L || g.degree(u) == 0) continue;
    bool ok = true;
    for (NodeId v = 0; v < n && ok; ++v) {
      if (!g.HasEdge(u, v)) continue;
      if (cond[v] < cond[u] || (cond[v] == cond[u] && v < u)) ok = false;
    }
    if (ok) out.push_back(u);
  }
  return out;
}

}  // namespace cesna::oracle

#endif  // CESNA_TESTS_ORACLES_H_
