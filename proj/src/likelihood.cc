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

#include "cesna/likelihood.h"

#include <algorithm>
#include <atomic>
#include <cmath>

namespace cesna {
namespace {

double Sigmoid(double z) { return 1.0 / (1.0 + std::exp(-z)); }

// Linear score of attribute k's logistic model at memberships x.
double AttrScore(std::span<const double> w_k, std::span<const double> x) {
  double z = w_k[x.size()];
  for (std::size_t c = 0; c < x.size(); ++c) z += w_k[c] * x[c];
  return z;
}

void LoadRow(const AffiliationMatrix& f, NodeId v, bool concurrent,
             double* dst) {
  auto r = f.row(v);
  if (!concurrent) {
    std::copy(r.begin(), r.end(), dst);
    return;
  }
  for (std::size_t c = 0; c < r.size(); ++c) {
    dst[c] = std::atomic_ref<double>(const_cast<double&>(r[c]))
                 .load(std::memory_order_relaxed);
  }
}

}  // namespace

double Dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double EdgeProb(std::span<const double> f_u, std::span<const double> f_v) {
  if (f_u.size() != f_v.size()) {
    throw InputError("membership vectors differ in length");
  }
  return -std::expm1(-Dot(f_u, f_v));
}

double GuardedEdgeProb(std::span<const double> f_u,
                       std::span<const double> f_v, double min_dot_guard) {
  if (f_u.size() != f_v.size()) {
    throw InputError("membership vectors differ in length");
  }
  return -std::expm1(-std::max(Dot(f_u, f_v), min_dot_guard));
}

double AttrProb(std::span<const double> w_k, std::span<const double> f_u) {
  if (w_k.size() != f_u.size() + 1) {
    throw InputError("weight vector must have one more slot than memberships");
  }
  return Sigmoid(AttrScore(w_k, f_u));
}

double EdgeLogProb(double dot, double min_dot_guard) {
  return std::log(-std::expm1(-std::max(dot, min_dot_guard)));
}

double BernoulliLogLik(bool observed, double q) {
  q = std::clamp(q, kProbClamp, 1.0 - kProbClamp);
  return observed ? std::log(q) : std::log1p(-q);
}

double LogLikGraph(const AttributedGraph& g, const AffiliationMatrix& f,
                   const HoldoutMask& mask, double min_dot_guard) {
  double edge_term = 0.0;
  double edge_dots = 0.0;
  double self_sq = 0.0;
  for (NodeId u = 0; u < g.num_nodes(); ++u) {
    auto fu = f.row(u);
    self_sq += Dot(fu, fu);
    auto held = mask.partners(u);
    auto h = held.begin();
    for (NodeId v : g.neighbors(u)) {
      if (v <= u) continue;
      double d = Dot(fu, f.row(v));
      edge_dots += d;
      while (h != held.end() && *h < v) ++h;
      if (h != held.end() && *h == v) continue;
      edge_term += EdgeLogProb(d, min_dot_guard);
    }
  }
  double held_non_edge_dots = 0.0;
  for (const auto& p : mask.node_pairs()) {
    if (!g.HasEdge(p.u, p.v)) held_non_edge_dots += Dot(f.row(p.u), f.row(p.v));
  }
  double sum_sq = 0.0;
  for (double s : f.column_sums()) sum_sq += s * s;
  const double all_pair_dots = 0.5 * (sum_sq - self_sq);
  return edge_term - (all_pair_dots - edge_dots - held_non_edge_dots);
}

double LogLikAttr(const AttributedGraph& g, const AffiliationMatrix& f,
                  const AttributeWeights& w, const HoldoutMask& mask) {
  double total = 0.0;
  for (NodeId u = 0; u < g.num_nodes(); ++u) {
    auto fu = f.row(u);
    auto ones = g.attrs_of(u);
    auto held = mask.attrs_of(u);
    auto o = ones.begin();
    auto h = held.begin();
    for (AttrId k = 0; k < g.num_attrs(); ++k) {
      while (o != ones.end() && *o < k) ++o;
      while (h != held.end() && *h < k) ++h;
      if (h != held.end() && *h == k) continue;
      const bool x = o != ones.end() && *o == k;
      total += BernoulliLogLik(x, Sigmoid(AttrScore(w.row(k), fu)));
    }
  }
  return total;
}

std::vector<double> GradNode(NodeId u, const AttributedGraph& g,
                             const AffiliationMatrix& f,
                             const AttributeWeights& w, const FitConfig& config,
                             const HoldoutMask& mask) {
  NodeObjective objective(u, g, f, w, config, mask);
  std::vector<double> grad(f.num_communities());
  objective.Gradient(f.row(u), grad);
  return grad;
}

std::vector<double> GradAttrWeights(AttrId k, const AttributedGraph& g,
                                    const AffiliationMatrix& f,
                                    const AttributeWeights& w,
                                    const HoldoutMask& mask) {
  const int c_count = f.num_communities();
  std::vector<double> grad(c_count + 1, 0.0);
  auto ones = g.nodes_with(k);
  auto held = mask.nodes_of(k);
  auto o = ones.begin();
  auto h = held.begin();
  auto wk = w.row(k);
  for (NodeId u = 0; u < g.num_nodes(); ++u) {
    while (o != ones.end() && *o < u) ++o;
    while (h != held.end() && *h < u) ++h;
    if (h != held.end() && *h == u) continue;
    const bool x = o != ones.end() && *o == u;
    auto fu = f.row(u);
    const double residual = (x ? 1.0 : 0.0) - Sigmoid(AttrScore(wk, fu));
    for (int c = 0; c < c_count; ++c) grad[c] += residual * fu[c];
    grad[c_count] += residual;
  }
  return grad;
}

ObjectiveValue Objective(const AttributedGraph& g, const AffiliationMatrix& f,
                         const AttributeWeights& w, const FitConfig& config,
                         const HoldoutMask& mask) {
  ObjectiveValue out;
  out.l_graph = LogLikGraph(g, f, mask, config.min_dot_guard);
  out.l_attr = LogLikAttr(g, f, w, mask);
  double l1 = 0.0;
  for (AttrId k = 0; k < w.num_attrs(); ++k) {
    for (int c = 0; c < w.num_communities(); ++c) l1 += std::abs(w(k, c));
  }
  out.l1_penalty = config.lambda * l1;
  out.scaled_total = (1.0 - config.alpha) * out.l_graph +
                     config.alpha * out.l_attr - out.l1_penalty;
  return out;
}

NodeObjective::NodeObjective(NodeId u, const AttributedGraph& g,
                             const AffiliationMatrix& f,
                             const AttributeWeights& w, const FitConfig& config,
                             const HoldoutMask& mask, bool concurrent)
    : num_communities_(f.num_communities()),
      graph_scale_(1.0 - config.alpha),
      attr_scale_(config.alpha),
      guard_(config.min_dot_guard),
      weights_(&w) {
  const int c_count = num_communities_;
  if (graph_scale_ != 0.0) {
    auto sums = f.column_sums();
    non_neighbor_sum_.assign(sums.begin(), sums.end());
    std::vector<double> buf(c_count);
    LoadRow(f, u, concurrent, buf.data());
    for (int c = 0; c < c_count; ++c) non_neighbor_sum_[c] -= buf[c];

    auto held = mask.partners(u);
    auto h = held.begin();
    neighbor_rows_.reserve(static_cast<std::size_t>(g.degree(u)) * c_count);
    for (NodeId v : g.neighbors(u)) {
      LoadRow(f, v, concurrent, buf.data());
      for (int c = 0; c < c_count; ++c) non_neighbor_sum_[c] -= buf[c];
      while (h != held.end() && *h < v) ++h;
      if (h != held.end() && *h == v) continue;
      neighbor_rows_.insert(neighbor_rows_.end(), buf.begin(), buf.end());
    }
    for (NodeId v : held) {
      if (g.HasEdge(u, v)) continue;
      LoadRow(f, v, concurrent, buf.data());
      for (int c = 0; c < c_count; ++c) non_neighbor_sum_[c] -= buf[c];
    }
  }
  if (attr_scale_ != 0.0) {
    auto ones = g.attrs_of(u);
    auto held = mask.attrs_of(u);
    auto o = ones.begin();
    auto h = held.begin();
    for (AttrId k = 0; k < g.num_attrs(); ++k) {
      while (o != ones.end() && *o < k) ++o;
      while (h != held.end() && *h < k) ++h;
      if (h != held.end() && *h == k) continue;
      attrs_.push_back(k);
      observed_.push_back(o != ones.end() && *o == k);
    }
  }
}

double NodeObjective::Value(std::span<const double> x) const {
  const std::size_t c_count = num_communities_;
  double total = 0.0;
  if (graph_scale_ != 0.0) {
    double graph = 0.0;
    for (std::size_t off = 0; off < neighbor_rows_.size(); off += c_count) {
      graph += EdgeLogProb(
          Dot(x, std::span<const double>(neighbor_rows_).subspan(off, c_count)),
          guard_);
    }
    graph -= Dot(x, non_neighbor_sum_);
    total += graph_scale_ * graph;
  }
  if (attr_scale_ != 0.0) {
    double attr = 0.0;
    for (std::size_t i = 0; i < attrs_.size(); ++i) {
      attr += BernoulliLogLik(observed_[i],
                              Sigmoid(AttrScore(weights_->row(attrs_[i]), x)));
    }
    total += attr_scale_ * attr;
  }
  return total;
}

void NodeObjective::Gradient(std::span<const double> x,
                             std::span<double> out) const {
  const std::size_t c_count = num_communities_;
  std::fill(out.begin(), out.end(), 0.0);
  if (graph_scale_ != 0.0) {
    for (std::size_t off = 0; off < neighbor_rows_.size(); off += c_count) {
      std::span<const double> fv(neighbor_rows_.data() + off, c_count);
      const double d = std::max(Dot(x, fv), guard_);
      const double coef = 1.0 / std::expm1(d);
      for (std::size_t c = 0; c < c_count; ++c) out[c] += coef * fv[c];
    }
    for (std::size_t c = 0; c < c_count; ++c) {
      out[c] = graph_scale_ * (out[c] - non_neighbor_sum_[c]);
    }
  }
  if (attr_scale_ != 0.0) {
    for (std::size_t i = 0; i < attrs_.size(); ++i) {
      auto wk = weights_->row(attrs_[i]);
      const double residual =
          (observed_[i] ? 1.0 : 0.0) - Sigmoid(AttrScore(wk, x));
      for (std::size_t c = 0; c < c_count; ++c) {
        out[c] += attr_scale_ * residual * wk[c];
      }
    }
  }
}

}  // namespace cesna
