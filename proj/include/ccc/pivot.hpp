// Copyright 2026 The ccc Authors.
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

// Pivot clustering over an auxiliary graph: uniform random pivots, a fixed
// pivot order, and the deterministic strategy that picks the node minimizing
// (unflipped edges) / (budget) over the bad triangles it belongs to.

#ifndef CCC_PIVOT_HPP_
#define CCC_PIVOT_HPP_

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ccc/aux_graph.hpp"
#include "ccc/common.hpp"
#include "ccc/covering_solver.hpp"
#include "ccc/instance.hpp"
#include "ccc/lp.hpp"

namespace ccc {

enum class PivotStrategy { kRandom, kDeterministic };

inline const char* to_string(PivotStrategy s) {
  return s == PivotStrategy::kRandom ? "random" : "deterministic";
}

// Per-pair budgets stored in fixed point with 2^-30 resolution, so sums and
// ratio comparisons are exact.
class EdgeBudgets {
 public:
  EdgeBudgets() = default;
  explicit EdgeBudgets(int n) : y_(n, 0) {}

  int num_nodes() const { return y_.size(); }
  void set(int u, int v, double y) {
    if (!(y >= 0.0) || !std::isfinite(y)) throw std::invalid_argument("budgets must be finite and >= 0");
    y_.set(u, v, std::llround(y * kValueGridScale));
  }
  double get(int u, int v) const { return static_cast<double>(y_.get(u, v)) / kValueGridScale; }
  std::int64_t fixed(int u, int v) const { return y_.get(u, v); }

 private:
  SymmetricMatrix<std::int64_t> y_;
};

// 2 on b edges and 3x elsewhere; x itself for the friendly variant.
inline EdgeBudgets make_budgets(const AuxGraph& g, const SymmetricMatrix<double>& x, LpVariant variant) {
  const int n = g.num_nodes();
  EdgeBudgets y(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (variant == LpVariant::kFriendly) {
        y.set(u, v, x.get(u, v));
      } else {
        y.set(u, v, g.edge_class(u, v) == EdgeClass::kB ? 2.0 : 3.0 * x.get(u, v));
      }
    }
  }
  return y;
}

inline EdgeBudgets make_budgets(const AuxGraph& g, const LpSolution& sol, LpVariant variant) {
  return make_budgets(g, sol.x, variant);
}

// A node's pivot-selection ratio. den is in 2^-30 units. 0/0 counts as 0 and
// positive/0 as infinity.
struct PivotRatio {
  std::int64_t num = 0;
  std::int64_t den = 0;

  bool infinite() const { return den == 0 && num > 0; }
  double value() const {
    if (den == 0) return num == 0 ? 0.0 : INFINITY;
    return static_cast<double>(num) * kValueGridScale / static_cast<double>(den);
  }
  friend bool operator==(const PivotRatio&, const PivotRatio&) = default;
};

inline bool ratio_less(const PivotRatio& a, const PivotRatio& b) {
  if (a.infinite()) return false;
  if (b.infinite()) return true;
  if (a.den == 0) return b.den > 0 && b.num > 0;
  if (b.den == 0) return false;
  return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
}

// Bad triangles of the auxiliary graph with per-node aggregates over the
// triangles that are still alive. Each vertex of a triangle is charged for
// the opposite edge: 1 in the numerator if that edge has the same sign in
// the input graph, its budget in the denominator.
class TriangleIndex {
 public:
  TriangleIndex(const AuxGraph& g, const SignedInstance& inst, const EdgeBudgets& y)
      : g_(&g), inst_(&inst), y_(&y), n_(g.num_nodes()), alive_node_(n_, 1), num_(n_, 0), den_(n_, 0) {
    std::vector<int> degree(n_, 0);
    std::vector<int> nbrs;
    for (int b = 0; b < n_; ++b) {
      nbrs.clear();
      for (int v = 0; v < n_; ++v) {
        if (v != b && g.is_positive(b, v)) nbrs.push_back(v);
      }
      for (std::size_t i = 0; i < nbrs.size(); ++i) {
        const auto* row = g.positive_matrix().row(nbrs[i]);
        for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
          if (row[nbrs[j]]) continue;
          tri_.push_back({nbrs[i], b, nbrs[j]});
          ++degree[nbrs[i]];
          ++degree[b];
          ++degree[nbrs[j]];
        }
      }
    }
    start_.assign(n_ + 1, 0);
    for (int u = 0; u < n_; ++u) start_[u + 1] = start_[u] + degree[u];
    incident_.resize(start_[n_]);
    std::vector<std::size_t> fill(start_.begin(), start_.end() - 1);
    std::int64_t max_budget = 0;
    for (int u = 0; u < n_; ++u) {
      for (int v = u + 1; v < n_; ++v) max_budget = std::max(max_budget, y.fixed(u, v));
    }
    if (static_cast<__int128>(tri_.size()) * 3 * max_budget > std::numeric_limits<std::int64_t>::max()) {
      throw std::overflow_error("budget sums exceed 64-bit range");
    }
    alive_tri_.assign(tri_.size(), 1);
    for (std::size_t t = 0; t < tri_.size(); ++t) {
      for (int i = 0; i < 3; ++i) incident_[fill[tri_[t][i]]++] = static_cast<int>(t);
      apply(t, +1);
    }
  }

  int num_nodes() const { return n_; }
  std::size_t num_triangles() const { return tri_.size(); }
  std::size_t num_alive_triangles() const { return alive_count_; }
  bool alive(int u) const { return alive_node_[u] != 0; }
  PivotRatio ratio(int u) const { return {num_[u], den_[u]}; }
  std::int64_t total_num() const { return total_num_; }
  std::int64_t total_den() const { return total_den_; }

  // Removes the nodes and every triangle touching them.
  void remove(const std::vector<int>& nodes) {
    for (int u : nodes) alive_node_[u] = 0;
    for (int u : nodes) {
      for (std::size_t k = start_[u]; k < start_[u + 1]; ++k) {
        const int t = incident_[k];
        if (!alive_tri_[t]) continue;
        alive_tri_[t] = 0;
        apply(t, -1);
      }
    }
  }

 private:
  void apply(std::size_t t, int sign) {
    const auto& tri = tri_[t];
    for (int i = 0; i < 3; ++i) {
      const int u = tri[(i + 1) % 3];
      const int v = tri[(i + 2) % 3];
      const std::int64_t num = g_->is_positive(u, v) == inst_->is_positive(u, v) ? 1 : 0;
      const std::int64_t den = y_->fixed(u, v);
      num_[tri[i]] += sign * num;
      den_[tri[i]] += sign * den;
      total_num_ += sign * num;
      total_den_ += sign * den;
    }
    alive_count_ = sign > 0 ? alive_count_ + 1 : alive_count_ - 1;
  }

  const AuxGraph* g_;
  const SignedInstance* inst_;
  const EdgeBudgets* y_;
  int n_;
  std::vector<std::array<int, 3>> tri_;
  std::vector<std::size_t> start_;
  std::vector<int> incident_;
  std::vector<char> alive_tri_;
  std::vector<char> alive_node_;
  std::vector<std::int64_t> num_;
  std::vector<std::int64_t> den_;
  std::int64_t total_num_ = 0;
  std::int64_t total_den_ = 0;
  std::size_t alive_count_ = 0;
};

struct PivotStep {
  int pivot = 0;
  std::vector<int> members;
  // Deterministic strategy only: the pivot's ratio and the totals over all
  // surviving nodes at selection time (den in 2^-30 units).
  PivotRatio ratio;
  std::int64_t total_num = 0;
  std::int64_t total_den = 0;
};

struct PivotTrace {
  std::vector<PivotStep> steps;
};

struct PivotResult {
  Clustering clustering;
  PivotTrace trace;
};

// Called before each deterministic pivot choice with the live index.
using TriangleObserver = std::function<void(const TriangleIndex&)>;

namespace detail {

// Runs Pivot with pivots drawn by choose(remaining) until no node remains.
template <typename Choose, typename OnCluster>
PivotResult run_pivot(const AuxGraph& g, Choose&& choose, OnCluster&& on_cluster) {
  const int n = g.num_nodes();
  std::vector<char> removed(n, 0);
  std::vector<int> labels(n, -1);
  PivotResult result;
  int remaining = n;
  int next_label = 0;
  while (remaining > 0) {
    PivotStep step;
    step.pivot = choose(removed, step);
    if (step.pivot < 0 || step.pivot >= n || removed[step.pivot]) {
      throw std::logic_error("pivot choice must be a remaining node");
    }
    const auto* row = g.positive_matrix().row(step.pivot);
    for (int v = 0; v < n; ++v) {
      if (!removed[v] && (v == step.pivot || row[v])) step.members.push_back(v);
    }
    for (int v : step.members) {
      removed[v] = 1;
      labels[v] = next_label;
    }
    ++next_label;
    remaining -= static_cast<int>(step.members.size());
    on_cluster(step.members);
    result.trace.steps.push_back(std::move(step));
  }
  result.clustering = Clustering::from_labels(labels);
  return result;
}

}  // namespace detail

inline PivotResult pivot_random(const AuxGraph& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<int> pool(g.num_nodes());
  for (int i = 0; i < g.num_nodes(); ++i) pool[i] = i;
  return detail::run_pivot(
      g,
      [&](const std::vector<char>& removed, PivotStep&) {
        std::erase_if(pool, [&](int u) { return removed[u] != 0; });
        std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
        return pool[pick(rng)];
      },
      [](const std::vector<int>&) {});
}

// Uses the first remaining node of `order` as each pivot, then the smallest
// remaining id once order is exhausted.
inline PivotResult pivot_in_order(const AuxGraph& g, const std::vector<int>& order) {
  std::size_t pos = 0;
  return detail::run_pivot(
      g,
      [&](const std::vector<char>& removed, PivotStep&) {
        while (pos < order.size() && removed[order[pos]]) ++pos;
        if (pos < order.size()) return order[pos];
        int u = 0;
        while (removed[u]) ++u;
        return u;
      },
      [](const std::vector<int>&) {});
}

inline PivotResult pivot_deterministic(const AuxGraph& g, const SignedInstance& inst, const EdgeBudgets& y,
                                       const TriangleObserver& observer = {}) {
  TriangleIndex index(g, inst, y);
  const int n = g.num_nodes();
  return detail::run_pivot(
      g,
      [&](const std::vector<char>& removed, PivotStep& step) {
        if (observer) observer(index);
        int best = -1;
        for (int u = 0; u < n; ++u) {
          if (removed[u]) continue;
          if (best < 0 || ratio_less(index.ratio(u), index.ratio(best))) best = u;
        }
        step.ratio = index.ratio(best);
        step.total_num = index.total_num();
        step.total_den = index.total_den();
        return best;
      },
      [&](const std::vector<int>& members) { index.remove(members); });
}

}  // namespace ccc

#endif  // CCC_PIVOT_HPP_
