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

// Brute-force references for small instances.

#ifndef CCC_ORACLE_HPP_
#define CCC_ORACLE_HPP_

#include <cstdint>
#include <functional>
#include <limits>
#include <stdexcept>
#include <vector>

#include "ccc/aux_graph.hpp"
#include "ccc/common.hpp"
#include "ccc/instance.hpp"
#include "ccc/pivot.hpp"

namespace ccc {

class TooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kMaxOracleSupernodes = 12;

struct ExactResult {
  std::int64_t opt_cost = 0;
  Clustering opt_clustering;
  std::int64_t num_feasible = 0;
};

namespace detail {

// Depth-first enumeration of restricted-growth strings over the supernodes,
// skipping prefixes that put a hostile superedge inside one block.
class SupernodePartitions {
 public:
  explicit SupernodePartitions(const SupernodeStructure& sn) : sn_(sn), k_(sn.count()), block_(k_, -1) {}

  // visit(block_of_supernode) for every feasible partition in enumeration
  // order; extend(i, b) may return false to prune.
  template <typename Extend, typename Retract, typename Visit>
  void run(Extend&& extend, Retract&& retract, Visit&& visit) {
    if (k_ == 0) {
      visit(block_);
      return;
    }
    recurse(0, 0, extend, retract, visit);
  }

 private:
  template <typename Extend, typename Retract, typename Visit>
  void recurse(int i, int blocks, Extend& extend, Retract& retract, Visit& visit) {
    if (i == k_) {
      visit(block_);
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) ok = !(block_[j] == b && sn_.hostile(i, j));
      if (!ok) continue;
      block_[i] = b;
      extend(i, b, block_);
      recurse(i + 1, b == blocks ? blocks + 1 : blocks, extend, retract, visit);
      retract(i, b, block_);
      block_[i] = -1;
    }
  }

  const SupernodeStructure& sn_;
  int k_;
  std::vector<int> block_;
};

inline Clustering expand(const SupernodeStructure& sn, const std::vector<int>& block) {
  std::vector<int> labels(sn.supernode_of.size());
  for (std::size_t u = 0; u < labels.size(); ++u) labels[u] = block[sn.supernode_of[u]];
  return Clustering::from_labels(labels);
}

}  // namespace detail

// Minimum-cost feasible clustering by enumerating partitions of supernodes.
// Ties keep the first partition in enumeration order.
inline ExactResult exact_opt(const SignedInstance& inst) {
  const SupernodeStructure sn = compute_supernodes(inst);
  const int k = sn.count();
  if (k > kMaxOracleSupernodes) throw TooLarge("exact oracle supports at most 12 supernodes");
  std::vector<std::int64_t> pos(static_cast<std::size_t>(k) * k, 0);
  std::vector<std::int64_t> neg(static_cast<std::size_t>(k) * k, 0);
  std::int64_t base = 0;
  const int n = inst.num_nodes();
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const int a = sn.of(u), b = sn.of(v);
      const bool p = inst.is_positive(u, v);
      if (a == b) {
        base += p ? 0 : 1;
        continue;
      }
      auto& cell = p ? pos : neg;
      cell[static_cast<std::size_t>(a) * k + b] += 1;
      cell[static_cast<std::size_t>(b) * k + a] += 1;
    }
  }
  ExactResult best;
  best.opt_cost = std::numeric_limits<std::int64_t>::max();
  std::vector<std::int64_t> partial(k + 1, base);
  detail::SupernodePartitions parts(sn);
  parts.run(
      [&](int i, int b, const std::vector<int>& block) {
        std::int64_t c = partial[i];
        for (int j = 0; j < i; ++j) {
          const std::size_t idx = static_cast<std::size_t>(i) * k + j;
          c += block[j] == b ? neg[idx] : pos[idx];
        }
        partial[i + 1] = c;
      },
      [](int, int, const std::vector<int>&) {},
      [&](const std::vector<int>& block) {
        ++best.num_feasible;
        if (partial[k] < best.opt_cost) {
          best.opt_cost = partial[k];
          best.opt_clustering = detail::expand(sn, block);
        }
      });
  return best;
}

// Calls visit for every feasible clustering of inst.
inline void for_each_feasible_clustering(const SignedInstance& inst,
                                         const std::function<void(const Clustering&)>& visit) {
  const SupernodeStructure sn = compute_supernodes(inst);
  if (sn.count() > kMaxOracleSupernodes) throw TooLarge("exact oracle supports at most 12 supernodes");
  detail::SupernodePartitions parts(sn);
  parts.run([](int, int, const std::vector<int>&) {}, [](int, int, const std::vector<int>&) {},
            [&](const std::vector<int>& block) { visit(detail::expand(sn, block)); });
}

// Optimum of plain correlation clustering (constraints ignored) over all
// partitions of the nodes.
inline std::int64_t exact_opt_unconstrained(const SignedInstance& inst) {
  const int n = inst.num_nodes();
  if (n > kMaxOracleSupernodes) throw TooLarge("exact oracle supports at most 12 nodes");
  SignedInstance plain(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) plain.set_sign(u, v, inst.sign(u, v));
  }
  return exact_opt(plain).opt_cost;
}

// The pivot-selection ratio of p over the surviving nodes, recomputed from
// the definition in O(n^2).
inline PivotRatio slow_ratio_check(const AuxGraph& g, const SignedInstance& inst, const EdgeBudgets& y,
                                   const std::vector<char>& surviving, int p) {
  PivotRatio r;
  const int n = g.num_nodes();
  for (int u = 0; u < n; ++u) {
    if (u == p || !surviving[u]) continue;
    for (int v = u + 1; v < n; ++v) {
      if (v == p || !surviving[v]) continue;
      const bool pu = g.is_positive(p, u);
      const bool pv = g.is_positive(p, v);
      const bool uv = g.is_positive(u, v);
      const bool bad = uv ? pu != pv : pu && pv;
      if (!bad) continue;
      if (uv == inst.is_positive(u, v)) ++r.num;
      r.den += y.fixed(u, v);
    }
  }
  return r;
}

}  // namespace ccc

#endif  // CCC_ORACLE_HPP_
