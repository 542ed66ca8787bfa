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

#ifndef CCC_DANGEROUS_HPP_
#define CCC_DANGEROUS_HPP_

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "ccc/common.hpp"
#include "ccc/instance.hpp"

namespace ccc {

// Two positive edges (a, b) and (c, d) where b and c share a supernode and
// the supernodes of a and d are hostile. Any feasible clustering cuts at
// least one of the two edges.
struct DangerousPair {
  int a = 0;
  int b = 0;
  int c = 0;
  int d = 0;

  NodePair first() const { return {a, b}; }
  NodePair second() const { return {c, d}; }

  friend bool operator==(const DangerousPair&, const DangerousPair&) = default;
};

// Edge-disjoint set of dangerous pairs together with the partner map that
// sends each covered edge to the other edge of its pair.
class DangerousPairing {
 public:
  DangerousPairing() = default;
  explicit DangerousPairing(int n) : pair_of_(n, -1) {}

  const std::vector<DangerousPair>& pairs() const { return pairs_; }
  bool empty() const { return pairs_.empty(); }

  bool contains(int u, int v) const { return u != v && pair_of_.get(u, v) >= 0; }
  bool contains(NodePair e) const { return contains(e.u, e.v); }

  // Index into pairs() of the pair covering uv, or -1.
  int pair_index(int u, int v) const { return u == v ? -1 : pair_of_.get(u, v); }

  NodePair partner(NodePair e) const {
    const int idx = pair_index(e.u, e.v);
    if (idx < 0) throw std::out_of_range("edge is not in any dangerous pair");
    const auto& p = pairs_[idx];
    return p.first() == e ? p.second() : p.first();
  }

  // Covered edges in ascending order.
  std::vector<NodePair> edges() const {
    std::vector<NodePair> out;
    const int n = pair_of_.size();
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (pair_of_.get(u, v) >= 0) out.emplace_back(u, v);
      }
    }
    return out;
  }

  std::size_t num_edges() const { return 2 * pairs_.size(); }

  void add(const DangerousPair& p) {
    if (contains(p.a, p.b) || contains(p.c, p.d)) {
      throw std::logic_error("dangerous pairs must be edge-disjoint");
    }
    const int idx = static_cast<int>(pairs_.size());
    pairs_.push_back(p);
    pair_of_.set(p.a, p.b, idx);
    pair_of_.set(p.c, p.d, idx);
  }

 private:
  std::vector<DangerousPair> pairs_;
  SymmetricMatrix<int> pair_of_;
};

// Greedy maximal edge-disjoint dangerous pairing. Positive inter-supernode
// edges ab are visited in lexicographic order and supernodes D in ascending
// index order; for each D the hostile-to-A branch is tried before the
// hostile-to-B branch, and the witness cd is the lexicographically smallest
// unused positive edge of the relevant superedge. Requires consistent form.
inline DangerousPairing compute_dangerous_pairs(const SignedInstance& inst,
                                                const SupernodeStructure& sn) {
  const int n = inst.num_nodes();
  const int k = sn.count();
  DangerousPairing dp(n);
  if (sn.hostile_superedges.empty()) return dp;

  const auto slot = [k](int x, int y) {
    return x < y ? static_cast<std::size_t>(x) * k + y : static_cast<std::size_t>(y) * k + x;
  };
  std::vector<std::vector<NodePair>> superedge_positives(static_cast<std::size_t>(k) * k);
  std::vector<NodePair> candidates;
  for (const auto& e : inst.positive_edges()) {
    const int su = sn.of(e.u);
    const int sv = sn.of(e.v);
    if (su == sv) continue;
    superedge_positives[slot(su, sv)].push_back(e);
    candidates.push_back(e);
  }
  // Membership only grows, so the first unused edge of each list moves forward.
  std::vector<std::size_t> cursor(superedge_positives.size(), 0);
  const auto first_unused = [&](int x, int y) -> const NodePair* {
    const std::size_t s = slot(x, y);
    const auto& list = superedge_positives[s];
    std::size_t& i = cursor[s];
    while (i < list.size() && dp.contains(list[i])) ++i;
    return i < list.size() ? &list[i] : nullptr;
  };
  // Orients edge e so that its first endpoint lies in supernode `shared`.
  const auto from_supernode = [&](NodePair e, int shared) {
    return sn.of(e.u) == shared ? std::pair{e.u, e.v} : std::pair{e.v, e.u};
  };

  for (const auto& ab : candidates) {
    if (dp.contains(ab)) continue;
    const int a = ab.u;
    const int b = ab.v;
    const int sa = sn.of(a);
    const int sb = sn.of(b);
    for (int d = 0; d < k; ++d) {
      if (d == sa || d == sb) continue;
      if (sn.hostile(sa, d)) {
        if (const NodePair* cd = first_unused(sb, d)) {
          const auto [c, far] = from_supernode(*cd, sb);
          dp.add({a, b, c, far});
          break;
        }
      }
      if (sn.hostile(sb, d)) {
        if (const NodePair* cd = first_unused(sa, d)) {
          const auto [c, far] = from_supernode(*cd, sa);
          dp.add({b, a, c, far});
          break;
        }
      }
    }
  }
  return dp;
}

}  // namespace ccc

#endif  // CCC_DANGEROUS_HPP_
