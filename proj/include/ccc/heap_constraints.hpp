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

#ifndef CCC_HEAP_CONSTRAINTS_HPP_
#define CCC_HEAP_CONSTRAINTS_HPP_

#include <algorithm>
#include <array>
#include <vector>

#include "ccc/common.hpp"
#include "ccc/dangerous.hpp"
#include "ccc/instance.hpp"

namespace ccc {

// Three positive edges, sorted; at least one is cut by every feasible
// clustering. Entries may repeat if the partner edge coincides with a side.
using EdgeTriple = std::array<NodePair, 3>;

struct HeapConstraintSet {
  std::vector<EdgeTriple> triples;  // sorted, unique
};

inline EdgeTriple make_edge_triple(NodePair x, NodePair y, NodePair z) {
  EdgeTriple t{x, y, z};
  std::sort(t.begin(), t.end());
  return t;
}

// For every covered edge ac and every node b outside S(a) and S(c) with ab
// and bc positive, emits {ab, bc, partner(ac)}.
inline HeapConstraintSet find_heaps(const SignedInstance& inst, const SupernodeStructure& sn,
                                    const DangerousPairing& dp) {
  HeapConstraintSet out;
  const int n = inst.num_nodes();
  const auto& pos = inst.positive_matrix();
  for (const auto& ac : dp.edges()) {
    const NodePair partner = dp.partner(ac);
    const int sa = sn.of(ac.u);
    const int sc = sn.of(ac.v);
    const auto* row_a = pos.row(ac.u);
    const auto* row_c = pos.row(ac.v);
    for (int b = 0; b < n; ++b) {
      if (!row_a[b] || !row_c[b]) continue;
      const int sb = sn.of(b);
      if (sb == sa || sb == sc) continue;
      out.triples.push_back(make_edge_triple({ac.u, b}, {b, ac.v}, partner));
    }
  }
  std::sort(out.triples.begin(), out.triples.end());
  out.triples.erase(std::unique(out.triples.begin(), out.triples.end()), out.triples.end());
  return out;
}

}  // namespace ccc

#endif  // CCC_HEAP_CONSTRAINTS_HPP_
