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

// Auxiliary signed graph used for pivoting, its edge classes, the pivot-safety
// check, and an audit of the rounding invariants.

#ifndef CCC_AUX_GRAPH_HPP_
#define CCC_AUX_GRAPH_HPP_

#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ccc/common.hpp"
#include "ccc/covering_solver.hpp"
#include "ccc/dangerous.hpp"
#include "ccc/instance.hpp"
#include "ccc/lp.hpp"

namespace ccc {

// Sign in the input graph followed by sign in the auxiliary graph. B and O
// are both (+, -): B when the edge and its dangerous-pair partner are both
// flipped, O otherwise.
enum class EdgeClass : std::uint8_t { kMM, kMP, kPP, kB, kO };

inline const char* to_string(EdgeClass c) {
  switch (c) {
    case EdgeClass::kMM: return "--";
    case EdgeClass::kMP: return "-+";
    case EdgeClass::kPP: return "++";
    case EdgeClass::kB: return "b";
    case EdgeClass::kO: return "o";
  }
  return "?";
}

class AuxGraph {
 public:
  AuxGraph() = default;
  explicit AuxGraph(int n) : n_(n), positive_(n, 0), class_(n, static_cast<std::uint8_t>(EdgeClass::kMM)) {}

  int num_nodes() const { return n_; }
  bool is_positive(int u, int v) const { return positive_.get(u, v) != 0; }
  Sign sign(int u, int v) const { return is_positive(u, v) ? Sign::kPositive : Sign::kNegative; }
  void set_sign(int u, int v, Sign s) { positive_.set(u, v, s == Sign::kPositive ? 1 : 0); }

  EdgeClass edge_class(int u, int v) const { return static_cast<EdgeClass>(class_.get(u, v)); }
  void set_edge_class(int u, int v, EdgeClass c) { class_.set(u, v, static_cast<std::uint8_t>(c)); }

  const SymmetricMatrix<std::uint8_t>& positive_matrix() const { return positive_; }

  // Assigns classes from the signs of inst and of this graph.
  void classify(const SignedInstance& inst, const DangerousPairing& dp) {
    for (int u = 0; u < n_; ++u) {
      for (int v = u + 1; v < n_; ++v) {
        const bool g = inst.is_positive(u, v);
        const bool h = is_positive(u, v);
        EdgeClass c = EdgeClass::kMM;
        if (!g) {
          c = h ? EdgeClass::kMP : EdgeClass::kMM;
        } else if (h) {
          c = EdgeClass::kPP;
        } else {
          c = EdgeClass::kO;
          if (dp.contains(u, v)) {
            const NodePair r = dp.partner({u, v});
            if (inst.is_positive(r.u, r.v) && !is_positive(r.u, r.v)) c = EdgeClass::kB;
          }
        }
        set_edge_class(u, v, c);
      }
    }
  }

  friend bool operator==(const AuxGraph&, const AuxGraph&) = default;

 private:
  int n_ = 0;
  SymmetricMatrix<std::uint8_t> positive_;
  SymmetricMatrix<std::uint8_t> class_;
};

namespace detail {

inline AuxGraph intra_positive(const SupernodeStructure& sn, int n) {
  AuxGraph g(n);
  for (const auto& members : sn.members) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) g.set_sign(members[i], members[j], Sign::kPositive);
    }
  }
  return g;
}

inline void set_superedge(AuxGraph& g, const SupernodeStructure& sn, int a, int b, Sign s) {
  for (int u : sn.members[a]) {
    for (int v : sn.members[b]) g.set_sign(u, v, s);
  }
}

}  // namespace detail

// A superedge becomes positive iff it carries a positive edge outside the
// dangerous pairs and X+ < min(X-, 2/3). Intra-supernode pairs are positive.
inline AuxGraph build_aux_constrained(const SignedInstance& inst, const SupernodeStructure& sn,
                                      const DangerousPairing& dp, const CoveringProgram& prog,
                                      std::span<const double> values) {
  if (!prog.uses_superedges()) throw std::invalid_argument("constrained rounding needs a superedge program");
  const int n = inst.num_nodes();
  const int k = sn.count();
  std::vector<std::uint8_t> free_positive(static_cast<std::size_t>(k) * k, 0);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (inst.is_positive(u, v) && !sn.same(u, v) && !dp.contains(u, v)) {
        free_positive[static_cast<std::size_t>(sn.of(u)) * k + sn.of(v)] = 1;
        free_positive[static_cast<std::size_t>(sn.of(v)) * k + sn.of(u)] = 1;
      }
    }
  }
  AuxGraph g = detail::intra_positive(sn, n);
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      if (!free_positive[static_cast<std::size_t>(a) * k + b]) continue;
      const double xp = prog.value(VariableKind::kPlus, a, b, values);
      const double xm = prog.value(VariableKind::kMinus, a, b, values);
      if (xp < xm && 3.0 * xp < 2.0) detail::set_superedge(g, sn, a, b, Sign::kPositive);
    }
  }
  g.classify(inst, dp);
  return g;
}

inline AuxGraph build_aux_constrained(const SignedInstance& inst, const SupernodeStructure& sn,
                                      const DangerousPairing& dp, const CoveringProgram& prog,
                                      const LpSolution& sol) {
  return build_aux_constrained(inst, sn, dp, prog, std::span<const double>(sol.values));
}

// A superedge becomes positive iff X- >= X+.
inline AuxGraph build_aux_friendly(const SignedInstance& inst, const SupernodeStructure& sn,
                                   const CoveringProgram& prog, std::span<const double> values) {
  if (!inst.hostile().empty()) throw std::invalid_argument("friendly rounding requires no hostile pairs");
  if (!prog.uses_superedges()) throw std::invalid_argument("friendly rounding needs a superedge program");
  const int k = sn.count();
  AuxGraph g = detail::intra_positive(sn, inst.num_nodes());
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      const double xp = prog.value(VariableKind::kPlus, a, b, values);
      const double xm = prog.value(VariableKind::kMinus, a, b, values);
      if (xm >= xp) detail::set_superedge(g, sn, a, b, Sign::kPositive);
    }
  }
  g.classify(inst, DangerousPairing(inst.num_nodes()));
  return g;
}

inline AuxGraph build_aux_friendly(const SignedInstance& inst, const SupernodeStructure& sn,
                                   const CoveringProgram& prog, const LpSolution& sol) {
  return build_aux_friendly(inst, sn, prog, std::span<const double>(sol.values));
}

// The input graph with every dangerous-pair edge flipped to negative; the
// flipped edges are labelled B.
inline AuxGraph build_aux_hostile(const SignedInstance& inst, const DangerousPairing& dp) {
  if (!inst.friendly().empty()) throw std::invalid_argument("hostile rounding requires no friendly pairs");
  const int n = inst.num_nodes();
  AuxGraph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (inst.is_positive(u, v) && !dp.contains(u, v)) g.set_sign(u, v, Sign::kPositive);
    }
  }
  g.classify(inst, dp);
  return g;
}

struct PivotSafetyViolation {
  int condition = 0;  // 1: supernode coherence, 2: hostile separation
  int u = 0;
  int v = 0;
  int witness = -1;   // node whose signs differ, or common positive neighbour
};

inline std::vector<PivotSafetyViolation> verify_pivot_safe(const SignedInstance& inst,
                                                            const SupernodeStructure& sn,
                                                            const AuxGraph& g) {
  (void)inst;
  const int n = g.num_nodes();
  std::vector<PivotSafetyViolation> out;
  for (const auto& members : sn.members) {
    const int rep = members.front();
    for (std::size_t i = 1; i < members.size(); ++i) {
      const int u = members[i];
      if (!g.is_positive(rep, u)) {
        out.push_back({1, rep, u, -1});
        continue;
      }
      for (int w = 0; w < n; ++w) {
        if (w == rep || w == u) continue;
        if (g.is_positive(rep, w) != g.is_positive(u, w)) {
          out.push_back({1, rep, u, w});
          break;
        }
      }
    }
  }

  const std::size_t words = (static_cast<std::size_t>(n) + 63) / 64;
  std::vector<std::uint64_t> bits(words * n, 0);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u != v && g.is_positive(u, v)) bits[u * words + v / 64] |= std::uint64_t{1} << (v % 64);
    }
  }
  for (const auto& [a, b] : sn.hostile_superedges) {
    for (int u : sn.members[a]) {
      for (int v : sn.members[b]) {
        if (g.is_positive(u, v)) {
          out.push_back({2, std::min(u, v), std::max(u, v), -1});
          continue;
        }
        for (std::size_t w = 0; w < words; ++w) {
          const std::uint64_t common = bits[u * words + w] & bits[v * words + w];
          if (common != 0) {
            out.push_back({2, std::min(u, v), std::max(u, v), static_cast<int>(w * 64 + std::countr_zero(common))});
            break;
          }
        }
      }
    }
  }
  return out;
}

// Checks the LP-rounding invariants on a constrained build: every dangerous
// edge and its partner have x summing to at least 1, ++ edges have x < 2/3,
// -+ and o edges have x >= 1/3, |b| <= 2 * (sum of x over b), every bad
// triangle of the auxiliary graph spans three supernodes, and bad triangles
// whose negative edge is not in b are paid for by 3 * (sum of their x).
// Returns human-readable violations.
inline std::vector<std::string> audit_rounding(const SignedInstance& inst, const SupernodeStructure& sn,
                                               const DangerousPairing& dp, const AuxGraph& g,
                                               const SymmetricMatrix<double>& x) {
  std::vector<std::string> out;
  const int n = inst.num_nodes();
  auto pair_str = [](int u, int v) { return "(" + std::to_string(u) + "," + std::to_string(v) + ")"; };
  for (const auto& e : dp.edges()) {
    const NodePair r = dp.partner(e);
    if (x.get(e.u, e.v) + x.get(r.u, r.v) < 1.0) out.push_back("partner sum below 1 at " + pair_str(e.u, e.v));
  }
  std::int64_t b_count = 0;
  double b_sum = 0.0;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const EdgeClass c = g.edge_class(u, v);
      const double xv = x.get(u, v);
      if (c == EdgeClass::kPP && !(3.0 * xv < 2.0)) out.push_back("++ edge with x >= 2/3 at " + pair_str(u, v));
      if ((c == EdgeClass::kMP || c == EdgeClass::kO) && 3.0 * xv < 1.0) {
        out.push_back(std::string(to_string(c)) + " edge with x < 1/3 at " + pair_str(u, v));
      }
      if (c == EdgeClass::kB) {
        ++b_count;
        b_sum += xv;
      }
    }
  }
  if (static_cast<double>(b_count) > 2.0 * b_sum) out.push_back("|b| exceeds twice the b mass");

  for (int b = 0; b < n; ++b) {
    for (int a = 0; a < n; ++a) {
      if (a == b || !g.is_positive(a, b)) continue;
      for (int c = a + 1; c < n; ++c) {
        if (c == b || !g.is_positive(b, c) || g.is_positive(a, c)) continue;
        if (sn.same(a, b) || sn.same(b, c) || sn.same(a, c)) {
          out.push_back("bad triangle inside a supernode at " + pair_str(a, c) + "+" + std::to_string(b));
        }
        if (g.edge_class(a, c) == EdgeClass::kB) continue;
        const int unflipped = inst.is_positive(a, b) + inst.is_positive(b, c) + !inst.is_positive(a, c);
        if (unflipped > 3.0 * (x.get(a, b) + x.get(b, c) + x.get(a, c))) {
          out.push_back("unpaid bad triangle at " + pair_str(a, c) + "+" + std::to_string(b));
        }
      }
    }
  }
  return out;
}

}  // namespace ccc

#endif  // CCC_AUX_GRAPH_HPP_
