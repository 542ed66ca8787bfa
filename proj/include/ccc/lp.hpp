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

// Covering LPs for the three problem variants. Equalities of the relaxation
// (variable fixings and the tie between an edge variable and its superedge
// variable) are eliminated at build time, leaving min c.x s.t. Ax >= 1, x >= 0
// with non-negative data.

#ifndef CCC_LP_HPP_
#define CCC_LP_HPP_

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ccc/common.hpp"
#include "ccc/dangerous.hpp"
#include "ccc/heap_constraints.hpp"
#include "ccc/instance.hpp"

namespace ccc {

enum class LpVariant { kConstrained, kFriendly, kHostile };

inline const char* to_string(LpVariant v) {
  switch (v) {
    case LpVariant::kConstrained: return "constrained";
    case LpVariant::kFriendly: return "friendly";
    case LpVariant::kHostile: return "hostile";
  }
  return "?";
}

// X+ / X- of a superedge (a, b are supernode indices, a <= b), or x of a node
// pair (a < b) in the hostile-only program.
enum class VariableKind : std::uint8_t { kPlus, kMinus, kPair };

struct VariableKey {
  VariableKind kind = VariableKind::kPair;
  int a = 0;
  int b = 0;

  friend bool operator==(const VariableKey&, const VariableKey&) = default;
};

inline std::string variable_name(const VariableKey& key) {
  const std::string args = "[" + std::to_string(key.a) + "," + std::to_string(key.b) + "]";
  switch (key.kind) {
    case VariableKind::kPlus: return "X+" + args;
    case VariableKind::kMinus: return "X-" + args;
    case VariableKind::kPair: return "x" + args;
  }
  return args;
}

struct LpTerm {
  int var = 0;
  double coef = 0.0;

  friend auto operator<=>(const LpTerm&, const LpTerm&) = default;
};

class LpConstructionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct LpBuildOptions {
  // Fix variables with zero objective weight to 1 and drop the rows they
  // cover. The optimum is unchanged; the row count drops from cubic in the
  // supernode count to the number of rows whose variables all carry cost.
  bool fix_zero_cost = false;
};

class CoveringProgram {
 public:
  static constexpr int kFixedZero = -1;
  static constexpr int kFixedOne = -2;

  LpVariant variant() const { return variant_; }
  int var_count() const { return static_cast<int>(keys_.size()); }
  std::size_t num_rows() const { return row_start_.size() - 1; }
  std::size_t num_nonzeros() const { return terms_.size(); }

  const std::vector<VariableKey>& keys() const { return keys_; }
  const std::vector<double>& objective() const { return objective_; }
  std::span<const LpTerm> row(std::size_t r) const {
    return {terms_.data() + row_start_[r], terms_.data() + row_start_[r + 1]};
  }

  // Eliminated variables and their values.
  const std::vector<std::pair<VariableKey, double>>& fixed() const { return fixed_; }
  // Objective contribution of the eliminated variables.
  double fixed_objective() const { return fixed_objective_; }

  // Free-variable index, kFixedZero or kFixedOne. For superedge programs a and
  // b are supernodes; for the hostile program they are nodes.
  int slot(VariableKind kind, int a, int b) const {
    switch (kind) {
      case VariableKind::kPlus: return plus_.get(a, b);
      case VariableKind::kMinus: return minus_.get(a, b);
      case VariableKind::kPair: return pair_.get(a, b);
    }
    return kFixedZero;
  }

  double value(VariableKind kind, int a, int b, std::span<const double> values) const {
    const int s = slot(kind, a, b);
    if (s >= 0) return values[s];
    return s == kFixedOne ? 1.0 : 0.0;
  }

  double objective_value(std::span<const double> values) const {
    double total = fixed_objective_;
    for (int j = 0; j < var_count(); ++j) total += objective_[j] * values[j];
    return total;
  }

  bool uses_superedges() const { return variant_ != LpVariant::kHostile; }

 private:
  friend class ProgramBuilder;

  LpVariant variant_ = LpVariant::kConstrained;
  std::vector<VariableKey> keys_;
  std::vector<double> objective_;
  std::vector<std::size_t> row_start_{0};
  std::vector<LpTerm> terms_;
  std::vector<std::pair<VariableKey, double>> fixed_;
  double fixed_objective_ = 0.0;
  SymmetricMatrix<int> plus_;
  SymmetricMatrix<int> minus_;
  SymmetricMatrix<int> pair_;
};

// Assembles a CoveringProgram, simplifying rows against fixed variables.
class ProgramBuilder {
 public:
  // Rows have at most three terms before merging.
  using RawRow = std::array<std::pair<int, double>, 3>;

  explicit ProgramBuilder(LpVariant variant) { prog_.variant_ = variant; }

  void init_superedge_tables(int k) {
    prog_.plus_ = SymmetricMatrix<int>(k, CoveringProgram::kFixedZero);
    prog_.minus_ = SymmetricMatrix<int>(k, CoveringProgram::kFixedZero);
  }
  void init_pair_table(int n) { prog_.pair_ = SymmetricMatrix<int>(n, CoveringProgram::kFixedZero); }

  int add_variable(VariableKey key, double weight) {
    const int idx = prog_.var_count();
    prog_.keys_.push_back(key);
    prog_.objective_.push_back(weight);
    table(key.kind).set(key.a, key.b, idx);
    return idx;
  }

  void fix_variable(VariableKey key, bool one, double weight) {
    prog_.fixed_.emplace_back(key, one ? 1.0 : 0.0);
    if (one) prog_.fixed_objective_ += weight;
    table(key.kind).set(key.a, key.b, one ? CoveringProgram::kFixedOne : CoveringProgram::kFixedZero);
  }

  int slot(VariableKind kind, int a, int b) const { return prog_.slot(kind, a, b); }

  // Adds sum coef * var >= 1 over `count` raw terms given as (slot, coef).
  // Returns false if fixed variables already satisfy the row.
  bool add_row(const RawRow& raw, int count) {
    std::array<LpTerm, 3> merged{};
    int size = 0;
    if (!simplify(raw, count, merged, size)) return false;
    append(merged, size);
    return true;
  }

  // Like add_row but collected separately and deduplicated on finish().
  void add_unique_row(const RawRow& raw, int count) {
    SmallRow row;
    if (!simplify(raw, count, row.terms, row.size)) return;
    pending_unique_.push_back(row);
  }

  CoveringProgram finish() {
    std::sort(pending_unique_.begin(), pending_unique_.end());
    pending_unique_.erase(std::unique(pending_unique_.begin(), pending_unique_.end()),
                          pending_unique_.end());
    for (const auto& row : pending_unique_) append(row.terms, row.size);
    pending_unique_.clear();
    return std::move(prog_);
  }

 private:
  struct SmallRow {
    std::array<LpTerm, 3> terms{};
    int size = 0;
    friend auto operator<=>(const SmallRow&, const SmallRow&) = default;
  };

  SymmetricMatrix<int>& table(VariableKind kind) {
    switch (kind) {
      case VariableKind::kPlus: return prog_.plus_;
      case VariableKind::kMinus: return prog_.minus_;
      case VariableKind::kPair: return prog_.pair_;
    }
    return prog_.pair_;
  }

  static bool simplify(const RawRow& raw, int count, std::array<LpTerm, 3>& out, int& size) {
    double fixed_cover = 0.0;
    size = 0;
    for (int i = 0; i < count; ++i) {
      const auto [slot, coef] = raw[i];
      if (slot == CoveringProgram::kFixedOne) {
        fixed_cover += coef;
      } else if (slot >= 0) {
        int t = 0;
        while (t < size && out[t].var != slot) ++t;
        if (t == size) out[size++] = {slot, 0.0};
        out[t].coef += coef;
      }
    }
    if (fixed_cover >= 1.0) return false;
    if (size == 0) throw LpConstructionError("covering row reduced to 0 >= 1 by variable fixings");
    // Fixed ones only come with integer coefficients here, so this never
    // rescales in practice; kept so the row stays a true covering row.
    if (fixed_cover > 0.0) {
      for (int t = 0; t < size; ++t) out[t].coef /= 1.0 - fixed_cover;
    }
    std::sort(out.begin(), out.begin() + size);
    return true;
  }

  void append(const std::array<LpTerm, 3>& terms, int size) {
    prog_.terms_.insert(prog_.terms_.end(), terms.begin(), terms.begin() + size);
    prog_.row_start_.push_back(prog_.terms_.size());
  }

  CoveringProgram prog_;
  std::vector<SmallRow> pending_unique_;
};

namespace detail {

struct SuperedgeCounts {
  int k = 0;
  std::vector<std::int64_t> positive;
  std::vector<std::int64_t> negative;

  std::int64_t pos(int a, int b) const { return positive[index(a, b)]; }
  std::int64_t neg(int a, int b) const { return negative[index(a, b)]; }
  std::size_t index(int a, int b) const {
    return a < b ? static_cast<std::size_t>(a) * k + b : static_cast<std::size_t>(b) * k + a;
  }
};

inline SuperedgeCounts count_superedges(const SignedInstance& inst, const SupernodeStructure& sn) {
  SuperedgeCounts c;
  c.k = sn.count();
  c.positive.assign(static_cast<std::size_t>(c.k) * c.k, 0);
  c.negative.assign(static_cast<std::size_t>(c.k) * c.k, 0);
  const int n = inst.num_nodes();
  for (int u = 0; u < n; ++u) {
    const auto* row = inst.positive_matrix().row(u);
    for (int v = u + 1; v < n; ++v) {
      const std::size_t idx = c.index(sn.of(u), sn.of(v));
      (row[v] ? c.positive : c.negative)[idx] += 1;
    }
  }
  return c;
}

inline void require_consistent(const SignedInstance& inst, const SupernodeStructure& sn) {
  if (!is_consistent(inst, sn)) {
    throw std::invalid_argument("instance must be in consistent form");
  }
}

// Superedge variables, pairwise rows and the three triangle orientations per
// supernode triple; shared by the constrained and friendly programs.
inline void add_superedge_structure(ProgramBuilder& b, const SuperedgeCounts& counts,
                                    const SupernodeStructure& sn, bool hostile_fixings,
                                    const LpBuildOptions& opts) {
  const int k = sn.count();
  b.init_superedge_tables(k);
  for (int a = 0; a < k; ++a) {
    b.fix_variable({VariableKind::kPlus, a, a}, false, 0.0);
    b.fix_variable({VariableKind::kMinus, a, a}, true, static_cast<double>(counts.neg(a, a)));
  }
  for (int a = 0; a < k; ++a) {
    for (int c = a + 1; c < k; ++c) {
      const double wp = static_cast<double>(counts.pos(a, c));
      const double wm = static_cast<double>(counts.neg(a, c));
      if (hostile_fixings && sn.hostile(a, c)) {
        b.fix_variable({VariableKind::kMinus, a, c}, false, wm);
        b.fix_variable({VariableKind::kPlus, a, c}, true, wp);
        continue;
      }
      if (opts.fix_zero_cost && wp == 0.0) {
        b.fix_variable({VariableKind::kPlus, a, c}, true, 0.0);
      } else {
        b.add_variable({VariableKind::kPlus, a, c}, wp);
      }
      if (opts.fix_zero_cost && wm == 0.0) {
        b.fix_variable({VariableKind::kMinus, a, c}, true, 0.0);
      } else {
        b.add_variable({VariableKind::kMinus, a, c}, wm);
      }
    }
  }

  using Raw = ProgramBuilder::RawRow;
  for (int a = 0; a < k; ++a) {
    for (int c = a + 1; c < k; ++c) {
      b.add_row(Raw{{{b.slot(VariableKind::kPlus, a, c), 1.0},
                     {b.slot(VariableKind::kMinus, a, c), 1.0},
                     {CoveringProgram::kFixedZero, 0.0}}},
                2);
    }
  }
  for (int a = 0; a < k; ++a) {
    for (int bb = a + 1; bb < k; ++bb) {
      const int p_ab = b.slot(VariableKind::kPlus, a, bb);
      const int m_ab = b.slot(VariableKind::kMinus, a, bb);
      if (p_ab == CoveringProgram::kFixedOne && m_ab == CoveringProgram::kFixedOne) continue;
      for (int c = bb + 1; c < k; ++c) {
        const int p_bc = b.slot(VariableKind::kPlus, bb, c);
        const int m_bc = b.slot(VariableKind::kMinus, bb, c);
        const int p_ac = b.slot(VariableKind::kPlus, a, c);
        const int m_ac = b.slot(VariableKind::kMinus, a, c);
        b.add_row(Raw{{{p_ab, 1.0}, {p_bc, 1.0}, {m_ac, 1.0}}}, 3);
        b.add_row(Raw{{{p_ab, 1.0}, {m_bc, 1.0}, {p_ac, 1.0}}}, 3);
        b.add_row(Raw{{{m_ab, 1.0}, {p_bc, 1.0}, {p_ac, 1.0}}}, 3);
      }
    }
  }
}

}  // namespace detail

// Relaxation for instances with both friendly and hostile pairs: superedge
// variables, pairwise and triangle rows, plus one row per HEAP triple with
// each edge resolved to its superedge X+ variable.
inline CoveringProgram build_constrained_lp(const SignedInstance& inst, const SupernodeStructure& sn,
                                            const DangerousPairing& dp, const HeapConstraintSet& heaps,
                                            const LpBuildOptions& opts = {}) {
  (void)dp;  // rows reference partner edges through the HEAP triples
  detail::require_consistent(inst, sn);
  ProgramBuilder b(LpVariant::kConstrained);
  const auto counts = detail::count_superedges(inst, sn);
  detail::add_superedge_structure(b, counts, sn, /*hostile_fixings=*/true, opts);
  for (const auto& triple : heaps.triples) {
    ProgramBuilder::RawRow raw{};
    for (int i = 0; i < 3; ++i) {
      raw[i] = {b.slot(VariableKind::kPlus, sn.of(triple[i].u), sn.of(triple[i].v)), 1.0};
    }
    b.add_unique_row(raw, 3);
  }
  return b.finish();
}

// Friendly-only relaxation: no HEAP rows and no hostile fixings.
inline CoveringProgram build_friendly_lp(const SignedInstance& inst, const SupernodeStructure& sn,
                                         const LpBuildOptions& opts = {}) {
  if (!inst.hostile().empty()) throw std::invalid_argument("friendly LP requires no hostile pairs");
  detail::require_consistent(inst, sn);
  ProgramBuilder b(LpVariant::kFriendly);
  const auto counts = detail::count_superedges(inst, sn);
  detail::add_superedge_structure(b, counts, sn, /*hostile_fixings=*/false, opts);
  return b.finish();
}

// Hostile-only relaxation: one variable per non-hostile pair, one row per bad
// triangle of the input graph, hostile pairs fixed to zero.
inline CoveringProgram build_hostile_lp(const SignedInstance& inst) {
  if (!inst.friendly().empty()) throw std::invalid_argument("hostile LP requires no friendly pairs");
  const int n = inst.num_nodes();
  for (const auto& e : inst.hostile()) {
    if (inst.is_positive(e.u, e.v)) throw std::invalid_argument("instance must be in consistent form");
  }
  ProgramBuilder b(LpVariant::kHostile);
  b.init_pair_table(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (inst.is_hostile(u, v)) {
        b.fix_variable({VariableKind::kPair, u, v}, false, 1.0);
      } else {
        b.add_variable({VariableKind::kPair, u, v}, 1.0);
      }
    }
  }
  const auto& pos = inst.positive_matrix();
  for (int a = 0; a < n; ++a) {
    for (int c = a + 1; c < n; ++c) {
      const int s_ac = b.slot(VariableKind::kPair, a, c);
      for (int d = c + 1; d < n; ++d) {
        const int positives = pos.get(a, c) + pos.get(c, d) + pos.get(a, d);
        if (positives != 2) continue;
        b.add_row(ProgramBuilder::RawRow{{{s_ac, 1.0},
                                          {b.slot(VariableKind::kPair, c, d), 1.0},
                                          {b.slot(VariableKind::kPair, a, d), 1.0}}},
                  3);
      }
    }
  }
  return b.finish();
}

// The dangerous pairing plays no part in the hostile relaxation's rows; this
// overload exists for call sites that carry it through the pipeline.
inline CoveringProgram build_hostile_lp(const SignedInstance& inst, const DangerousPairing& /*dp*/) {
  return build_hostile_lp(inst);
}

// x_uv for every pair: the superedge X+ value for positive pairs and X- for
// negative pairs, or the pair variable of the hostile program.
inline SymmetricMatrix<double> edge_values(const SignedInstance& inst, const SupernodeStructure& sn,
                                           const CoveringProgram& prog,
                                           std::span<const double> values) {
  const int n = inst.num_nodes();
  SymmetricMatrix<double> x(n, 0.0);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      double val = 0.0;
      if (prog.uses_superedges()) {
        const auto kind = inst.is_positive(u, v) ? VariableKind::kPlus : VariableKind::kMinus;
        val = prog.value(kind, sn.of(u), sn.of(v), values);
      } else {
        val = prog.value(VariableKind::kPair, u, v, values);
      }
      x.set(u, v, val);
    }
  }
  return x;
}

}  // namespace ccc

#endif  // CCC_LP_HPP_
