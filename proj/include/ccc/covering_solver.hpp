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

// Width-independent multiplicative-weights solver for covering LPs
// min c.x s.t. Ax >= 1, 0 <= x <= 1, with a certified stopping rule: the
// solver stops once a scaled primal point is within (1 + epsilon) of a dual
// lower bound built from the current row potentials.

#ifndef CCC_COVERING_SOLVER_HPP_
#define CCC_COVERING_SOLVER_HPP_

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ccc/common.hpp"
#include "ccc/instance.hpp"
#include "ccc/lp.hpp"

namespace ccc {

// Returned values are multiples of 2^-30, so sums of a few of them with small
// integer coefficients are exact in double precision.
inline constexpr double kValueGridScale = 1073741824.0;  // 2^30

inline double ceil_to_grid(double v) {
  if (!(v > 0.0)) return 0.0;
  if (v >= 1.0) return 1.0;
  return std::min(1.0, std::ceil(v * kValueGridScale) / kValueGridScale);
}

struct LpSolution {
  std::vector<double> values;
  double objective_value = 0.0;
  // Certified lower bound on the optimum of the program.
  double lower_bound = 0.0;
  std::int64_t increments = 0;
  int certificate_checks = 0;
  // Per-pair edge values; filled by attach_edge_values.
  SymmetricMatrix<double> x;
};

class SolverIterationLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::vector<std::size_t> check_feasibility(const CoveringProgram& prog,
                                                  std::span<const double> values) {
  std::vector<std::size_t> violated;
  for (std::size_t r = 0; r < prog.num_rows(); ++r) {
    double sum = 0.0;
    for (const auto& t : prog.row(r)) sum += t.coef * values[t.var];
    if (sum < 1.0) violated.push_back(r);
  }
  return violated;
}

inline std::vector<std::size_t> check_feasibility(const CoveringProgram& prog, const LpSolution& sol) {
  return check_feasibility(prog, std::span<const double>(sol.values));
}

inline void attach_edge_values(const SignedInstance& inst, const SupernodeStructure& sn,
                               const CoveringProgram& prog, LpSolution& sol) {
  sol.x = edge_values(inst, sn, prog, sol.values);
}

namespace detail {

// Rows are packed one per cache line.
class CoveringMwu {
 public:
  static constexpr int kMaxRowTerms = 3;
  static constexpr std::size_t kPrefetchDistance = 16;

  CoveringMwu(std::vector<double> cost, const std::vector<std::size_t>& row_start,
              const std::vector<LpTerm>& terms, double epsilon, std::uint64_t seed)
      : cost_(std::move(cost)),
        nv_(static_cast<int>(cost_.size())),
        m_(row_start.size() - 1),
        rows_(m_),
        epsilon_(epsilon),
        eta_(epsilon) {
    cstart_.assign(nv_ + 1, 0);
    for (std::size_t r = 0; r < m_; ++r) {
      Row& row = rows_[r];
      const std::size_t size = row_start[r + 1] - row_start[r];
      if (size == 0 || size > kMaxRowTerms) throw std::invalid_argument("rows must have one to three terms");
      row.size = static_cast<std::uint8_t>(size);
      for (std::size_t i = 0; i < size; ++i) {
        const LpTerm& t = terms[row_start[r] + i];
        row.var[i] = t.var;
        row.coef[i] = t.coef;
        ++cstart_[t.var + 1];
        if (t.coef < 1.0) box_ = false;
      }
    }
    for (int j = 0; j < nv_; ++j) cstart_[j + 1] += cstart_[j];
    crows_.resize(cstart_[nv_]);
    std::vector<std::size_t> fill(cstart_.begin(), cstart_.end() - 1);
    for (std::size_t r = 0; r < m_; ++r) {
      for (int i = 0; i < rows_[r].size; ++i) crows_[fill[rows_[r].var[i]]++] = static_cast<int>(r);
    }
    nnz_ = crows_.size();
    threshold_ = std::max(1.0, std::log(static_cast<double>(m_) + 1.0) / (eta_ * eta_));
    order_.resize(nv_);
    std::iota(order_.begin(), order_.end(), 0);
    std::mt19937_64 rng(seed);
    std::shuffle(order_.begin(), order_.end(), rng);
    x_.assign(nv_, 0.0);
    benefit_.assign(nv_, 0.0);
    active_deg_.assign(nv_, 0);
    step_coef_.assign(nv_, 0.0);
    best_primal_.assign(nv_, 1.0);
    best_p_ = box_ ? std::inner_product(cost_.begin(), cost_.end(), best_primal_.begin(), 0.0)
                   : std::numeric_limits<double>::infinity();
  }

  // Runs until the certificate holds. Returns the best primal point found.
  void run() {
    reset_potentials();
    const double cap = 10.0 * static_cast<double>(std::max<std::size_t>(nnz_, 1)) / (epsilon_ * epsilon_);
    std::size_t work_since_check = 0;
    while (true) {
      if (num_active_ == 0) {
        if (certify()) return;
        // Every row reached the threshold without a certificate: continue
        // with a finer step and a higher threshold.
        eta_ = std::max(eta_ / 2.0, epsilon_ / 4.0);
        threshold_ *= 2.0;
        reset_potentials();
        continue;
      }
      double tau = max_ratio();
      if (tau < 1e-150) {
        reset_potentials();
        tau = max_ratio();
      }
      const double level = tau / (1.0 + eta_);
      for (int j : order_) {
        while (active_deg_[j] > 0 && benefit_[j] >= level * cost_[j]) {
          work_since_check += increment(j);
          if (static_cast<double>(++increments_) > cap) {
            throw SolverIterationLimit("covering solver exceeded its increment cap");
          }
          if (work_since_check >= nnz_) {
            work_since_check = 0;
            if (certify()) return;
            reset_potentials();
          }
        }
        if (num_active_ == 0) break;
      }
    }
  }

  const std::vector<double>& best_primal() const { return best_primal_; }
  double best_lower_bound() const { return best_lb_; }
  std::int64_t increments() const { return increments_; }
  int checks() const { return checks_; }

 private:
  struct alignas(64) Row {
    double cov = 0.0;
    double p = 0.0;
    std::array<double, kMaxRowTerms> coef{};
    std::array<int, kMaxRowTerms> var{};
    std::uint8_t size = 0;
    bool active = true;

    double coef_of(int j) const {
      double c = 0.0;
      for (int i = 0; i < size; ++i) c += var[i] == j ? coef[i] : 0.0;
      return c;
    }
    double dot(const std::vector<double>& v) const {
      double s = 0.0;
      for (int i = 0; i < size; ++i) s += coef[i] * v[var[i]];
      return s;
    }
  };

  // Prefetches the row kPrefetchDistance entries ahead in a column walk.
  void prefetch_row(std::size_t k, std::size_t end) const {
#if defined(__GNUC__)
    if (k + kPrefetchDistance < end) __builtin_prefetch(&rows_[crows_[k + kPrefetchDistance]]);
#else
    static_cast<void>(k);
    static_cast<void>(end);
#endif
  }

  double max_ratio() const {
    double tau = 0.0;
    for (int j = 0; j < nv_; ++j) {
      if (active_deg_[j] > 0) tau = std::max(tau, benefit_[j] / cost_[j]);
    }
    return tau;
  }

  // Recomputes potentials relative to the least covered active row, and the
  // per-variable benefits from scratch.
  void reset_potentials() {
    double shift = std::numeric_limits<double>::infinity();
    num_active_ = 0;
    for (Row& row : rows_) {
      row.active = row.cov < threshold_;
      if (row.active) {
        ++num_active_;
        shift = std::min(shift, row.cov);
      }
    }
    shift_ = num_active_ > 0 ? shift : 0.0;
    std::fill(benefit_.begin(), benefit_.end(), 0.0);
    std::fill(active_deg_.begin(), active_deg_.end(), 0);
    std::fill(step_coef_.begin(), step_coef_.end(), 0.0);
    for (Row& row : rows_) {
      row.p = row.active ? std::exp(-eta_ * (row.cov - shift_)) : 0.0;
      if (!row.active) continue;
      for (int i = 0; i < row.size; ++i) {
        const int j = row.var[i];
        benefit_[j] += row.coef[i] * row.p;
        ++active_deg_[j];
        step_coef_[j] = std::max(step_coef_[j], row.coef_of(j));
      }
    }
  }

  // The step uses the largest active coefficient as of the last reset, which
  // bounds the current one from above.
  std::size_t increment(int j) {
    const double delta = 1.0 / step_coef_[j];
    x_[j] += delta;
    // Potentials decay by exp(-eta * a * delta), cached per coefficient value.
    double last_coef = -1.0;
    double factor = 1.0;
    for (std::size_t k = cstart_[j]; k < cstart_[j + 1]; ++k) {
      prefetch_row(k, cstart_[j + 1]);
      Row& row = rows_[crows_[k]];
      if (!row.active) continue;
      const double a = row.coef_of(j);
      row.cov += a * delta;
      const double old_p = row.p;
      if (row.cov >= threshold_) {
        row.active = false;
        row.p = 0.0;
        --num_active_;
        for (int i = 0; i < row.size; ++i) {
          benefit_[row.var[i]] -= row.coef[i] * old_p;
          --active_deg_[row.var[i]];
        }
      } else {
        if (a != last_coef) {
          last_coef = a;
          factor = std::exp(-eta_ * a * delta);
        }
        const double d = old_p * (factor - 1.0);
        row.p = old_p + d;
        for (int i = 0; i < row.size; ++i) benefit_[row.var[i]] += row.coef[i] * d;
      }
    }
    return cstart_[j + 1] - cstart_[j];
  }

  // Updates the best primal point and dual bound; true once they are within
  // a factor (1 + epsilon).
  bool certify() {
    ++checks_;
    std::vector<double> cover(m_, 0.0);
    double lambda = std::numeric_limits<double>::infinity();
    std::size_t uncovered = 0;
    for (std::size_t r = 0; r < m_; ++r) {
      cover[r] = rows_[r].dot(x_);
      lambda = std::min(lambda, cover[r]);
      uncovered += cover[r] <= 0.0 ? 1 : 0;
    }
    // Candidate scales: the least coverage, feasible as is, and coverage
    // quantiles, whose short rows are repaired.
    std::vector<double> scales;
    if (lambda > 0.0) scales.push_back(lambda);
    constexpr std::array<double, 3> kQuantiles{0.002, 0.01, 0.05};
    const auto quantile_index = [&](double q) { return static_cast<std::size_t>(q * static_cast<double>(m_ - 1)); };
    if (box_ && uncovered <= quantile_index(kQuantiles.back())) {
      std::vector<double> sorted(cover);
      auto from = sorted.begin();
      for (double q : kQuantiles) {
        const auto nth = sorted.begin() + static_cast<std::ptrdiff_t>(quantile_index(q));
        std::nth_element(from, nth, sorted.end());
        from = nth;
        if (*nth > (scales.empty() ? 0.0 : scales.back())) scales.push_back(*nth);
      }
    }
    for (double scale : scales) {
      std::vector<double> v(nv_);
      for (int j = 0; j < nv_; ++j) {
        const double scaled = x_[j] / scale;
        v[j] = box_ ? ceil_to_grid(scaled) : std::ceil(scaled * kValueGridScale) / kValueGridScale;
      }
      if (scale > lambda) repair(v);
      trim(v);
      const double p = std::inner_product(cost_.begin(), cost_.end(), v.begin(), 0.0);
      if (p < best_p_) {
        best_p_ = p;
        best_primal_ = std::move(v);
      }
    }

    // Dual weights exp(-eta * cover) on every row, scaled optimally.
    const double shift = lambda == std::numeric_limits<double>::infinity() ? 0.0 : lambda;
    std::vector<double> b(nv_, 0.0);
    double total = 0.0;
    for (std::size_t r = 0; r < m_; ++r) {
      const double w = std::exp(-eta_ * (cover[r] - shift));
      total += w;
      const Row& row = rows_[r];
      for (int i = 0; i < row.size; ++i) b[row.var[i]] += row.coef[i] * w;
    }
    best_lb_ = std::max(best_lb_, dual_value(b, total));
    return best_p_ <= (1.0 + epsilon_) * best_lb_;
  }

  // Raises the cheapest variables of every short row until it is covered.
  void repair(std::vector<double>& v) const {
    std::array<std::pair<double, int>, kMaxRowTerms> terms;
    for (const Row& row : rows_) {
      double sum = row.dot(v);
      if (sum >= 1.0) continue;
      for (int i = 0; i < row.size; ++i) terms[i] = {cost_[row.var[i]] / row.coef[i], i};
      std::sort(terms.begin(), terms.begin() + row.size);
      for (int t = 0; t < row.size; ++t) {
        const int i = terms[t].second;
        const int j = row.var[i];
        const double raised = ceil_to_grid(v[j] + (1.0 - sum) / row.coef[i]);
        sum += row.coef[i] * (raised - v[j]);
        v[j] = raised;
        if (sum >= 1.0) break;
      }
    }
  }

  // Lowers variables, most expensive first, as far as their rows' slack
  // allows.
  void trim(std::vector<double>& v) const {
    std::vector<double> slack(m_);
    for (std::size_t r = 0; r < m_; ++r) slack[r] = rows_[r].dot(v) - 1.0;
    if (trim_order_.empty()) {
      trim_order_.resize(nv_);
      std::iota(trim_order_.begin(), trim_order_.end(), 0);
      std::stable_sort(trim_order_.begin(), trim_order_.end(), [&](int a, int b) { return cost_[a] > cost_[b]; });
    }
    for (int j : trim_order_) {
      if (v[j] == 0.0) continue;
      double room = v[j];
      for (std::size_t k = cstart_[j]; k < cstart_[j + 1] && room > 0.0; ++k) {
        prefetch_row(k, cstart_[j + 1]);
        const int r = crows_[k];
        room = std::min(room, slack[r] / rows_[r].coef_of(j));
      }
      if (!(room > 0.0)) continue;
      const double lowered = ceil_to_grid(v[j] - room);
      const double drop = v[j] - lowered;
      if (drop <= 0.0) continue;
      v[j] = lowered;
      for (std::size_t k = cstart_[j]; k < cstart_[j + 1]; ++k) {
        const int r = crows_[k];
        slack[r] -= rows_[r].coef_of(j) * drop;
      }
    }
  }

  // max over s >= 0 of s*W - sum_j max(0, s*b_j - c_j) with the box, or
  // W / max_j(b_j / c_j) without it.
  double dual_value(const std::vector<double>& b, double total) const {
    std::vector<std::pair<double, double>> breaks;  // (c_j / b_j, b_j)
    breaks.reserve(nv_);
    for (int j = 0; j < nv_; ++j) {
      if (b[j] > 0.0) breaks.emplace_back(cost_[j] / b[j], b[j]);
    }
    if (breaks.empty()) return 0.0;
    std::sort(breaks.begin(), breaks.end());
    if (!box_) return breaks.front().first * total;
    double slope = total;
    double value = 0.0;
    double s = 0.0;
    for (const auto& [t, bj] : breaks) {
      value += slope * (t - s);
      s = t;
      slope -= bj;
      if (slope <= 0.0) break;
    }
    return value * (1.0 - 1e-12);
  }

  std::vector<double> cost_;
  int nv_;
  std::size_t m_;
  std::vector<Row> rows_;
  std::vector<std::size_t> cstart_;
  std::vector<int> crows_;
  std::size_t nnz_ = 0;
  bool box_ = true;
  double epsilon_;
  double eta_;
  double threshold_ = 1.0;
  double shift_ = 0.0;
  std::vector<int> order_;
  mutable std::vector<int> trim_order_;
  std::vector<double> x_;
  std::vector<double> benefit_;
  std::vector<int> active_deg_;
  std::vector<double> step_coef_;
  std::size_t num_active_ = 0;
  std::vector<double> best_primal_;
  double best_p_ = std::numeric_limits<double>::infinity();
  double best_lb_ = 0.0;
  std::int64_t increments_ = 0;
  int checks_ = 0;
};

}  // namespace detail

// Solves prog to within a factor (1 + epsilon) of its optimum. Variables with
// zero cost that appear in some row are set to 1 first; the remaining program
// is solved by multiplicative weights. The result is exactly feasible. Rows
// carry at most three terms, as ProgramBuilder guarantees.
inline LpSolution solve_covering(const CoveringProgram& prog, double epsilon, std::uint64_t seed = 0) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::invalid_argument("epsilon must lie in (0, 1)");
  const int nv = prog.var_count();
  const auto& cost = prog.objective();
  LpSolution sol;
  sol.values.assign(nv, 0.0);

  std::vector<char> in_row(nv, 0);
  for (std::size_t r = 0; r < prog.num_rows(); ++r) {
    for (const auto& t : prog.row(r)) in_row[t.var] = 1;
  }
  std::vector<int> reduced(nv, -1);
  std::vector<int> original;
  std::vector<double> reduced_cost;
  for (int j = 0; j < nv; ++j) {
    if (!in_row[j]) continue;
    if (cost[j] == 0.0) {
      sol.values[j] = 1.0;
    } else {
      reduced[j] = static_cast<int>(original.size());
      original.push_back(j);
      reduced_cost.push_back(cost[j]);
    }
  }
  std::vector<std::size_t> row_start{0};
  std::vector<LpTerm> terms;
  for (std::size_t r = 0; r < prog.num_rows(); ++r) {
    double fixed_cover = 0.0;
    for (const auto& t : prog.row(r)) {
      if (reduced[t.var] < 0) fixed_cover += t.coef * sol.values[t.var];
    }
    if (fixed_cover >= 1.0) continue;
    for (const auto& t : prog.row(r)) {
      if (reduced[t.var] >= 0) terms.push_back({reduced[t.var], t.coef / (1.0 - fixed_cover)});
    }
    row_start.push_back(terms.size());
  }

  if (row_start.size() > 1) {
    detail::CoveringMwu mwu(std::move(reduced_cost), row_start, terms, epsilon, seed);
    mwu.run();
    for (std::size_t j = 0; j < original.size(); ++j) sol.values[original[j]] = mwu.best_primal()[j];
    sol.lower_bound = prog.fixed_objective() + mwu.best_lower_bound();
    sol.increments = mwu.increments();
    sol.certificate_checks = mwu.checks();
  }

  // Rounding can only raise values, so this is a safeguard against
  // accumulated error in the solver's coverage sums.
  for (std::size_t r : check_feasibility(prog, sol)) {
    const auto row = prog.row(r);
    const auto best = std::max_element(row.begin(), row.end(),
                                       [](const LpTerm& a, const LpTerm& b) { return a.coef < b.coef; });
    sol.values[best->var] = 1.0;
  }
  sol.objective_value = prog.objective_value(sol.values);
  if (row_start.size() <= 1) sol.lower_bound = sol.objective_value;
  return sol;
}

}  // namespace ccc

#endif  // CCC_COVERING_SOLVER_HPP_
