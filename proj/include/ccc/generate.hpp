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

// Random instances with a planted feasible clustering.

#ifndef CCC_GENERATE_HPP_
#define CCC_GENERATE_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "ccc/common.hpp"
#include "ccc/instance.hpp"

namespace ccc {

struct GenSpec {
  int n = 10;
  int k = 2;
  double noise = 0.0;
  double friendly = 0.0;  // fraction of intra-cluster pairs made friendly
  double hostile = 0.0;   // fraction of inter-cluster pairs made hostile
  std::uint64_t seed = 0;
  // Adds a friendly path whose endpoints are hostile, so no feasible
  // clustering exists.
  bool infeasible = false;
};

struct PlantedInstance {
  SignedInstance instance;
  Clustering planted;
};

struct InconsistencySpec {
  int intra_flips = 0;    // positive intra-supernode pairs turned negative
  int hostile_flips = 0;  // negative hostile-superedge pairs turned positive
};

namespace detail {

inline void validate(const GenSpec& spec) {
  if (spec.n < 1) throw std::invalid_argument("n must be positive");
  if (spec.k < 1 || spec.k > spec.n) throw std::invalid_argument("k must lie in [1, n]");
  auto in_unit = [](double v) { return v >= 0.0 && v <= 1.0; };
  if (!in_unit(spec.noise) || !in_unit(spec.friendly) || !in_unit(spec.hostile)) {
    throw std::invalid_argument("probabilities must lie in [0, 1]");
  }
  if (spec.friendly + spec.hostile > 1.0) throw std::invalid_argument("friendly + hostile must be <= 1");
  if (spec.infeasible && spec.n < 3) throw std::invalid_argument("infeasible instances need n >= 3");
}

inline std::vector<NodePair> sample_pairs(std::vector<NodePair> pool, double fraction, std::mt19937_64& rng) {
  std::shuffle(pool.begin(), pool.end(), rng);
  const auto count = static_cast<std::size_t>(std::llround(fraction * static_cast<double>(pool.size())));
  pool.resize(std::min(count, pool.size()));
  return pool;
}

inline SignedInstance make_infeasible(const SignedInstance& inst, std::mt19937_64& rng) {
  const int n = inst.num_nodes();
  std::vector<int> nodes(n);
  for (int i = 0; i < n; ++i) nodes[i] = i;
  std::shuffle(nodes.begin(), nodes.end(), rng);
  const int a = nodes[0], b = nodes[1], c = nodes[2];
  auto touches = [&](const NodePair& e) {
    auto in = [&](int x) { return x == a || x == b || x == c; };
    return in(e.u) && in(e.v);
  };
  SignedInstance out(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) out.set_sign(u, v, inst.sign(u, v));
  }
  for (const auto& e : inst.friendly()) {
    if (!touches(e)) out.add_friendly(e.u, e.v);
  }
  for (const auto& e : inst.hostile()) {
    if (!touches(e)) out.add_hostile(e.u, e.v);
  }
  out.add_friendly(a, b);
  out.add_friendly(b, c);
  out.add_hostile(a, c);
  return out;
}

}  // namespace detail

inline PlantedInstance generate_planted(const GenSpec& spec) {
  detail::validate(spec);
  std::mt19937_64 rng(spec.seed);
  const int n = spec.n;
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<int> label(n);
  std::uniform_int_distribution<int> pick(0, spec.k - 1);
  for (int i = 0; i < n; ++i) label[perm[i]] = i < spec.k ? i : pick(rng);

  SignedInstance inst(n);
  std::bernoulli_distribution flip(spec.noise);
  std::vector<NodePair> intra;
  std::vector<NodePair> inter;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const bool same = label[u] == label[v];
      const bool positive = same != flip(rng);
      inst.set_sign(u, v, positive ? Sign::kPositive : Sign::kNegative);
      (same ? intra : inter).emplace_back(u, v);
    }
  }
  auto friendly = detail::sample_pairs(std::move(intra), spec.friendly, rng);
  auto hostile = detail::sample_pairs(std::move(inter), spec.hostile, rng);
  std::sort(friendly.begin(), friendly.end());
  std::sort(hostile.begin(), hostile.end());
  for (const auto& e : friendly) inst.add_friendly(e.u, e.v);
  for (const auto& e : hostile) inst.add_hostile(e.u, e.v);
  if (spec.infeasible) inst = detail::make_infeasible(inst, rng);
  return {std::move(inst), Clustering::from_labels(label)};
}

inline SignedInstance generate(const GenSpec& spec) { return generate_planted(spec).instance; }

// Like generate, then breaks consistent form by flipping signs inside
// supernodes and across hostile superedges.
inline SignedInstance generate_inconsistent(const GenSpec& spec, const InconsistencySpec& flips) {
  if (flips.intra_flips < 0 || flips.hostile_flips < 0) throw std::invalid_argument("flip counts must be >= 0");
  SignedInstance inst = generate(spec);
  const auto sn = compute_supernodes(inst);
  std::vector<NodePair> intra;
  std::vector<NodePair> across;
  for (int u = 0; u < inst.num_nodes(); ++u) {
    for (int v = u + 1; v < inst.num_nodes(); ++v) {
      if (sn.same(u, v) && inst.is_positive(u, v)) intra.emplace_back(u, v);
      if (sn.hostile_nodes(u, v) && !inst.is_positive(u, v)) across.emplace_back(u, v);
    }
  }
  std::mt19937_64 rng(spec.seed ^ 0x9e3779b97f4a7c15ULL);
  std::shuffle(intra.begin(), intra.end(), rng);
  std::shuffle(across.begin(), across.end(), rng);
  for (std::size_t i = 0; i < intra.size() && i < static_cast<std::size_t>(flips.intra_flips); ++i) {
    inst.set_sign(intra[i].u, intra[i].v, Sign::kNegative);
  }
  for (std::size_t i = 0; i < across.size() && i < static_cast<std::size_t>(flips.hostile_flips); ++i) {
    inst.set_sign(across[i].u, across[i].v, Sign::kPositive);
  }
  return inst;
}

}  // namespace ccc

#endif  // CCC_GENERATE_HPP_
