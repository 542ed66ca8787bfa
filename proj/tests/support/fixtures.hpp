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

#ifndef CCC_TESTS_SUPPORT_FIXTURES_HPP_
#define CCC_TESTS_SUPPORT_FIXTURES_HPP_

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "ccc/ccc.hpp"

namespace ccc::testing {

inline std::string data_path(const std::string& name) { return std::string(CCC_TEST_DATA_DIR) + "/" + name; }

inline SignedInstance load(const std::string& name) { return read_instance_file(data_path(name)); }

inline SignedInstance make_instance(int n, std::initializer_list<std::pair<int, int>> positive,
                                    std::initializer_list<std::pair<int, int>> friendly = {},
                                    std::initializer_list<std::pair<int, int>> hostile = {}) {
  SignedInstance inst(n);
  for (auto [u, v] : positive) inst.set_sign(u, v, Sign::kPositive);
  for (auto [u, v] : friendly) inst.add_friendly(u, v);
  for (auto [u, v] : hostile) inst.add_hostile(u, v);
  return inst;
}

// Mixed-constraint generator settings cycling through the noise levels.
inline GenSpec mixed_spec(std::uint64_t seed, int n_min, int n_max) {
  static constexpr double kNoise[] = {0.1, 0.3, 0.5};
  GenSpec spec;
  spec.seed = seed;
  spec.n = n_min + static_cast<int>(seed % static_cast<std::uint64_t>(n_max - n_min + 1));
  spec.k = 1 + static_cast<int>((seed / 3) % 4);
  if (spec.k > spec.n) spec.k = spec.n;
  spec.noise = kNoise[seed % 3];
  spec.friendly = 0.1 + 0.1 * static_cast<double>((seed / 5) % 3);
  spec.hostile = 0.1 + 0.1 * static_cast<double>((seed / 7) % 3);
  return spec;
}

// Every pair u < v in order.
inline std::vector<NodePair> all_pairs(int n) {
  std::vector<NodePair> out;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) out.emplace_back(u, v);
  }
  return out;
}

}  // namespace ccc::testing

#endif  // CCC_TESTS_SUPPORT_FIXTURES_HPP_
