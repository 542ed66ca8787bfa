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

// Generates a small instance, clusters it with the deterministic pipeline and
// compares the result against the LP bound and the exact optimum.

#include <iostream>

#include "ccc/ccc.hpp"

int main() {
  ccc::GenSpec spec;
  spec.n = 9;
  spec.k = 3;
  spec.noise = 0.2;
  spec.friendly = 0.2;
  spec.hostile = 0.1;
  spec.seed = 7;
  const ccc::SignedInstance inst = ccc::generate(spec);

  ccc::SolveOptions opts;
  opts.epsilon = 0.3;
  const ccc::SolveReport report = ccc::solve(inst, ccc::Variant::kAuto, opts);
  const ccc::ExactResult exact = ccc::exact_opt(inst);

  std::cout << "variant: " << ccc::to_string(report.variant) << "\n"
            << "cost: " << report.cost_original << " (optimum " << exact.opt_cost << ")\n"
            << "lp objective: " << report.lp_objective.value_or(0.0) << "\n"
            << "clusters:";
  for (const auto& cluster : report.clustering.clusters()) {
    std::cout << " {";
    for (std::size_t i = 0; i < cluster.size(); ++i) std::cout << (i ? "," : "") << cluster[i];
    std::cout << "}";
  }
  std::cout << "\n";
  return ccc::is_feasible(inst, report.clustering) ? 0 : 1;
}
