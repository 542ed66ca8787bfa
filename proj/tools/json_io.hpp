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

// JSON views of library types for the command-line tool.

#ifndef CCC_TOOLS_JSON_IO_HPP_
#define CCC_TOOLS_JSON_IO_HPP_

#include <cmath>
#include <string>
#include <vector>

#include "ccc/ccc.hpp"
#include "json.hpp"

namespace ccc::io {

using nlohmann::json;

inline json pair_json(const NodePair& e) { return json::array({e.u, e.v}); }

inline json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

inline json clusters_json(const Clustering& c) { return c.clusters(); }

inline json dangerous_json(const DangerousPairing& dp) {
  json pairs = json::array();
  for (const auto& p : dp.pairs()) {
    pairs.push_back({{"first", pair_json(p.first())}, {"second", pair_json(p.second())},
                     {"nodes", json::array({p.a, p.b, p.c, p.d})}});
  }
  return pairs;
}

inline json heaps_json(const HeapConstraintSet& h) {
  json out = json::array();
  for (const auto& t : h.triples) out.push_back(json::array({pair_json(t[0]), pair_json(t[1]), pair_json(t[2])}));
  return out;
}

inline json program_json(const CoveringProgram& prog, bool rows) {
  json out;
  out["variant"] = to_string(prog.variant());
  json vars = json::array();
  for (int j = 0; j < prog.var_count(); ++j) {
    vars.push_back({{"name", variable_name(prog.keys()[j])}, {"weight", prog.objective()[j]}});
  }
  out["variables"] = std::move(vars);
  json fixed = json::object();
  for (const auto& [key, value] : prog.fixed()) fixed[variable_name(key)] = value;
  out["fixed"] = std::move(fixed);
  out["num_rows"] = prog.num_rows();
  if (rows) {
    json list = json::array();
    for (std::size_t r = 0; r < prog.num_rows(); ++r) {
      json terms = json::array();
      for (const auto& t : prog.row(r)) terms.push_back(json::array({variable_name(prog.keys()[t.var]), t.coef}));
      list.push_back(std::move(terms));
    }
    out["rows"] = std::move(list);
  }
  return out;
}

inline json solution_json(const CoveringProgram& prog, const LpSolution& sol) {
  json values = json::object();
  for (int j = 0; j < prog.var_count(); ++j) values[variable_name(prog.keys()[j])] = sol.values[j];
  return {{"values", std::move(values)},
          {"objective", sol.objective_value},
          {"lower_bound", sol.lower_bound},
          {"increments", sol.increments},
          {"certificate_checks", sol.certificate_checks},
          {"feasible", check_feasibility(prog, sol).empty()}};
}

inline json aux_json(const AuxGraph& g) {
  json positive = json::array();
  json classes = json::array();
  for (int u = 0; u < g.num_nodes(); ++u) {
    for (int v = u + 1; v < g.num_nodes(); ++v) {
      if (g.is_positive(u, v)) positive.push_back(json::array({u, v}));
      classes.push_back(json::array({u, v, to_string(g.edge_class(u, v))}));
    }
  }
  return {{"num_nodes", g.num_nodes()}, {"positive", std::move(positive)}, {"classes", std::move(classes)}};
}

inline json step_json(std::size_t index, const PivotStep& s) {
  return {{"step", index},
          {"pivot", s.pivot},
          {"members", s.members},
          {"num", s.ratio.num},
          {"den", static_cast<double>(s.ratio.den) / kValueGridScale},
          {"total_num", s.total_num},
          {"total_den", static_cast<double>(s.total_den) / kValueGridScale}};
}

inline json timings_json(const StageTimings& t) {
  return {{"consistent_form", t.consistent_form}, {"dangerous", t.dangerous}, {"heaps", t.heaps},
          {"lp_build", t.lp_build},               {"lp_solve", t.lp_solve},   {"aux_graph", t.aux_graph},
          {"pivot", t.pivot},                     {"total", t.total()}};
}

inline json report_json(const SignedInstance& inst, const SolveReport& r) {
  json out;
  out["variant"] = to_string(r.variant);
  out["epsilon"] = r.epsilon;
  out["pivot"] = to_string(r.pivot);
  out["seed"] = r.seed;
  out["num_nodes"] = inst.num_nodes();
  out["num_clusters"] = r.clustering.num_clusters();
  out["clusters"] = clusters_json(r.clustering);
  out["cost"] = r.cost_original;
  out["cost_consistent"] = r.cost;
  out["forced_mistakes"] = r.forced_mistakes;
  out["feasible"] = is_feasible(inst, r.clustering);
  out["lp_objective"] = r.lp_objective ? json(*r.lp_objective) : json(nullptr);
  out["lp_lower_bound"] = r.lp_lower_bound ? json(*r.lp_lower_bound) : json(nullptr);
  out["certified_ratio"] = r.certified_ratio ? number_or_null(*r.certified_ratio) : json(nullptr);
  out["timings"] = timings_json(r.timings);
  return out;
}

inline json exact_json(const ExactResult& e) {
  return {{"opt_cost", e.opt_cost}, {"clusters", clusters_json(e.opt_clustering)}, {"num_feasible", e.num_feasible}};
}

}  // namespace ccc::io

#endif  // CCC_TOOLS_JSON_IO_HPP_
