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

#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "ccc/ccc.hpp"
#include "json.hpp"
#include "json_io.hpp"

namespace {

using ccc::io::json;

ccc::PivotStrategy parse_pivot(const std::string& s) {
  if (s == "random") return ccc::PivotStrategy::kRandom;
  if (s == "deterministic") return ccc::PivotStrategy::kDeterministic;
  throw std::invalid_argument("unknown pivot strategy: " + s);
}

struct Prepared {
  ccc::SupernodeStructure sn;
  ccc::ConsistentForm cf;
};

Prepared prepare_consistent(const ccc::SignedInstance& inst) {
  Prepared p;
  p.sn = ccc::compute_supernodes(inst);
  p.cf = ccc::to_consistent_form(inst, p.sn);
  return p;
}

int run_solve(const std::string& file, const std::string& variant, double epsilon, const std::string& pivot,
              std::uint64_t seed, int trials, bool as_json, const std::string& trace_path) {
  const auto inst = ccc::read_instance_file(file);
  ccc::SolveOptions opts;
  opts.epsilon = epsilon;
  opts.pivot = parse_pivot(pivot);
  opts.seed = seed;
  if (trials > 1 && opts.pivot != ccc::PivotStrategy::kRandom) {
    throw std::invalid_argument("--trials requires --pivot random");
  }
  auto artifacts = ccc::prepare(inst, ccc::parse_variant(variant), opts);
  const auto report = ccc::finish(inst, artifacts, opts);
  if (!trace_path.empty()) {
    std::ofstream out(trace_path);
    if (!out) throw std::runtime_error("cannot write " + trace_path);
    for (std::size_t i = 0; i < report.trace.steps.size(); ++i) {
      out << ccc::io::step_json(i, report.trace.steps[i]).dump() << '\n';
    }
  }
  std::optional<ccc::TrialSummary> summary;
  if (trials > 1) summary = ccc::run_trials(inst, report.artifacts, trials, seed);

  if (as_json) {
    json out = ccc::io::report_json(inst, report);
    if (summary) {
      out["trials"] = {{"count", trials},          {"mean", summary->mean}, {"stddev", summary->stddev},
                       {"min", summary->min},      {"max", summary->max}};
    }
    std::cout << out.dump(2) << '\n';
    return 0;
  }
  std::cout << "variant          " << ccc::to_string(report.variant) << '\n'
            << "clusters         " << report.clustering.num_clusters() << '\n'
            << "cost             " << report.cost_original << '\n'
            << "forced mistakes  " << report.forced_mistakes << '\n';
  if (report.lp_objective) std::cout << "lp objective     " << *report.lp_objective << '\n';
  if (report.certified_ratio) std::cout << "cost / lp        " << *report.certified_ratio << '\n';
  if (summary) {
    std::cout << "trials           " << trials << " (mean " << summary->mean << ", min " << summary->min
              << ", max " << summary->max << ")\n";
  }
  std::cout << "time             " << report.timings.total() << " s\n";
  for (const auto& cluster : report.clustering.clusters()) {
    for (std::size_t i = 0; i < cluster.size(); ++i) std::cout << (i ? " " : "") << cluster[i];
    std::cout << '\n';
  }
  return 0;
}

int run_lp(const std::string& file, const std::string& variant_name, double epsilon, bool dump, bool presolve) {
  const auto inst = ccc::read_instance_file(file);
  const auto variant = ccc::resolve_variant(inst, ccc::parse_variant(variant_name));
  const auto p = prepare_consistent(inst);
  ccc::LpBuildOptions build;
  build.fix_zero_cost = presolve;
  std::optional<ccc::CoveringProgram> prog;
  switch (variant) {
    case ccc::Variant::kConstrained: {
      const auto dp = ccc::compute_dangerous_pairs(p.cf.instance, p.sn);
      prog = ccc::build_constrained_lp(p.cf.instance, p.sn, dp, ccc::find_heaps(p.cf.instance, p.sn, dp), build);
      break;
    }
    case ccc::Variant::kFriendly: prog = ccc::build_friendly_lp(p.cf.instance, p.sn, build); break;
    case ccc::Variant::kHostile: prog = ccc::build_hostile_lp(p.cf.instance); break;
    case ccc::Variant::kAuto: break;
  }
  const auto sol = ccc::solve_covering(*prog, epsilon);
  json out = ccc::io::program_json(*prog, dump);
  out["solution"] = ccc::io::solution_json(*prog, sol);
  out["forced_mistakes"] = p.cf.forced_mistakes;
  std::cout << out.dump(2) << '\n';
  return 0;
}

int run_aux(const std::string& file, const std::string& variant, double epsilon, std::uint64_t seed) {
  const auto inst = ccc::read_instance_file(file);
  ccc::SolveOptions opts;
  opts.epsilon = epsilon;
  opts.seed = seed;
  const auto a = ccc::prepare(inst, ccc::parse_variant(variant), opts);
  json out = ccc::io::aux_json(a->g_hat);
  out["variant"] = ccc::to_string(a->variant);
  json violations = json::array();
  for (const auto& v : ccc::verify_pivot_safe(a->consistent.instance, a->supernodes, a->g_hat)) {
    violations.push_back({{"condition", v.condition}, {"u", v.u}, {"v", v.v}, {"witness", v.witness}});
  }
  out["pivot_safety_violations"] = std::move(violations);
  std::cout << out.dump(2) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Constrained correlation clustering"};
  app.require_subcommand(1);

  std::string file;
  std::string variant = "auto";
  double epsilon = 0.3;
  std::string pivot = "deterministic";
  std::uint64_t seed = 0;
  int trials = 1;
  bool as_json = false;
  std::string trace_path;
  auto* solve = app.add_subcommand("solve", "cluster an instance");
  solve->add_option("file", file, "instance file")->required()->check(CLI::ExistingFile);
  solve->add_option("--variant", variant)->check(CLI::IsMember({"auto", "constrained", "friendly", "hostile"}));
  solve->add_option("--epsilon", epsilon)->check(CLI::Range(0.0, 1.0));
  solve->add_option("--pivot", pivot)->check(CLI::IsMember({"random", "deterministic"}));
  solve->add_option("--seed", seed);
  solve->add_option("--trials", trials)->check(CLI::PositiveNumber);
  solve->add_flag("--json", as_json);
  solve->add_option("--trace", trace_path, "write one JSON line per pivot");

  bool dump = false;
  bool presolve = false;
  auto* lp = app.add_subcommand("lp", "build and solve the LP relaxation");
  lp->add_option("file", file)->required()->check(CLI::ExistingFile);
  lp->add_option("--variant", variant)->check(CLI::IsMember({"auto", "constrained", "friendly", "hostile"}));
  lp->add_option("--epsilon", epsilon)->check(CLI::Range(0.0, 1.0));
  lp->add_flag("--dump", dump, "include the rows");
  lp->add_flag("--presolve", presolve, "fix zero-cost variables to 1");

  auto* exact = app.add_subcommand("exact", "brute-force optimum (at most 12 supernodes)");
  exact->add_option("file", file)->required()->check(CLI::ExistingFile);
  exact->add_flag("--json", as_json);

  ccc::GenSpec gen_spec;
  std::string out_path;
  auto* gen = app.add_subcommand("gen", "generate an instance with a planted clustering");
  gen->add_option("--n", gen_spec.n)->required();
  gen->add_option("--k", gen_spec.k)->required();
  gen->add_option("--noise", gen_spec.noise);
  gen->add_option("--friendly", gen_spec.friendly);
  gen->add_option("--hostile", gen_spec.hostile);
  gen->add_option("--seed", gen_spec.seed);
  gen->add_flag("--infeasible", gen_spec.infeasible);
  gen->add_option("-o,--output", out_path);

  auto* dump_dp = app.add_subcommand("dump-dangerous", "print the dangerous pairs");
  dump_dp->add_option("file", file)->required()->check(CLI::ExistingFile);
  auto* dump_heaps = app.add_subcommand("dump-heaps", "print the HEAP triples");
  dump_heaps->add_option("file", file)->required()->check(CLI::ExistingFile);
  auto* dump_aux = app.add_subcommand("dump-aux", "print the auxiliary graph");
  dump_aux->add_option("file", file)->required()->check(CLI::ExistingFile);
  dump_aux->add_option("--variant", variant)->check(CLI::IsMember({"auto", "constrained", "friendly", "hostile"}));
  dump_aux->add_option("--epsilon", epsilon)->check(CLI::Range(0.0, 1.0));
  dump_aux->add_option("--seed", seed);

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) return run_solve(file, variant, epsilon, pivot, seed, trials, as_json, trace_path);
    if (lp->parsed()) return run_lp(file, variant, epsilon, dump, presolve);
    if (exact->parsed()) {
      const auto result = ccc::exact_opt(ccc::read_instance_file(file));
      if (as_json) {
        std::cout << ccc::io::exact_json(result).dump(2) << '\n';
      } else {
        std::cout << "opt " << result.opt_cost << " (" << result.num_feasible << " feasible partitions)\n";
      }
      return 0;
    }
    if (gen->parsed()) {
      const std::string text = ccc::format_instance(ccc::generate(gen_spec));
      if (out_path.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot write " + out_path);
        out << text;
      }
      return 0;
    }
    if (dump_dp->parsed() || dump_heaps->parsed()) {
      const auto inst = ccc::read_instance_file(file);
      const auto p = prepare_consistent(inst);
      const auto dp = ccc::compute_dangerous_pairs(p.cf.instance, p.sn);
      const json out = dump_dp->parsed() ? ccc::io::dangerous_json(dp)
                                         : ccc::io::heaps_json(ccc::find_heaps(p.cf.instance, p.sn, dp));
      std::cout << out.dump(2) << '\n';
      return 0;
    }
    if (dump_aux->parsed()) return run_aux(file, variant, epsilon, seed);
  } catch (const ccc::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 1;
  } catch (const ccc::InfeasibleInstance& e) {
    std::cerr << "infeasible: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
