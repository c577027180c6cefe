// Copyright 2026 The lrsched Authors
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

#include "cli.hpp"

#include "CLI11.hpp"
#include "lrsched/demand.hpp"
#include "lrsched/instance_factory.hpp"
#include "lrsched/instance_io.hpp"
#include "lrsched/lr_solver.hpp"
#include "lrsched/lr_solver_rd.hpp"
#include "lrsched/oracle.hpp"
#include "lrsched/primal_dual.hpp"

namespace lrsched::cli {

namespace {

struct GenOptions {
  int p = 0;
  bool properize = false;
  std::string delta = "1/100";
  std::uint64_t seed = 0;
  int n = 0;
  int pmax = 0;
  int kappa = 1;
  std::string cost = "step";
  std::string output;
};

struct SolveOptions {
  std::string algo;
  std::string input;
  bool trace = false;
  bool check_bounds = false;
};

struct GapOptions {
  std::string family = "counterexample";
  std::vector<std::string> p_list;
};

// Exact ratio plus a decimal rendering; "inf" for an unbounded ratio.
std::string ratio_text(const ExtValue& primal, const Rational& lower) {
  if (primal.is_infinite()) return "inf";
  if (sgn(lower) == 0) return primal.is_zero() ? "1" : "inf";
  const Rational q = primal.value() / lower;
  return to_string(q) + " (" + to_decimal(q) + ")";
}

std::string job_id(const Instance& inst, JobIndex j) {
  return std::to_string(inst.job(j).id);
}

std::string order_text(const Instance& inst, const std::vector<JobIndex>& order) {
  std::string s = "(";
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (k) s += ",";
    s += job_id(inst, order[k]);
  }
  return s + ")";
}

void print_lr_trace(std::ostream& out, const Instance& inst,
                    const SolveResult& res, bool rd) {
  out << (rd ? "# k t* r* A-size D alpha j s undo\n"
             : "# k t* A-size D alpha j s undo\n");
  std::size_t positive = 0;
  for (const auto& step : res.trace) {
    out << step.level << ' ' << step.t_star << ' ';
    if (rd) out << step.r_star.value_or(0) << ' ';
    out << step.covering << ' ' << step.demand << ' ' << to_string(step.alpha)
        << ' ' << job_id(inst, step.job) << ' ' << step.time
        << " undo=" << (step.reverted ? "reverted" : "kept") << '\n';
    if (sgn(step.alpha) > 0) ++positive;
  }
  out << "# levels=" << res.trace.size() << " positive_alpha=" << positive
      << " lower_bound=" << to_string(res.lower_bound) << '\n';
}

void print_pd_trace(std::ostream& out, const Instance& inst,
                    const PrimalDualResult& res) {
  out << "# k t* A-size D y j s undo A\n";
  for (const auto& it : res.trace) {
    out << it.k << ' ' << it.t << ' ' << it.A.count() << ' ' << it.demand
        << ' ' << to_string(it.y) << ' ' << job_id(inst, it.job) << ' '
        << it.time << " undo=" << (it.pruned ? "reverted" : "kept")
        << " A=" << it.A.str() << '\n';
  }
  out << "# duals=" << res.duals.size() << " nonzero=" << res.nonzero_duals()
      << " objective=" << to_string(res.dual_objective) << '\n';
  for (const auto& y : res.duals) {
    if (sgn(y.value) == 0) continue;
    out << "# y(t=" << y.t << ", A=" << y.A.str() << ") = " << to_string(y.value)
        << '\n';
  }
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

int solve_lr(const Instance& inst, const SolveOptions& opt, bool rd,
             std::ostream& out) {
  const SolveResult res = rd ? lr_cs_rd(inst) : lr_cs(inst);
  if (opt.trace) print_lr_trace(out, inst, res, rd);

  const bool feasible = is_feasible(inst, res.final_sigma) &&
                        res.schedule.well_formed(inst) &&
                        res.schedule.meets(res.final_sigma);
  out << "primal=" << res.primal_cost.str()
      << " lower_bound=" << to_string(res.lower_bound)
      << " gap=" << ratio_text(res.primal_cost, res.lower_bound) << '\n';
  out << "due_dates=" << res.final_sigma.str() << " feasible=" << yes_no(feasible)
      << '\n';

  bool ok = feasible;
  if (opt.check_bounds) {
    const LevelBoundReport lb =
        rd ? check_level_bound_rd(inst, res) : check_level_bound(inst, res);
    out << "level_bound: " << (lb.ok ? "ok" : "VIOLATED") << " levels=" << lb.levels
        << " max_ratio=" << to_string(lb.max_ratio)
        << " factor=" << to_string(lb.factor) << '\n';
    for (const auto& v : lb.violations) out << "  " << v << '\n';
    const StructureReport st = check_solve_structure(inst, res);
    out << "structure: " << (st.ok ? "ok" : "VIOLATED") << '\n';
    for (const auto& v : st.violations) out << "  " << v << '\n';
    ok = ok && lb.ok && st.ok;
  }
  return ok ? kExitOk : kExitViolation;
}

int solve_pd(const Instance& inst, const SolveOptions& opt, std::ostream& out) {
  const PrimalDualResult res = primal_dual_solve(inst);
  if (opt.trace) print_pd_trace(out, inst, res);

  const bool feasible = is_feasible(inst, res.due_dates) &&
                        res.schedule.well_formed(inst) &&
                        res.schedule.meets(res.due_dates);
  out << "primal=" << res.primal_cost.str()
      << " dual=" << to_string(res.dual_objective)
      << " gap=" << ratio_text(res.primal_cost, res.dual_objective) << '\n';
  out << "due_dates=" << res.due_dates.str() << " feasible=" << yes_no(feasible)
      << '\n';

  bool ok = feasible;
  if (opt.check_bounds) {
    const bool dual_ok = check_dual_feasibility(res.duals, inst);
    out << "dual_feasible=" << yes_no(dual_ok) << '\n';
    ok = ok && dual_ok;
    // The 2-coverage property is reported, not enforced: it is known to fail.
    const CoverageReport app = check_coverage_ratio(res, inst);
    out << "coverage_ratio: max=" << to_string(app.max_ratio)
        << (app.violated ? " exceeds 2" : " within 2") << '\n';
    for (const auto& e : app.entries) {
      out << "  t=" << e.t << " A=" << e.A.str() << " covered=" << e.covered
          << " D=" << e.demand << " ratio=" << to_string(e.ratio) << '\n';
    }
  }
  return ok ? kExitOk : kExitViolation;
}

int solve_oracle(const Instance& inst, std::ostream& out) {
  const OracleResult res = brute_force_opt(inst);
  out << "opt=" << res.opt_cost.str() << '\n';
  out << "order=" << order_text(inst, res.order) << '\n';
  return kExitOk;
}

int cmd_solve(const SolveOptions& opt, std::ostream& out) {
  const Instance inst = read_instance(opt.input);
  const ValidationReport rep = validate_instance(inst);
  if (!rep.ok()) {
    out << "invalid instance:\n" << rep.str();
    return kExitViolation;
  }
  if (opt.algo == "lr") return solve_lr(inst, opt, false, out);
  if (opt.algo == "lr-rd") return solve_lr(inst, opt, true, out);
  if (opt.algo == "pd") return solve_pd(inst, opt, out);
  return solve_oracle(inst, out);
}

void emit_instance(const Instance& inst, const std::string& path,
                   std::ostream& out) {
  if (path.empty() || path == "-") {
    out << serialize_instance(inst);
  } else {
    write_instance(inst, path);
  }
}

int cmd_gen_counterexample(const GenOptions& opt, std::ostream& out) {
  Instance inst = counterexample(opt.p);
  if (opt.properize) {
    const Rational delta = parse_rational(opt.delta);
    if (!delta.get_num().fits_slong_p() || !delta.get_den().fits_slong_p()) {
      throw std::invalid_argument("--delta out of range");
    }
    inst = properize(inst, delta.get_num().get_si(), delta.get_den().get_si());
  }
  emit_instance(inst, opt.output, out);
  return kExitOk;
}

int cmd_gen_random(const GenOptions& opt, std::ostream& out) {
  const Instance inst = random_instance(opt.seed, opt.n, opt.pmax, opt.kappa,
                                        parse_cost_model(opt.cost));
  emit_instance(inst, opt.output, out);
  return kExitOk;
}

int cmd_gap(const GapOptions& opt, std::ostream& out, std::ostream& err) {
  if (opt.p_list.empty()) {
    err << "gap: --p-list must name at least one p\n";
    return kExitUsage;
  }
  std::vector<int> ps;
  for (const auto& item : opt.p_list) {
    int p = 0;
    try {
      std::size_t used = 0;
      p = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      err << "gap: bad p value '" << item << "'\n";
      return kExitUsage;
    }
    if (p < 4) {
      err << "warning: skipping p=" << p << " (p must be ≥ 4)\n";
      continue;
    }
    ps.push_back(p);
  }

  out << "p pd_primal pd_dual pd_gap lr_primal lr_lower_bound lr_gap 4p/(p+2)\n";
  bool ok = true;
  for (int p : ps) {
    const Instance inst = counterexample(p);
    const PrimalDualResult pd = primal_dual_solve(inst);
    const SolveResult lr = lr_cs(inst);
    Rational expected(4 * p, p + 2);
    expected.canonicalize();
    out << p << ' ' << pd.primal_cost.str() << ' ' << to_string(pd.dual_objective)
        << ' ' << ratio_text(pd.primal_cost, pd.dual_objective) << ' '
        << lr.primal_cost.str() << ' ' << to_string(lr.lower_bound) << ' '
        << ratio_text(lr.primal_cost, lr.lower_bound) << ' '
        << to_string(expected) << " (" << to_decimal(expected)
        << ")\n";
    const bool pd_match = pd.primal_cost.is_finite() &&
                          sgn(pd.dual_objective) > 0 &&
                          pd.primal_cost.value() / pd.dual_objective == expected;
    ok = ok && pd_match;
  }
  return ok ? kExitOk : kExitViolation;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"lrsched: local-ratio and primal-dual scheduling toolkit"};
  app.name(args.empty() ? "lrsched" : args.front());
  app.require_subcommand(1);

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate an instance file");
  gen_cmd->require_subcommand(1);
  auto* gen_cx = gen_cmd->add_subcommand("counterexample", "Four-job gap family");
  gen_cx->add_option("--p", gen.p, "Processing time of every job")->required();
  gen_cx->add_flag("--properize", gen.properize,
                   "Apply the shift-and-dummy transformation");
  gen_cx->add_option("--delta", gen.delta, "Shift cost per unit, N/D")
      ->capture_default_str();
  gen_cx->add_option("-o,--output", gen.output, "Output file (default stdout)");

  auto* gen_rand = gen_cmd->add_subcommand("random", "Seeded random instance");
  gen_rand->add_option("--seed", gen.seed)->required();
  gen_rand->add_option("--n", gen.n)->required();
  gen_rand->add_option("--pmax", gen.pmax)->required();
  gen_rand->add_option("--kappa", gen.kappa)->capture_default_str();
  gen_rand->add_option("--cost", gen.cost)
      ->check(CLI::IsMember({"step", "weighted_completion", "weighted_tardiness"}))
      ->capture_default_str();
  gen_rand->add_option("-o,--output", gen.output, "Output file (default stdout)");

  SolveOptions solve;
  auto* solve_cmd = app.add_subcommand("solve", "Run an algorithm on an instance");
  solve_cmd->add_option("--algo", solve.algo)
      ->required()
      ->check(CLI::IsMember({"lr", "lr-rd", "pd", "oracle"}));
  solve_cmd->add_option("-i,--input", solve.input)->required();
  solve_cmd->add_flag("--trace", solve.trace, "Print the per-iteration table");
  solve_cmd->add_flag("--check-bounds", solve.check_bounds,
                      "Run the per-level and dual checks");

  GapOptions gap;
  auto* gap_cmd = app.add_subcommand("gap", "Tabulate gaps on an instance family");
  gap_cmd->add_option("--family", gap.family)
      ->check(CLI::IsMember({"counterexample"}))
      ->capture_default_str();
  gap_cmd->add_option("--p-list", gap.p_list, "Comma separated p values")
      ->delimiter(',')
      ->required();

  std::vector<std::string> rest(args.rbegin(), args.rend());
  if (!rest.empty()) rest.pop_back();
  try {
    app.parse(rest);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen_cx->parsed()) return cmd_gen_counterexample(gen, out);
    if (gen_rand->parsed()) return cmd_gen_random(gen, out);
    if (solve_cmd->parsed()) return cmd_solve(solve, out);
    if (gap_cmd->parsed()) return cmd_gap(gap, out, err);
  } catch (const InstanceFormatError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitViolation;
  }
  return kExitUsage;
}

}  // namespace lrsched::cli
