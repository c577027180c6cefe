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

#include "doctest.h"
#include "lrsched/demand.hpp"
#include "lrsched/instance_factory.hpp"
#include "lrsched/lr_solver.hpp"
#include "lrsched/oracle.hpp"
#include "lrsched/primal_dual.hpp"
#include "test_support.hpp"

using namespace lrsched;
using namespace lrsched::testing;

TEST_CASE("primal_dual_solve on the counterexample") {
  const Instance cx = counterexample(4);
  const PrimalDualResult res = primal_dual_solve(cx);

  CHECK(res.primal_cost == ExtValue(16));
  CHECK(res.dual_objective == 6);
  CHECK(res.due_dates == DueDateVector{11, 11, 16, 16});
  CHECK(res.schedule.meets(res.due_dates));

  REQUIRE(res.nonzero_duals() == 1);
  for (const auto& y : res.duals) {
    if (sgn(y.value) == 0) continue;
    CHECK(y.t == 11);
    CHECK(y.A == JobSet(4));
    CHECK(y.value == 1);
  }

  std::vector<Time> tk;
  for (const auto& it : res.trace) tk.push_back(it.t);
  CHECK(tk == std::vector<Time>{1, 1, 1, 11, 4, 1, 12});

  // Demands along the way: 4p, 3p, 2p, p+2, ...
  CHECK(res.trace[0].demand == 16);
  CHECK(res.trace[1].demand == 12);
  CHECK(res.trace[2].demand == 8);
  CHECK(res.trace[3].demand == 6);
}

TEST_CASE("primal_dual_solve primal and dual values across the family") {
  for (int p : {4, 5, 10, 100}) {
    const PrimalDualResult res = primal_dual_solve(counterexample(p));
    CHECK(res.primal_cost == ExtValue(4L * p));
    CHECK(res.dual_objective == p + 2);
    CHECK(res.nonzero_duals() == 1);
  }
}

TEST_CASE("primal_dual_solve and lr_cs agree on the counterexample costs") {
  for (int p : {4, 7, 10}) {
    const Instance cx = counterexample(p);
    const PrimalDualResult pd = primal_dual_solve(cx);
    const SolveResult lr = lr_cs(cx);
    CHECK(pd.primal_cost == lr.primal_cost);
    CHECK(pd.dual_objective == lr.lower_bound);
  }
}

TEST_CASE("dual_objective") {
  const Instance cx = counterexample(4);
  const PrimalDualResult res = primal_dual_solve(cx);
  CHECK(dual_objective(res.duals, cx) == 6);
  CHECK(dual_objective(std::vector<DualVariable>{}, cx) == 0);
  std::vector<DualVariable> zeros = res.duals;
  for (auto& y : zeros) y.value = 0;
  CHECK(dual_objective(zeros, cx) == 0);
  CHECK(dual_objective(primal_dual_solve(counterexample(100)).duals, counterexample(100)) ==
        102);
}

TEST_CASE("check_dual_feasibility") {
  const Instance cx = counterexample(4);
  const PrimalDualResult res = primal_dual_solve(cx);
  CHECK(check_dual_feasibility(res.duals, cx));
  CHECK(check_dual_feasibility(std::vector<DualVariable>{}, cx));

  std::vector<DualVariable> doubled = res.duals;
  for (auto& y : doubled) y.value *= 2;
  CHECK_FALSE(check_dual_feasibility(doubled, cx));
}

TEST_CASE("coverage ratio on the counterexample") {
  const Instance cx = counterexample(4);
  const CoverageReport rep = check_coverage_ratio(primal_dual_solve(cx), cx);
  REQUIRE(rep.entries.size() == 1);
  const CoverageEntry& e = rep.entries[0];
  CHECK(e.t == 11);
  CHECK(e.A == JobSet(4));
  CHECK(e.covered == 16);
  CHECK(e.demand == 6);
  CHECK(e.ratio == q(8, 3));
  CHECK(rep.max_ratio == q(8, 3));
  CHECK(rep.violated);
}

TEST_CASE("coverage ratio where it holds") {
  // One job, p = 2, f(t) = t: y(1, {}) = 1/2 and y(2, {}) = 1.
  const Instance inst = make_instance({2}, {}, {linear_cost(1)});
  const PrimalDualResult res = primal_dual_solve(inst);
  CHECK(res.dual_objective == 2);
  CHECK(res.primal_cost == ExtValue(2));
  const CoverageReport rep = check_coverage_ratio(res, inst);
  CHECK(rep.entries.size() == 2);
  CHECK(rep.max_ratio == 1);
  CHECK_FALSE(rep.violated);
}

TEST_CASE("no positive duals: vacuous coverage report") {
  const Instance inst = zero_cost_instance({2, 1});
  const PrimalDualResult res = primal_dual_solve(inst);
  CHECK(res.primal_cost.is_zero());
  CHECK(res.dual_objective == 0);
  CHECK(is_feasible(inst, res.due_dates));
  const CoverageReport rep = check_coverage_ratio(res, inst);
  CHECK(rep.entries.empty());
  CHECK_FALSE(rep.violated);
}

TEST_CASE("primal_dual_solve weak duality against the oracle") {
  for (int seed = 0; seed < 60; ++seed) {
    for (CostModel model : {CostModel::kStep, CostModel::kWeightedCompletion,
                            CostModel::kWeightedTardiness}) {
      const Instance inst =
          random_instance(static_cast<std::uint64_t>(seed), 5, 3, 1, model);
      const PrimalDualResult res = primal_dual_solve(inst);
      const ExtValue opt = brute_force_opt(inst).opt_cost;
      CHECK(check_dual_feasibility(res.duals, inst));
      CHECK(is_feasible(inst, res.due_dates));
      CHECK(res.schedule.meets(res.due_dates));
      CHECK(ExtValue(res.dual_objective) <= opt);
      CHECK(opt <= res.primal_cost);
      CHECK(res.primal_cost <= opt * Rational(4));
    }
  }
}

TEST_CASE("primal_dual_solve rejects release dates") {
  CHECK_THROWS_AS(primal_dual_solve(zero_cost_instance({1, 1}, {0, 1})),
                  std::invalid_argument);
}
