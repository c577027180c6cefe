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
#include "lrsched/lr_solver_rd.hpp"
#include "test_support.hpp"

using namespace lrsched;
using namespace lrsched::testing;

TEST_CASE("build_model_costs_rd gates on the release window") {
  const Instance inst = zero_cost_instance({2, 3, 1}, {0, 2, 4});
  const DueDateVector sigma = DueDateVector::release(inst);

  SUBCASE("jobs released before r* are excluded") {
    const int d = demand_rd(inst, 2, 6, sigma);
    REQUIRE(d > 0);
    const ModelCosts m = build_model_costs_rd(inst, sigma, 2, 6);
    CHECK(m.height[0] == 0);
    CHECK(m.height[1] == std::min(3, d));
    CHECK(m.height[2] == std::min(1, d));
    CHECK(m.start == 6);
  }
  SUBCASE("jobs released at or after t* are excluded") {
    const ModelCosts m = build_model_costs_rd(inst, sigma, 0, 4);
    CHECK(m.height[2] == 0);
  }
}

TEST_CASE("build_model_costs_rd truncates by the interval demand") {
  // p = 3 and a unit job, both released at 0: D(0, 3) = 2.
  const Instance inst = zero_cost_instance({3, 1}, {0, 0});
  const DueDateVector sigma{0, 0};
  REQUIRE(demand_rd(inst, 0, 3, sigma) == 2);
  const ModelCosts m = build_model_costs_rd(inst, sigma, 0, 3);
  CHECK(m.height == std::vector<int>{2, 1});
}

TEST_CASE("with one release date at 0 the model costs coincide") {
  for (int seed = 0; seed < 20; ++seed) {
    const Instance inst =
        random_instance(static_cast<std::uint64_t>(seed), 4, 3, 1, CostModel::kStep);
    DueDateVector sigma = DueDateVector::zeros(4);
    for (JobIndex j = 0; j < 4; ++j) sigma[j] = (seed + static_cast<int>(j)) % 5;
    for (Time t = 1; t <= inst.horizon(); ++t) {
      if (demand(inst, t, sigma) == 0) continue;
      CHECK(build_model_costs_rd(inst, sigma, 0, t).height ==
            build_model_costs(inst, sigma, t).height);
    }
  }
}

TEST_CASE("lr_cs_rd on the counterexample matches lr_cs") {
  const Instance cx = counterexample(4);
  const SolveResult rd = lr_cs_rd(cx);
  const SolveResult plain = lr_cs(cx);
  CHECK(rd.primal_cost == ExtValue(16));
  CHECK(rd.primal_cost == plain.primal_cost);
  CHECK(rd.lower_bound == plain.lower_bound);
  CHECK(rd.schedule.preemptive);
  CHECK(check_level_bound_rd(cx, rd).ok);
  CHECK(check_solve_structure(cx, rd).ok);
}

TEST_CASE("lr_cs_rd agrees with lr_cs on single-release instances") {
  for (int seed = 0; seed < 40; ++seed) {
    for (CostModel model : {CostModel::kStep, CostModel::kWeightedCompletion,
                            CostModel::kWeightedTardiness}) {
      const Instance inst = random_instance(static_cast<std::uint64_t>(seed), 4, 3, 1, model);
      const SolveResult a = lr_cs(inst);
      const SolveResult b = lr_cs_rd(inst);
      CHECK(a.primal_cost == b.primal_cost);
      CHECK(a.lower_bound == b.lower_bound);
    }
  }
}

TEST_CASE("lr_cs_rd on a single released job") {
  // r = 5, p = 2: the only feasible due date within T = 7 is 7, and it is free.
  const Instance inst = zero_cost_instance({2}, {5});
  const SolveResult res = lr_cs_rd(inst);
  CHECK(res.final_sigma == DueDateVector{7});
  CHECK(res.primal_cost.is_zero());
  CHECK(res.schedule.completion == std::vector<Time>{7});
  CHECK(res.initial_sigma == DueDateVector{5});
  REQUIRE_FALSE(res.trace.empty());
  CHECK(res.trace[0].r_star == 5);
}

TEST_CASE("lr_cs_rd level bound holds with factor 4 kappa") {
  for (int kappa = 1; kappa <= 3; ++kappa) {
    for (int seed = 0; seed < 30; ++seed) {
      const Instance inst = random_instance(static_cast<std::uint64_t>(seed * 7 + kappa),
                                            5, 3, kappa, CostModel::kStep);
      const SolveResult res = lr_cs_rd(inst);
      const LevelBoundReport lb = check_level_bound_rd(inst, res);
      CHECK(lb.ok);
      CHECK(lb.factor == 4 * static_cast<long>(inst.kappa()));
      CHECK(lb.max_ratio <= lb.factor);
      CHECK(is_feasible(inst, res.final_sigma));
      CHECK(res.schedule.well_formed(inst));
      CHECK(res.schedule.meets(res.final_sigma));
      CHECK(check_solve_structure(inst, res).ok);
    }
  }
}

TEST_CASE("lr_cs_rd rejects invalid instances") {
  const Instance bad = make_instance({1}, {2}, {[](Time) { return ExtValue(1); }});
  CHECK_THROWS_AS(lr_cs_rd(bad), std::invalid_argument);
}

TEST_CASE("check_level_bound rejects a release-date trace") {
  const Instance inst = zero_cost_instance({1, 2}, {0, 1});
  const SolveResult res = lr_cs_rd(inst);
  CHECK_THROWS_AS(check_level_bound(inst, res), std::invalid_argument);
}
