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
#include "test_support.hpp"

using namespace lrsched;
using namespace lrsched::testing;

TEST_CASE("build_model_costs") {
  const Instance cx = counterexample(4);
  SUBCASE("all jobs eligible at t* = 1") {
    const ModelCosts m = build_model_costs(cx, DueDateVector::zeros(4), 1);
    CHECK(m.start == 1);
    CHECK(m.height == std::vector<int>{4, 4, 4, 4});
    CHECK(m.at(0, 0) == 0);
    CHECK(m.at(0, 16) == 4);
    CHECK(m.support().size() == 4);
  }
  SUBCASE("a job whose due date reaches t* is excluded") {
    const DueDateVector sigma{3, 0, 10, 10};
    REQUIRE(demand(cx, 3, sigma) == 2);
    const ModelCosts m = build_model_costs(cx, sigma, 3);
    CHECK(m.height == std::vector<int>{0, 2, 0, 0});
  }
  SUBCASE("heights are truncated by the demand") {
    const Instance one = zero_cost_instance({4});
    CHECK(demand(one, 3, DueDateVector{0}) == 2);
    CHECK(build_model_costs(one, DueDateVector{0}, 3).height == std::vector<int>{2});
  }
}

TEST_CASE("compute_alpha on the counterexample") {
  const Instance cx = counterexample(4);
  SUBCASE("first level: jobs 3 and 4 are free until 3p-2") {
    const ModelCosts m = build_model_costs(cx, DueDateVector::zeros(4), 1);
    const AlphaResult a = compute_alpha(cx.costs(), m);
    CHECK(a.alpha == 0);
    CHECK(select_tight_pair(a.tight) == TightPair{2, 10});
  }
  SUBCASE("fourth level raises alpha to 1") {
    // Levels 1..3 had alpha 0, so the residual is still f.
    const ModelCosts m = build_model_costs(cx, DueDateVector{3, 0, 10, 10}, 11);
    const AlphaResult a = compute_alpha(cx.costs(), m);
    CHECK(a.alpha == 1);
    CHECK(select_tight_pair(a.tight) == TightPair{2, 16});
  }
}

TEST_CASE("compute_alpha edge cases") {
  SUBCASE("proportional residual: every supported cell is tight") {
    const Instance one = zero_cost_instance({2, 2});
    ModelCosts m{1, {2, 2}};
    std::vector<CostFunction> g;
    for (int j = 0; j < 2; ++j) {
      std::vector<ExtValue> v{ExtValue(0)};
      for (Time t = 1; t <= 4; ++t) v.push_back(ExtValue(q(6)));
      g.emplace_back(std::move(v));
    }
    const AlphaResult a = compute_alpha(g, m);
    CHECK(a.alpha == 3);
    CHECK(a.tight.size() == 8);
    subtract_model(g, m, a.alpha);
    for (const auto& f : g) {
      for (Time t = 0; t <= 4; ++t) CHECK(f[t].is_zero());
    }
  }
  SUBCASE("empty support is a logic error") {
    std::vector<CostFunction> g{CostFunction(std::vector<ExtValue>(3))};
    CHECK_THROWS_AS((void)compute_alpha(g, ModelCosts{1, {0}}), std::logic_error);
  }
  SUBCASE("all supported cells infinite") {
    std::vector<CostFunction> g{CostFunction(
        {ExtValue(0), ExtValue::infinity(), ExtValue::infinity()})};
    CHECK_THROWS_AS((void)compute_alpha(g, ModelCosts{1, {1}}), std::domain_error);
  }
  SUBCASE("infinite cells are skipped") {
    std::vector<CostFunction> g{
        CostFunction({ExtValue(0), ExtValue(3), ExtValue::infinity()})};
    const AlphaResult a = compute_alpha(g, ModelCosts{1, {2}});
    CHECK(a.alpha == q(3, 2));
    REQUIRE(a.tight.size() == 1);
    CHECK(a.tight[0] == TightPair{0, 1});
    subtract_model(g, ModelCosts{1, {2}}, a.alpha);
    CHECK(g[0][2].is_infinite());
  }
}

TEST_CASE("select_tight_pair: largest time, then smallest job") {
  const std::vector<TightPair> pairs{{2, 14}, {3, 14}, {0, 3}};
  CHECK(select_tight_pair(pairs) == TightPair{2, 14});
  const std::vector<TightPair> single{{1, 5}};
  CHECK(select_tight_pair(single) == TightPair{1, 5});
  CHECK_THROWS((void)select_tight_pair(std::vector<TightPair>{}));
}

TEST_CASE("lr_cs on the counterexample") {
  const Instance cx = counterexample(4);
  const SolveResult res = lr_cs(cx);
  CHECK(res.primal_cost == ExtValue(16));
  CHECK(res.lower_bound == 6);
  CHECK(res.final_sigma == DueDateVector{11, 11, 16, 16});
  CHECK(res.schedule.meets(res.final_sigma));
  CHECK(res.schedule.well_formed(cx));

  std::vector<Time> t_star;
  std::vector<Rational> alpha;
  for (const auto& step : res.trace) {
    t_star.push_back(step.t_star);
    alpha.push_back(step.alpha);
  }
  CHECK(t_star == std::vector<Time>{1, 1, 1, 11, 4, 1, 12});
  CHECK(alpha == std::vector<Rational>{0, 0, 0, 1, 0, 0, 0});
  CHECK(res.trace[0].job == 2);
  CHECK(res.trace[0].time == 10);
  CHECK(res.trace[3].demand == 6);

  const LevelBoundReport lb = check_level_bound(cx, res);
  CHECK(lb.ok);
  CHECK(lb.levels == 7);
  CHECK(lb.max_ratio <= 4);
  CHECK(check_solve_structure(cx, res).ok);
}

TEST_CASE("lr_cs at p = 100 approaches a gap of 4") {
  const SolveResult res = lr_cs(counterexample(100));
  CHECK(res.primal_cost == ExtValue(400));
  CHECK(res.lower_bound == 102);
  CHECK(res.primal_cost.value() / res.lower_bound > q(392, 100));
}

TEST_CASE("lr_cs with zero costs returns a zero-cost feasible vector") {
  const Instance inst = zero_cost_instance({3});
  const SolveResult res = lr_cs(inst);
  CHECK(res.primal_cost.is_zero());
  CHECK(is_feasible(inst, res.final_sigma));
  CHECK(res.final_sigma[0] >= 3);
  CHECK(check_level_bound(inst, res).ok);
}

TEST_CASE("lr_cs on an empty instance has no levels") {
  const Instance empty(std::vector<Job>{}, std::vector<CostFunction>{});
  const SolveResult res = lr_cs(empty);
  CHECK(res.trace.empty());
  CHECK(res.primal_cost.is_zero());
  const LevelBoundReport lb = check_level_bound(empty, res);
  CHECK(lb.ok);
  CHECK(lb.levels == 0);
}

TEST_CASE("lr_cs rejects invalid input") {
  CHECK_THROWS_AS(lr_cs(zero_cost_instance({1, 2}, {0, 1})), std::invalid_argument);
  const Instance nonzero = make_instance({1}, {}, {[](Time) { return ExtValue(1); }});
  CHECK_THROWS_AS(lr_cs(nonzero), std::invalid_argument);
}

TEST_CASE("undo phase reverts increases that are no longer needed") {
  bool saw_revert = false;
  for (int seed = 0; seed < 60 && !saw_revert; ++seed) {
    const Instance inst = random_instance(static_cast<std::uint64_t>(seed), 4, 3, 1,
                                          CostModel::kWeightedTardiness);
    const SolveResult res = lr_cs(inst);
    for (const auto& step : res.trace) saw_revert = saw_revert || step.reverted;
    CHECK(check_solve_structure(inst, res).ok);
  }
  CHECK(saw_revert);
}

TEST_CASE("reconstruct_chains") {
  const Instance cx = counterexample(4);
  const SolveResult res = lr_cs(cx);
  const RecursionChains ch = reconstruct_chains(res);
  REQUIRE(ch.sigma.size() == res.trace.size() + 1);
  REQUIRE(ch.rho.size() == res.trace.size() + 1);
  CHECK(ch.sigma.front() == DueDateVector::zeros(4));
  CHECK(ch.rho.front() == res.final_sigma);
  for (std::size_t k = 0; k + 1 < ch.sigma.size(); ++k) {
    CHECK(ch.sigma[k].dominated_by(ch.sigma[k + 1]));
    CHECK(ch.sigma[k].dominated_by(ch.rho[k]));
  }
}

TEST_CASE("check_solve_structure detects tampering") {
  const Instance cx = counterexample(4);
  const SolveResult good = lr_cs(cx);

  SolveResult bad_bound = good;
  bad_bound.lower_bound += 1;
  CHECK_FALSE(check_solve_structure(cx, bad_bound).ok);

  SolveResult bad_alpha = good;
  bad_alpha.trace[3].alpha = 2;
  CHECK_FALSE(check_solve_structure(cx, bad_alpha).ok);

  SolveResult bad_choice = good;
  bad_choice.trace[0].job = 3;
  CHECK_FALSE(check_solve_structure(cx, bad_choice).ok);

  SolveResult bad_undo = good;
  bad_undo.trace[6].reverted = true;
  CHECK_FALSE(check_solve_structure(cx, bad_undo).ok);

  SolveResult bad_sigma = good;
  bad_sigma.final_sigma = DueDateVector{11, 11, 16, 10};
  CHECK_FALSE(check_solve_structure(cx, bad_sigma).ok);
}
