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

#pragma once

// Shared skeleton of the two local-ratio solvers. The recursion is unrolled
// into a growing loop and a LIFO undo loop: every recursive level performs
// exactly one due-date increase before its call and one optional revert
// after it, so the two formulations visit the same states.

#include <stdexcept>

#include "lrsched/demand.hpp"
#include "lrsched/lr_solver.hpp"

namespace lrsched::detail {

// Policy requirements:
//   DemandPoint worst(const DueDateVector&) const
//   ModelCosts model(const DueDateVector&, const DemandPoint&) const
//   std::size_t covering(const DueDateVector&, const DemandPoint&) const
//   bool feasible(const DueDateVector&) const
//   Schedule schedule(const DueDateVector&) const
template <class Policy>
SolveResult run_local_ratio(const Instance& inst, DueDateVector sigma,
                            const Policy& policy) {
  SolveResult res;
  res.initial_sigma = sigma;
  std::vector<CostFunction> g = inst.costs();
  const long max_levels =
      static_cast<long>(inst.num_jobs()) * static_cast<long>(inst.horizon());

  for (;;) {
    const DemandPoint point = policy.worst(sigma);
    if (point.value == 0) break;
    if (static_cast<long>(res.trace.size()) >= max_levels) {
      throw std::logic_error("local-ratio growing exceeded n*T levels");
    }
    const ModelCosts model = policy.model(sigma, point);
    const AlphaResult alpha = compute_alpha(g, model);
    subtract_model(g, model, alpha.alpha);
    const TightPair pick = select_tight_pair(alpha.tight);

    DecompositionStep step;
    step.level = static_cast<int>(res.trace.size()) + 1;
    step.t_star = point.t;
    step.r_star = point.r;
    step.demand = point.value;
    step.alpha = alpha.alpha;
    step.job = pick.job;
    step.time = pick.time;
    step.previous_due = sigma[pick.job];
    step.covering = policy.covering(sigma, point);
    step.model_support = model.support();
    res.lower_bound += alpha.alpha * point.value;
    res.trace.push_back(std::move(step));

    sigma[pick.job] = pick.time;
  }

  DueDateVector rho = sigma;
  for (auto it = res.trace.rbegin(); it != res.trace.rend(); ++it) {
    DueDateVector candidate = rho.with(it->job, it->previous_due);
    if (policy.feasible(candidate)) {
      rho = std::move(candidate);
      it->reverted = true;
    }
  }

  res.final_sigma = rho;
  res.schedule = policy.schedule(rho);
  res.primal_cost = total_cost(inst, rho);
  res.residual = std::move(g);
  return res;
}

}  // namespace lrsched::detail
