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

#include "lrsched/lr_solver_rd.hpp"

#include <algorithm>
#include <stdexcept>

#include "local_ratio_engine.hpp"

namespace lrsched {

namespace detail {
LevelBoundReport level_bound(const Instance& inst, const SolveResult& result,
                             bool rd);
}  // namespace detail

ModelCosts build_model_costs_rd(const Instance& inst,
                                const DueDateVector& sigma, Time r_star,
                                Time t_star) {
  const int d = demand_rd(inst, r_star, t_star, sigma);
  ModelCosts m;
  m.start = t_star;
  m.height.assign(inst.num_jobs(), 0);
  for (JobIndex i = 0; i < inst.num_jobs(); ++i) {
    const Time ri = inst.rdate(i);
    if (r_star <= ri && ri < t_star && sigma[i] < t_star) {
      m.height[i] = std::min(inst.ptime(i), d);
    }
  }
  return m;
}

namespace {

struct ReleasePolicy {
  const Instance& inst;

  DemandPoint worst(const DueDateVector& sigma) const {
    return max_demand_point_rd(inst, sigma);
  }
  ModelCosts model(const DueDateVector& sigma, const DemandPoint& p) const {
    return build_model_costs_rd(inst, sigma, *p.r, p.t);
  }
  std::size_t covering(const DueDateVector& sigma, const DemandPoint& p) const {
    std::size_t c = 0;
    for (JobIndex i = 0; i < inst.num_jobs(); ++i) {
      const Time ri = inst.rdate(i);
      if (*p.r <= ri && ri < p.t && sigma[i] >= p.t) ++c;
    }
    return c;
  }
  bool feasible(const DueDateVector& sigma) const {
    return no_residual_demand_rd(inst, sigma);
  }
  Schedule schedule(const DueDateVector& sigma) const {
    return edd_schedule_preemptive(inst, sigma);
  }
};

}  // namespace

SolveResult lr_cs_rd(const Instance& inst) {
  require_valid(inst);
  return detail::run_local_ratio(inst, DueDateVector::release(inst),
                                 ReleasePolicy{inst});
}

LevelBoundReport check_level_bound_rd(const Instance& inst,
                                      const SolveResult& result) {
  return detail::level_bound(inst, result, true);
}

}  // namespace lrsched
