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

#include "lrsched/lr_solver.hpp"

namespace lrsched {

/// height_i = p_i(r*, t*, sigma) if r* <= r_i < t* and sigma_i < t*, else 0.
ModelCosts build_model_costs_rd(const Instance& inst,
                                const DueDateVector& sigma, Time r_star,
                                Time t_star);

/// Release-date variant of lr_cs. Starts from sigma = (r_1, ..., r_n), picks
/// (r*, t*) maximising D(r, t, sigma), and returns a preemptive EDD schedule.
/// Throws std::invalid_argument on invalid input.
SolveResult lr_cs_rd(const Instance& inst);

/// Per level: sum over {i : r* <= r_i, sigma_i < t* <= rho_i} of
/// p_i(r*, t*, sigma) <= 4 kappa D(r*, t*, sigma).
LevelBoundReport check_level_bound_rd(const Instance& inst,
                                      const SolveResult& result);

}  // namespace lrsched
