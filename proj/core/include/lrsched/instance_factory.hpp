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

#include <cstdint>
#include <string>
#include <string_view>

#include "lrsched/model.hpp"

namespace lrsched {

/// The four-job gap family: p_j = p, T = 4p,
///   f_1 = f_2 = 0 on [1, p-1], p on [p, 3p-1], infinite after;
///   f_3 = f_4 = 0 on [1, 3p-2], p after.
/// Throws std::invalid_argument for p < 4.
Instance counterexample(int p);

/// Shifts every cost function right by T and adds delta*p_j on 1..2T, then
/// appends a dummy job of length T that is free up to T and infinite after.
/// The result has horizon 2T and n+1 jobs (the dummy has id n+1).
/// Throws std::invalid_argument unless delta > 0 and the input has no
/// release dates.
Instance properize(const Instance& inst, long delta_num, long delta_den);

enum class CostModel { kStep, kWeightedCompletion, kWeightedTardiness };

CostModel parse_cost_model(std::string_view name);
std::string_view cost_model_name(CostModel model);

/// Deterministic in all arguments. p_j uniform in [1, p_max]; kappa = 1 gives
/// all-zero release dates, kappa > 1 uses 0 plus kappa-1 distinct positive
/// dates, each used by at least one job. Costs satisfy f_j(r_j) = 0 and are
/// non-decreasing. Throws std::invalid_argument for n < 1, p_max < 1,
/// kappa < 1 or kappa > n.
Instance random_instance(std::uint64_t seed, int n, int p_max, int kappa,
                         CostModel model);

}  // namespace lrsched
