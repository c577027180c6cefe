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

#include <span>
#include <string>
#include <vector>

#include "lrsched/demand.hpp"
#include "lrsched/model.hpp"

namespace lrsched {

/// y_{t,A}; A is the snapshot of A_t when the variable was raised.
struct DualVariable {
  Time t = 0;
  JobSet A;
  Rational value;
};

/// One growing iteration of the primal-dual procedure.
struct PDIteration {
  int k = 0;
  Time t = 0;
  JobSet A;
  int demand = 0;
  Rational y;          // dual update
  JobIndex job = 0;    // primal update x_{job,time} = 1
  Time time = 0;
  std::vector<Time> newly_covered;  // the S-set: slots that gained `job`
  bool pruned = false;
};

struct PrimalDualResult {
  DueDateVector due_dates;
  Schedule schedule;
  std::vector<DualVariable> duals;  // every activated variable, in order
  std::vector<PDIteration> trace;
  ExtValue primal_cost;
  Rational dual_objective;

  std::size_t nonzero_duals() const;
};

/// Growing phase with explicit dual variables, reverse-order pruning, EDD.
/// Ties: largest t for t^k, then largest time and smallest job for the tight
/// constraint. Throws std::invalid_argument for invalid instances or
/// instances with release dates.
PrimalDualResult primal_dual_solve(const Instance& inst);

/// sum y_{t,A} D(t,A).
Rational dual_objective(std::span<const DualVariable> duals,
                        const Instance& inst);

/// Every (j,s): sum_{t <= s, j not in A} p_j(t,A) y_{t,A} <= f_j(s).
bool check_dual_feasibility(std::span<const DualVariable> duals,
                            const Instance& inst);

struct CoverageEntry {
  Time t = 0;
  JobSet A;
  long covered = 0;  // sum over j in Abar_t \ A of p_j(t,A)
  int demand = 0;
  Rational ratio;
};

struct CoverageReport {
  std::vector<CoverageEntry> entries;  // one per positive dual
  Rational max_ratio;
  bool violated = false;               // some ratio exceeds 2
};

/// Evaluates the claimed "sum_{j in Abar_t \ A} p_j(t,A) <= 2 D(t,A)" for
/// every positive dual, with Abar_t = {j : d_j >= t} from the final due dates.
CoverageReport check_coverage_ratio(const PrimalDualResult& result,
                                       const Instance& inst);

}  // namespace lrsched
