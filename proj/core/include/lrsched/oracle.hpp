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

#include <cstddef>
#include <functional>
#include <vector>

#include "lrsched/model.hpp"

namespace lrsched {

inline constexpr std::size_t kDefaultOracleCap = 8;

struct OracleResult {
  ExtValue opt_cost;
  std::vector<JobIndex> order;  // lexicographically smallest optimal order
  Schedule witness;
};

/// Exact optimum by enumerating every completion order and building its
/// preemptive priority schedule. For a fixed order that schedule minimises
/// every completion time at once, so with non-decreasing costs the minimum
/// over orders is the optimum (non-preemptive when there are no release
/// dates). Throws std::invalid_argument when n exceeds `cap`.
OracleResult brute_force_opt(const Instance& inst,
                             std::size_t cap = kDefaultOracleCap);

struct ExhaustiveReport {
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::vector<DueDateVector> counterexamples;  // the first few failures
  bool ok() const { return failures == 0; }
};

using DueDatePredicate =
    std::function<bool(const Instance&, const DueDateVector&)>;

/// Evaluates `predicate` on every sigma with sigma_j in {r_j..T}. Stops
/// recording after `max_recorded` counterexamples but keeps counting.
/// Throws std::invalid_argument above `max_vectors` candidate vectors.
ExhaustiveReport exhaustive_duedate_check(const Instance& inst,
                                          const DueDatePredicate& predicate,
                                          std::size_t max_vectors = 5'000'000,
                                          std::size_t max_recorded = 16);

}  // namespace lrsched
