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

#include "lrsched/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "lrsched/demand.hpp"

namespace lrsched {

OracleResult brute_force_opt(const Instance& inst, std::size_t cap) {
  const std::size_t n = inst.num_jobs();
  if (n > cap) {
    throw std::invalid_argument("oracle: " + std::to_string(n) +
                                " jobs exceed the cap of " +
                                std::to_string(cap));
  }
  std::vector<JobIndex> order(n);
  std::iota(order.begin(), order.end(), JobIndex{0});

  OracleResult best;
  bool have = false;
  do {
    Schedule s = priority_schedule(inst, order);
    ExtValue cost;
    for (JobIndex j = 0; j < n && cost.is_finite(); ++j) {
      cost += inst.cost(j).at(s.completion[j]);
    }
    if (!have || cost < best.opt_cost) {
      best.opt_cost = std::move(cost);
      best.order = order;
      best.witness = std::move(s);
      have = true;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  if (!have) best.witness = priority_schedule(inst, order);
  return best;
}

ExhaustiveReport exhaustive_duedate_check(const Instance& inst,
                                          const DueDatePredicate& predicate,
                                          std::size_t max_vectors,
                                          std::size_t max_recorded) {
  const std::size_t n = inst.num_jobs();
  const Time T = inst.horizon();
  std::size_t total = 1;
  for (JobIndex j = 0; j < n; ++j) {
    const auto range = static_cast<std::size_t>(T - inst.rdate(j) + 1);
    if (range == 0 || total > max_vectors / range) {
      throw std::invalid_argument("exhaustive check: search space too large");
    }
    total *= range;
  }

  ExhaustiveReport rep;
  DueDateVector sigma = DueDateVector::release(inst);
  for (;;) {
    ++rep.checked;
    if (!predicate(inst, sigma)) {
      ++rep.failures;
      if (rep.counterexamples.size() < max_recorded) {
        rep.counterexamples.push_back(sigma);
      }
    }
    // odometer increment
    JobIndex j = 0;
    while (j < n && sigma[j] == T) {
      sigma[j] = inst.rdate(j);
      ++j;
    }
    if (j == n) break;
    ++sigma[j];
  }
  return rep;
}

}  // namespace lrsched
