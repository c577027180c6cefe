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

#include "lrsched/primal_dual.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace lrsched {

std::size_t PrimalDualResult::nonzero_duals() const {
  return static_cast<std::size_t>(
      std::count_if(duals.begin(), duals.end(),
                    [](const DualVariable& y) { return sgn(y.value) > 0; }));
}

PrimalDualResult primal_dual_solve(const Instance& inst) {
  require_valid(inst);
  if (inst.has_release_dates()) {
    throw std::invalid_argument("primal_dual_solve: instance has release dates");
  }
  const std::size_t n = inst.num_jobs();
  const Time T = inst.horizon();
  const auto slot = [](Time t) { return static_cast<std::size_t>(t); };

  // covered[t] = A_t for t = 1..T+1 (A_{T+1} stays empty).
  std::vector<JobSet> covered(slot(T) + 2, JobSet(n));
  // lhs[j][s] = accumulated left side of dual constraint (j, s).
  std::vector<std::vector<Rational>> lhs(n,
                                         std::vector<Rational>(slot(T) + 1));

  PrimalDualResult res;
  const long max_iters = static_cast<long>(n) * static_cast<long>(T);

  for (;;) {
    Time tk = 0;
    int dk = 0;
    for (Time t = 1; t <= T; ++t) {
      const int d = demand_set(inst, t, covered[slot(t)]);
      if (d > 0 && d >= dk) {
        dk = d;
        tk = t;
      }
    }
    if (dk == 0) break;
    if (static_cast<long>(res.trace.size()) >= max_iters) {
      throw std::logic_error("primal_dual_solve: growing phase did not terminate");
    }
    const JobSet A = covered[slot(tk)];

    // Raise y_{tk,A} until the first constraint with j not in A, s >= tk
    // becomes tight.
    std::optional<Rational> y;
    JobIndex pick_j = 0;
    Time pick_s = 0;
    for (JobIndex j = 0; j < n; ++j) {
      if (A.contains(j)) continue;
      const int pj = std::min(inst.ptime(j), dk);
      for (Time s = tk; s <= T; ++s) {
        const ExtValue& f = inst.cost(j)[s];
        if (f.is_infinite()) continue;
        Rational room = (f.value() - lhs[j][slot(s)]) / pj;
        const bool better =
            !y || room < *y ||
            (room == *y && (s > pick_s || (s == pick_s && j < pick_j)));
        if (better) {
          y = std::move(room);
          pick_j = j;
          pick_s = s;
        }
      }
    }
    if (!y) {
      throw std::domain_error(
          "primal_dual_solve: no dual constraint can become tight");
    }

    for (JobIndex j = 0; j < n; ++j) {
      if (A.contains(j)) continue;
      const Rational inc = *y * std::min(inst.ptime(j), dk);
      for (Time s = tk; s <= T; ++s) lhs[j][slot(s)] += inc;
    }

    PDIteration it;
    it.k = static_cast<int>(res.trace.size()) + 1;
    it.t = tk;
    it.A = A;
    it.demand = dk;
    it.y = *y;
    it.job = pick_j;
    it.time = pick_s;
    for (Time s = 1; s <= pick_s; ++s) {
      if (!covered[slot(s)].contains(pick_j)) {
        covered[slot(s)].insert(pick_j);
        it.newly_covered.push_back(s);
      }
    }
    res.duals.push_back({tk, A, *y});
    res.trace.push_back(std::move(it));
  }

  // Pruning, in reverse order of assignment.
  for (auto it = res.trace.rbegin(); it != res.trace.rend(); ++it) {
    const JobIndex j = it->job;
    if (covered[slot(it->time) + 1].contains(j)) {
      it->pruned = true;
      continue;
    }
    bool still_covered = true;
    for (Time s : it->newly_covered) {
      const long rest = covered[slot(s)].ptime_sum(inst) - inst.ptime(j);
      if (rest < static_cast<long>(T) - s + 1) {
        still_covered = false;
        break;
      }
    }
    if (still_covered) {
      it->pruned = true;
      for (Time s : it->newly_covered) covered[slot(s)].erase(j);
    }
  }

  std::vector<Time> due(n, 0);
  for (const auto& it : res.trace) {
    if (!it.pruned) due[it.job] = std::max(due[it.job], it.time);
  }
  res.due_dates = DueDateVector(std::move(due));
  res.schedule = edd_schedule(inst, res.due_dates);
  res.primal_cost = total_cost(inst, res.due_dates);
  res.dual_objective = dual_objective(res.duals, inst);
  return res;
}

Rational dual_objective(std::span<const DualVariable> duals,
                        const Instance& inst) {
  Rational sum = 0;
  for (const auto& y : duals) sum += y.value * demand_set(inst, y.t, y.A);
  return sum;
}

bool check_dual_feasibility(std::span<const DualVariable> duals,
                            const Instance& inst) {
  for (JobIndex j = 0; j < inst.num_jobs(); ++j) {
    for (Time s = 1; s <= inst.horizon(); ++s) {
      const ExtValue& f = inst.cost(j)[s];
      if (f.is_infinite()) continue;
      Rational lhs = 0;
      for (const auto& y : duals) {
        if (y.t <= s && !y.A.contains(j)) {
          lhs += y.value * truncated_ptime(inst, j, y.t, y.A);
        }
      }
      if (lhs > f.value()) return false;
    }
  }
  return true;
}

CoverageReport check_coverage_ratio(const PrimalDualResult& result,
                                       const Instance& inst) {
  CoverageReport rep;
  for (const auto& y : result.duals) {
    if (sgn(y.value) <= 0) continue;
    CoverageEntry e;
    e.t = y.t;
    e.A = y.A;
    e.demand = demand_set(inst, y.t, y.A);
    for (JobIndex j = 0; j < inst.num_jobs(); ++j) {
      if (result.due_dates[j] >= y.t && !y.A.contains(j)) {
        e.covered += truncated_ptime(inst, j, y.t, y.A);
      }
    }
    e.ratio = Rational(e.covered, e.demand);
    e.ratio.canonicalize();
    if (e.ratio > rep.max_ratio) rep.max_ratio = e.ratio;
    if (e.ratio > 2) rep.violated = true;
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

}  // namespace lrsched
