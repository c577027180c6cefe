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

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "lrsched/model.hpp"

namespace lrsched {

/// Subset of the jobs of an instance, by JobIndex.
class JobSet {
 public:
  JobSet() = default;
  explicit JobSet(std::size_t universe) : member_(universe, false) {}
  JobSet(std::size_t universe, std::initializer_list<JobIndex> jobs);

  bool contains(JobIndex j) const { return j < member_.size() && member_[j]; }
  void insert(JobIndex j) { member_.at(j) = true; }
  void erase(JobIndex j) { member_.at(j) = false; }
  std::size_t universe() const { return member_.size(); }
  std::size_t count() const;
  std::vector<JobIndex> members() const;
  long ptime_sum(const Instance& inst) const;

  /// "{1,3}" using job ids.
  std::string str() const;

  friend bool operator==(const JobSet&, const JobSet&) = default;

 private:
  std::vector<bool> member_;
};

/// A residual-demand maximiser. `r` is set only for the release-date variant.
struct DemandPoint {
  Time t = 0;
  std::optional<Time> r;
  int value = 0;
};

/// Raised when an EDD schedule is requested for an infeasible assignment.
class InfeasibleAssignment : public std::runtime_error {
 public:
  InfeasibleAssignment(std::string what, Time t, std::optional<Time> r)
      : std::runtime_error(std::move(what)), t_(t), r_(r) {}
  Time slot() const { return t_; }
  std::optional<Time> release() const { return r_; }

 private:
  Time t_;
  std::optional<Time> r_;
};

// --- no release dates -------------------------------------------------------

/// D(t, A) = max{0, T - t + 1 - p(A)}. Requires 1 <= t <= T.
int demand_set(const Instance& inst, Time t, const JobSet& A);

/// D(t, sigma) = D(t, {j : sigma_j >= t}).
int demand(const Instance& inst, Time t, const DueDateVector& sigma);

/// p_j(t, A) = min{p_j, D(t, A)}.
int truncated_ptime(const Instance& inst, JobIndex j, Time t, const JobSet& A);
int truncated_ptime(const Instance& inst, JobIndex j, Time t,
                    const DueDateVector& sigma);

/// Maximiser of D(t, sigma) over t; ties go to the largest t.
DemandPoint max_demand_point(const Instance& inst, const DueDateVector& sigma);

/// True iff D(t, sigma) = 0 for every t in 1..T.
bool no_residual_demand(const Instance& inst, const DueDateVector& sigma);

// --- release dates ----------------------------------------------------------

/// D(r, t, sigma) = max{r + p({j : r <= r_j <= sigma_j < t}) - t + 1, 0}.
/// Requires r in the release-date set and r < t <= T.
int demand_rd(const Instance& inst, Time r, Time t, const DueDateVector& sigma);

int truncated_ptime_rd(const Instance& inst, JobIndex j, Time r, Time t,
                       const DueDateVector& sigma);

/// Maximiser of D(r, t, sigma) over r in R, r < t <= T; ties go to the
/// largest t, then the smallest r.
DemandPoint max_demand_point_rd(const Instance& inst,
                                const DueDateVector& sigma);

/// True iff D(r, t, sigma) = 0 for every r in R and r < t <= T.
bool no_residual_demand_rd(const Instance& inst, const DueDateVector& sigma);

// --- feasibility and EDD ----------------------------------------------------

/// Dispatches on inst.has_release_dates(). The two criteria coincide when all
/// release dates are 0.
bool is_feasible(const Instance& inst, const DueDateVector& sigma);

/// Jobs sorted by (sigma_j, id).
std::vector<JobIndex> edd_order(const DueDateVector& sigma);

/// Unit-slot list schedule: each slot runs the released, unfinished job that
/// comes first in `priority`. Without release dates the result is
/// non-preemptive.
Schedule priority_schedule(const Instance& inst,
                           std::span<const JobIndex> priority);

/// Non-preemptive EDD for instances without release dates. Throws
/// InfeasibleAssignment naming the first slot with positive residual demand.
Schedule edd_schedule(const Instance& inst, const DueDateVector& sigma);

/// Preemptive EDD. Throws InfeasibleAssignment naming a violated [r, t).
Schedule edd_schedule_preemptive(const Instance& inst,
                                 const DueDateVector& sigma);

}  // namespace lrsched
