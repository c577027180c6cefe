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

#include "lrsched/demand.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace lrsched {

JobSet::JobSet(std::size_t universe, std::initializer_list<JobIndex> jobs)
    : member_(universe, false) {
  for (JobIndex j : jobs) insert(j);
}

std::size_t JobSet::count() const {
  return static_cast<std::size_t>(
      std::count(member_.begin(), member_.end(), true));
}

std::vector<JobIndex> JobSet::members() const {
  std::vector<JobIndex> out;
  for (JobIndex j = 0; j < member_.size(); ++j) {
    if (member_[j]) out.push_back(j);
  }
  return out;
}

long JobSet::ptime_sum(const Instance& inst) const {
  long sum = 0;
  for (JobIndex j = 0; j < member_.size(); ++j) {
    if (member_[j]) sum += inst.ptime(j);
  }
  return sum;
}

std::string JobSet::str() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (JobIndex j : members()) {
    if (!first) os << ',';
    os << j + 1;
    first = false;
  }
  os << '}';
  return os.str();
}

namespace {

void check_slot(const Instance& inst, Time t) {
  if (t < 1 || t > inst.horizon()) {
    throw std::out_of_range("time slot " + std::to_string(t) +
                            " outside [1, " + std::to_string(inst.horizon()) +
                            "]");
  }
}

void check_release(const Instance& inst, Time r) {
  const auto& R = inst.release_dates();
  if (!std::binary_search(R.begin(), R.end(), r)) {
    throw std::invalid_argument(std::to_string(r) + " is not a release date");
  }
}

int clamp_demand(long v) { return v > 0 ? static_cast<int>(v) : 0; }

// cover[t] = p({j : sigma_j >= t}) for t = 1..T (index 0 unused).
std::vector<long> coverage(const Instance& inst, const DueDateVector& sigma) {
  const Time T = inst.horizon();
  std::vector<long> cover(static_cast<std::size_t>(T) + 2, 0);
  for (JobIndex j = 0; j < sigma.size(); ++j) {
    const Time s = std::clamp(sigma[j], 0, T);
    cover[static_cast<std::size_t>(s)] += inst.ptime(j);
  }
  for (Time t = T - 1; t >= 0; --t) {
    cover[static_cast<std::size_t>(t)] += cover[static_cast<std::size_t>(t) + 1];
  }
  return cover;
}

// below[t] = p({j : r <= r_j <= sigma_j < t}) for t = 0..T.
std::vector<long> interval_load(const Instance& inst, Time r,
                                const DueDateVector& sigma) {
  const Time T = inst.horizon();
  std::vector<long> below(static_cast<std::size_t>(T) + 2, 0);
  for (JobIndex j = 0; j < sigma.size(); ++j) {
    if (inst.rdate(j) < r || sigma[j] < inst.rdate(j) || sigma[j] >= T) {
      continue;
    }
    below[static_cast<std::size_t>(sigma[j]) + 1] += inst.ptime(j);
  }
  std::partial_sum(below.begin(), below.end(), below.begin());
  return below;
}

}  // namespace

int demand_set(const Instance& inst, Time t, const JobSet& A) {
  check_slot(inst, t);
  return clamp_demand(static_cast<long>(inst.horizon()) - t + 1 -
                      A.ptime_sum(inst));
}

int demand(const Instance& inst, Time t, const DueDateVector& sigma) {
  check_slot(inst, t);
  long covered = 0;
  for (JobIndex j = 0; j < sigma.size(); ++j) {
    if (sigma[j] >= t) covered += inst.ptime(j);
  }
  return clamp_demand(static_cast<long>(inst.horizon()) - t + 1 - covered);
}

int truncated_ptime(const Instance& inst, JobIndex j, Time t, const JobSet& A) {
  return std::min(inst.ptime(j), demand_set(inst, t, A));
}

int truncated_ptime(const Instance& inst, JobIndex j, Time t,
                    const DueDateVector& sigma) {
  return std::min(inst.ptime(j), demand(inst, t, sigma));
}

DemandPoint max_demand_point(const Instance& inst, const DueDateVector& sigma) {
  const Time T = inst.horizon();
  const auto cover = coverage(inst, sigma);
  DemandPoint best{1, std::nullopt, -1};
  for (Time t = 1; t <= T; ++t) {
    const int d = clamp_demand(static_cast<long>(T) - t + 1 -
                               cover[static_cast<std::size_t>(t)]);
    if (d >= best.value) best = {t, std::nullopt, d};
  }
  if (best.value < 0) best.value = 0;
  return best;
}

bool no_residual_demand(const Instance& inst, const DueDateVector& sigma) {
  const Time T = inst.horizon();
  const auto cover = coverage(inst, sigma);
  for (Time t = 1; t <= T; ++t) {
    if (static_cast<long>(T) - t + 1 > cover[static_cast<std::size_t>(t)]) {
      return false;
    }
  }
  return true;
}

int demand_rd(const Instance& inst, Time r, Time t,
              const DueDateVector& sigma) {
  check_release(inst, r);
  if (t <= r || t > inst.horizon()) {
    throw std::out_of_range("demand_rd needs r < t <= T (r=" +
                            std::to_string(r) + ", t=" + std::to_string(t) +
                            ")");
  }
  long load = 0;
  for (JobIndex j = 0; j < sigma.size(); ++j) {
    const Time rj = inst.rdate(j);
    if (r <= rj && rj <= sigma[j] && sigma[j] < t) load += inst.ptime(j);
  }
  return clamp_demand(static_cast<long>(r) + load - t + 1);
}

int truncated_ptime_rd(const Instance& inst, JobIndex j, Time r, Time t,
                       const DueDateVector& sigma) {
  return std::min(inst.ptime(j), demand_rd(inst, r, t, sigma));
}

DemandPoint max_demand_point_rd(const Instance& inst,
                                const DueDateVector& sigma) {
  const Time T = inst.horizon();
  DemandPoint best{0, std::nullopt, -1};
  for (Time r : inst.release_dates()) {
    const auto below = interval_load(inst, r, sigma);
    for (Time t = r + 1; t <= T; ++t) {
      const int d =
          clamp_demand(r + below[static_cast<std::size_t>(t)] - t + 1);
      // R is scanned in increasing order, so only a strictly larger t may
      // displace an equal-demand point found for a smaller r.
      if (d > best.value || (d == best.value && t > best.t)) {
        best = {t, r, d};
      }
    }
  }
  if (best.value < 0) best.value = 0;
  return best;
}

bool no_residual_demand_rd(const Instance& inst, const DueDateVector& sigma) {
  const Time T = inst.horizon();
  for (Time r : inst.release_dates()) {
    const auto below = interval_load(inst, r, sigma);
    for (Time t = r + 1; t <= T; ++t) {
      if (r + below[static_cast<std::size_t>(t)] - t + 1 > 0) return false;
    }
  }
  return true;
}

bool is_feasible(const Instance& inst, const DueDateVector& sigma) {
  return inst.has_release_dates() ? no_residual_demand_rd(inst, sigma)
                                  : no_residual_demand(inst, sigma);
}

std::vector<JobIndex> edd_order(const DueDateVector& sigma) {
  std::vector<JobIndex> order(sigma.size());
  std::iota(order.begin(), order.end(), JobIndex{0});
  std::stable_sort(order.begin(), order.end(), [&](JobIndex a, JobIndex b) {
    return sigma[a] < sigma[b];
  });
  return order;
}

Schedule priority_schedule(const Instance& inst,
                           std::span<const JobIndex> priority) {
  const std::size_t n = inst.num_jobs();
  const Time T = inst.horizon();
  std::vector<std::size_t> rank(n, n);
  for (std::size_t k = 0; k < priority.size(); ++k) rank.at(priority[k]) = k;

  Schedule out;
  out.preemptive = inst.has_release_dates();
  out.slot_job.assign(static_cast<std::size_t>(T), kIdle);
  out.completion.assign(n, 0);
  std::vector<int> left(n);
  for (JobIndex j = 0; j < n; ++j) left[j] = inst.ptime(j);

  for (Time t = 1; t <= T; ++t) {
    JobIndex pick = n;
    for (JobIndex j = 0; j < n; ++j) {
      if (left[j] == 0 || inst.rdate(j) >= t) continue;
      if (pick == n || rank[j] < rank[pick]) pick = j;
    }
    if (pick == n) continue;
    out.slot_job[static_cast<std::size_t>(t) - 1] = static_cast<int>(pick) + 1;
    if (--left[pick] == 0) out.completion[pick] = t;
  }
  return out;
}

Schedule edd_schedule(const Instance& inst, const DueDateVector& sigma) {
  if (inst.has_release_dates()) {
    throw std::invalid_argument("edd_schedule: instance has release dates");
  }
  for (Time t = 1; t <= inst.horizon(); ++t) {
    if (const int d = demand(inst, t, sigma); d > 0) {
      throw InfeasibleAssignment("infeasible due dates " + sigma.str() +
                                     ": residual demand " + std::to_string(d) +
                                     " at slot " + std::to_string(t),
                                 t, std::nullopt);
    }
  }
  const auto order = edd_order(sigma);
  Schedule s = priority_schedule(inst, order);
  s.preemptive = false;
  return s;
}

Schedule edd_schedule_preemptive(const Instance& inst,
                                 const DueDateVector& sigma) {
  for (JobIndex j = 0; j < sigma.size(); ++j) {
    if (sigma[j] < inst.rdate(j)) {
      throw std::invalid_argument("due date below release date for job " +
                                  std::to_string(j + 1));
    }
  }
  const DemandPoint worst = max_demand_point_rd(inst, sigma);
  if (worst.value > 0) {
    throw InfeasibleAssignment(
        "infeasible due dates " + sigma.str() + ": residual demand " +
            std::to_string(worst.value) + " on [" +
            std::to_string(*worst.r) + "," + std::to_string(worst.t) + ")",
        worst.t, worst.r);
  }
  const auto order = edd_order(sigma);
  Schedule s = priority_schedule(inst, order);
  s.preemptive = true;
  return s;
}

}  // namespace lrsched
