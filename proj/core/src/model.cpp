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

#include "lrsched/model.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace lrsched {

CostFunction::CostFunction(std::vector<ExtValue> values)
    : values_(std::move(values)) {}

const ExtValue& CostFunction::at(Time t) const {
  if (t < 0 || t > last()) {
    throw std::out_of_range("cost table index " + std::to_string(t) +
                            " outside [0, " + std::to_string(last()) + "]");
  }
  return values_[index(t)];
}

bool CostFunction::monotone() const {
  return std::is_sorted(values_.begin(), values_.end());
}

Instance::Instance(std::vector<Job> jobs, std::vector<CostFunction> costs,
                   std::optional<Time> horizon)
    : jobs_(std::move(jobs)), costs_(std::move(costs)) {
  if (jobs_.size() != costs_.size()) {
    throw std::invalid_argument("one cost function per job is required");
  }
  horizon_ = horizon.value_or(natural_horizon(jobs_));
  std::set<Time> r;
  for (const auto& j : jobs_) r.insert(j.rdate);
  release_dates_.assign(r.begin(), r.end());
}

bool Instance::has_release_dates() const {
  return std::any_of(jobs_.begin(), jobs_.end(),
                     [](const Job& j) { return j.rdate != 0; });
}

long Instance::total_ptime() const {
  return std::accumulate(jobs_.begin(), jobs_.end(), 0L,
                         [](long acc, const Job& j) { return acc + j.ptime; });
}

Time Instance::natural_horizon(std::span<const Job> jobs) {
  Time max_r = 0;
  Time sum_p = 0;
  for (const auto& j : jobs) {
    max_r = std::max(max_r, j.rdate);
    sum_p += j.ptime;
  }
  return max_r + sum_p;
}

DueDateVector DueDateVector::release(const Instance& inst) {
  std::vector<Time> r;
  r.reserve(inst.num_jobs());
  for (const auto& j : inst.jobs()) r.push_back(j.rdate);
  return DueDateVector(std::move(r));
}

bool DueDateVector::dominated_by(const DueDateVector& other) const {
  if (size() != other.size()) return false;
  for (std::size_t j = 0; j < size(); ++j) {
    if (due_[j] > other.due_[j]) return false;
  }
  return true;
}

std::string DueDateVector::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t j = 0; j < due_.size(); ++j) {
    if (j) os << ',';
    os << due_[j];
  }
  os << ')';
  return os.str();
}

bool Schedule::well_formed(const Instance& inst) const {
  const std::size_t n = inst.num_jobs();
  if (completion.size() != n) return false;
  if (slot_job.size() != static_cast<std::size_t>(inst.horizon())) return false;
  std::vector<int> count(n, 0);
  std::vector<Time> first(n, 0), last(n, 0);
  for (std::size_t s = 0; s < slot_job.size(); ++s) {
    const int id = slot_job[s];
    if (id == kIdle) continue;
    if (id < 1 || static_cast<std::size_t>(id) > n) return false;
    const JobIndex j = static_cast<JobIndex>(id - 1);
    const Time t = static_cast<Time>(s) + 1;
    if (t <= inst.rdate(j)) return false;
    if (count[j] == 0) first[j] = t;
    last[j] = t;
    ++count[j];
  }
  for (JobIndex j = 0; j < n; ++j) {
    if (count[j] != inst.ptime(j)) return false;
    if (completion[j] != last[j]) return false;
    if (!preemptive && last[j] - first[j] + 1 != inst.ptime(j)) return false;
  }
  return true;
}

bool Schedule::meets(const DueDateVector& sigma) const {
  if (sigma.size() != completion.size()) return false;
  for (std::size_t j = 0; j < completion.size(); ++j) {
    if (completion[j] > sigma[j]) return false;
  }
  return true;
}

bool ValidationReport::mentions(std::string_view needle) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const std::string& v) {
                       return v.find(needle) != std::string::npos;
                     });
}

std::string ValidationReport::str() const {
  std::string out;
  for (const auto& v : violations) {
    if (!out.empty()) out += "; ";
    out += v;
  }
  return out;
}

ValidationReport validate_instance(const Instance& inst) {
  ValidationReport rep;
  auto fail = [&](std::string msg) { rep.violations.push_back(std::move(msg)); };

  std::set<int> ids;
  for (std::size_t j = 0; j < inst.num_jobs(); ++j) {
    const Job& job = inst.job(j);
    const std::string who = "job " + std::to_string(job.id) + ": ";
    if (!ids.insert(job.id).second) fail(who + "duplicate id");
    if (job.ptime < 1) {
      fail(who + "ptime ≥ 1 violated (p=" + std::to_string(job.ptime) + ")");
    }
    if (job.rdate < 0) {
      fail(who + "rdate ≥ 0 violated (r=" + std::to_string(job.rdate) + ")");
    }
  }
  // ids must be exactly 1..n in order
  for (std::size_t j = 0; j < inst.num_jobs(); ++j) {
    if (inst.job(j).id != static_cast<int>(j) + 1) {
      fail("ids must be contiguous 1..n in order");
      break;
    }
  }

  const Time natural = Instance::natural_horizon(inst.jobs());
  if (inst.horizon() != natural) {
    fail("wrong horizon: " + std::to_string(inst.horizon()) + " (expected " +
         std::to_string(natural) + ")");
  }

  for (std::size_t j = 0; j < inst.num_jobs(); ++j) {
    const CostFunction& f = inst.cost(j);
    const std::string who = "job " + std::to_string(inst.job(j).id) + ": ";
    if (f.size() != static_cast<std::size_t>(inst.horizon()) + 1) {
      fail(who + "cost table length " + std::to_string(f.size()) +
           " != horizon + 1");
      continue;
    }
    if (!f.monotone()) fail(who + "non-monotone input cost");
    const Time init = inst.job(j).rdate;
    if (init >= 0 && init <= f.last() && !f[init].is_zero()) {
      fail(who + "nonzero cost at initial due date " + std::to_string(init));
    }
  }
  return rep;
}

void require_valid(const Instance& inst) {
  const auto rep = validate_instance(inst);
  if (!rep.ok()) throw std::invalid_argument("invalid instance: " + rep.str());
}

ExtValue total_cost(const Instance& inst, const DueDateVector& sigma,
                    std::span<const CostFunction> costs) {
  if (sigma.size() != inst.num_jobs() || costs.size() != inst.num_jobs()) {
    throw std::out_of_range("due-date vector size mismatch");
  }
  ExtValue sum;
  for (std::size_t j = 0; j < sigma.size(); ++j) {
    if (sigma[j] < 0 || sigma[j] > inst.horizon()) {
      throw std::out_of_range("due date " + std::to_string(sigma[j]) +
                              " outside the horizon");
    }
    sum += costs[j].at(sigma[j]);
  }
  return sum;
}

ExtValue schedule_cost(const Instance& inst, const Schedule& schedule) {
  return total_cost(inst, DueDateVector(schedule.completion));
}

}  // namespace lrsched
