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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lrsched/ext_value.hpp"

namespace lrsched {

/// Time slots are 1-based; slot t covers the interval [t-1, t). Value 0 is
/// the "no due date yet" state of a due-date vector.
using Time = int;

/// Zero-based position of a job inside an Instance. Job ids are index + 1.
using JobIndex = std::size_t;

struct Job {
  int id = 0;
  int ptime = 1;
  int rdate = 0;

  friend bool operator==(const Job&, const Job&) = default;
};

/// Dense cost table over t = 0..T.
class CostFunction {
 public:
  CostFunction() = default;
  explicit CostFunction(std::vector<ExtValue> values);

  const ExtValue& operator[](Time t) const { return values_[index(t)]; }
  ExtValue& operator[](Time t) { return values_[index(t)]; }
  const ExtValue& at(Time t) const;

  /// Last valid index (T for a table of length T+1).
  Time last() const { return static_cast<Time>(values_.size()) - 1; }
  std::size_t size() const { return values_.size(); }
  const std::vector<ExtValue>& values() const { return values_; }

  bool monotone() const;

  friend bool operator==(const CostFunction&, const CostFunction&) = default;

 private:
  static std::size_t index(Time t) { return static_cast<std::size_t>(t); }
  std::vector<ExtValue> values_;
};

/// Jobs, one cost table per job, and the horizon. Construction does not
/// enforce invariants; validate_instance() reports them.
class Instance {
 public:
  Instance() = default;
  /// Throws std::invalid_argument if jobs and costs differ in count.
  /// The horizon defaults to max_j r_j + sum_j p_j.
  Instance(std::vector<Job> jobs, std::vector<CostFunction> costs,
           std::optional<Time> horizon = std::nullopt);

  std::size_t num_jobs() const { return jobs_.size(); }
  const std::vector<Job>& jobs() const { return jobs_; }
  const Job& job(JobIndex j) const { return jobs_.at(j); }
  int ptime(JobIndex j) const { return jobs_[j].ptime; }
  int rdate(JobIndex j) const { return jobs_[j].rdate; }
  const std::vector<CostFunction>& costs() const { return costs_; }
  const CostFunction& cost(JobIndex j) const { return costs_.at(j); }

  Time horizon() const { return horizon_; }
  /// Sorted distinct release dates.
  const std::vector<Time>& release_dates() const { return release_dates_; }
  std::size_t kappa() const { return release_dates_.size(); }
  bool has_release_dates() const;
  long total_ptime() const;

  /// max_j r_j + sum_j p_j; equals sum_j p_j when every r_j is 0.
  static Time natural_horizon(std::span<const Job> jobs);

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  std::vector<Job> jobs_;
  std::vector<CostFunction> costs_;
  Time horizon_ = 0;
  std::vector<Time> release_dates_;
};

/// sigma_j in {0} ∪ {1..T}; indexed by JobIndex.
class DueDateVector {
 public:
  DueDateVector() = default;
  explicit DueDateVector(std::vector<Time> due) : due_(std::move(due)) {}
  DueDateVector(std::initializer_list<Time> due) : due_(due) {}

  static DueDateVector zeros(std::size_t n) {
    return DueDateVector(std::vector<Time>(n, 0));
  }
  /// (r_1, ..., r_n).
  static DueDateVector release(const Instance& inst);

  std::size_t size() const { return due_.size(); }
  Time operator[](JobIndex j) const { return due_[j]; }
  Time& operator[](JobIndex j) { return due_[j]; }
  const std::vector<Time>& values() const { return due_; }

  /// The vector (sigma_{-j}, s).
  DueDateVector with(JobIndex j, Time s) const {
    DueDateVector out = *this;
    out.due_.at(j) = s;
    return out;
  }

  /// Pointwise <=.
  bool dominated_by(const DueDateVector& other) const;

  std::string str() const;

  friend bool operator==(const DueDateVector&, const DueDateVector&) = default;

 private:
  std::vector<Time> due_;
};

inline constexpr int kIdle = 0;

/// Unit-slot assignment. slot_job[t-1] is the id of the job processed in
/// slot t, or kIdle.
struct Schedule {
  std::vector<int> slot_job;
  std::vector<Time> completion;  // by JobIndex
  bool preemptive = false;

  /// Each job gets exactly p_j slots, none before its release date, and
  /// (non-preemptive) a contiguous block; completion matches the last slot.
  bool well_formed(const Instance& inst) const;
  bool meets(const DueDateVector& sigma) const;
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
  bool mentions(std::string_view needle) const;
  std::string str() const;
};

ValidationReport validate_instance(const Instance& inst);

/// Throws std::invalid_argument listing every violation.
void require_valid(const Instance& inst);

/// sum_j g_j(sigma_j). Throws std::out_of_range for due dates outside
/// [0, T] or a size mismatch.
ExtValue total_cost(const Instance& inst, const DueDateVector& sigma,
                    std::span<const CostFunction> costs);

inline ExtValue total_cost(const Instance& inst, const DueDateVector& sigma) {
  return total_cost(inst, sigma, inst.costs());
}

/// sum_j f_j(C_j) for a schedule's completion times.
ExtValue schedule_cost(const Instance& inst, const Schedule& schedule);

}  // namespace lrsched
