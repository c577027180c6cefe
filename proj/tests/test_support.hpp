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

#include <functional>
#include <vector>

#include "lrsched/model.hpp"

namespace lrsched::testing {

using CostFn = std::function<ExtValue(Time)>;

/// Builds an instance with natural horizon; cost j is sampled on 0..T.
inline Instance make_instance(const std::vector<int>& ptimes,
                              const std::vector<int>& rdates,
                              const std::vector<CostFn>& costs) {
  std::vector<Job> jobs;
  for (std::size_t j = 0; j < ptimes.size(); ++j) {
    jobs.push_back({static_cast<int>(j) + 1, ptimes[j],
                    rdates.empty() ? 0 : rdates[j]});
  }
  const Time T = Instance::natural_horizon(jobs);
  std::vector<CostFunction> tables;
  for (std::size_t j = 0; j < ptimes.size(); ++j) {
    std::vector<ExtValue> v;
    for (Time t = 0; t <= T; ++t) v.push_back(costs[j](t));
    tables.emplace_back(std::move(v));
  }
  return Instance(std::move(jobs), std::move(tables));
}

inline CostFn zero_cost() {
  return [](Time) { return ExtValue(0); };
}

inline CostFn linear_cost(long w) {
  return [w](Time t) { return ExtValue(w * t); };
}

/// Instance with every cost identically zero.
inline Instance zero_cost_instance(const std::vector<int>& ptimes,
                                   const std::vector<int>& rdates = {}) {
  return make_instance(ptimes, rdates,
                       std::vector<CostFn>(ptimes.size(), zero_cost()));
}

inline Rational q(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace lrsched::testing
