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

#include "lrsched/instance_factory.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace lrsched {

Instance counterexample(int p) {
  if (p < 4) throw std::invalid_argument("p must be ≥ 4");
  const Time T = 4 * p;
  std::vector<Job> jobs;
  std::vector<CostFunction> costs;
  for (int id = 1; id <= 4; ++id) {
    jobs.push_back({id, p, 0});
    std::vector<ExtValue> v(static_cast<std::size_t>(T) + 1);
    for (Time t = 1; t <= T; ++t) {
      ExtValue& x = v[static_cast<std::size_t>(t)];
      if (id <= 2) {
        if (t >= 3 * p) {
          x = ExtValue::infinity();
        } else if (t >= p) {
          x = ExtValue(p);
        }
      } else if (t >= 3 * p - 1) {
        x = ExtValue(p);
      }
    }
    costs.emplace_back(std::move(v));
  }
  return Instance(std::move(jobs), std::move(costs));
}

Instance properize(const Instance& inst, long delta_num, long delta_den) {
  if (delta_den == 0) throw std::invalid_argument("zero delta denominator");
  Rational delta(delta_num, delta_den);
  delta.canonicalize();
  if (sgn(delta) <= 0) throw std::invalid_argument("delta must be > 0");
  if (inst.has_release_dates()) {
    throw std::invalid_argument("properize: instance has release dates");
  }
  const Time T = inst.horizon();
  const Time T2 = 2 * T;
  const std::size_t n = inst.num_jobs();

  std::vector<Job> jobs;
  std::vector<CostFunction> costs;
  for (JobIndex j = 0; j < n; ++j) {
    jobs.push_back({static_cast<int>(j) + 1, inst.ptime(j), 0});
    const ExtValue base(Rational(delta * inst.ptime(j)));
    std::vector<ExtValue> v(static_cast<std::size_t>(T2) + 1);
    for (Time t = 1; t <= T2; ++t) {
      ExtValue x = base;
      if (t > T) x += inst.cost(j).at(t - T);
      v[static_cast<std::size_t>(t)] = std::move(x);
    }
    costs.emplace_back(std::move(v));
  }
  jobs.push_back({static_cast<int>(n) + 1, T, 0});
  std::vector<ExtValue> dummy(static_cast<std::size_t>(T2) + 1);
  for (Time t = T + 1; t <= T2; ++t) {
    dummy[static_cast<std::size_t>(t)] = ExtValue::infinity();
  }
  costs.emplace_back(std::move(dummy));
  return Instance(std::move(jobs), std::move(costs));
}

CostModel parse_cost_model(std::string_view name) {
  if (name == "step") return CostModel::kStep;
  if (name == "weighted_completion") return CostModel::kWeightedCompletion;
  if (name == "weighted_tardiness") return CostModel::kWeightedTardiness;
  throw std::invalid_argument("unknown cost model '" + std::string(name) + "'");
}

std::string_view cost_model_name(CostModel model) {
  switch (model) {
    case CostModel::kStep:
      return "step";
    case CostModel::kWeightedCompletion:
      return "weighted_completion";
    case CostModel::kWeightedTardiness:
      return "weighted_tardiness";
  }
  return "?";
}

Instance random_instance(std::uint64_t seed, int n, int p_max, int kappa,
                         CostModel model) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (p_max < 1) throw std::invalid_argument("p_max must be >= 1");
  if (kappa < 1 || kappa > n) {
    throw std::invalid_argument("kappa must satisfy 1 <= kappa <= n");
  }
  std::mt19937_64 rng(seed);
  auto uniform = [&rng](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };

  std::vector<Job> jobs(static_cast<std::size_t>(n));
  int total_p = 0;
  for (int i = 0; i < n; ++i) {
    jobs[static_cast<std::size_t>(i)].id = i + 1;
    jobs[static_cast<std::size_t>(i)].ptime = uniform(1, p_max);
    total_p += jobs[static_cast<std::size_t>(i)].ptime;
  }

  std::vector<Time> dates{0};
  if (kappa > 1) {
    const int span = std::max(kappa - 1, total_p / 2);
    std::set<Time> picked;
    while (static_cast<int>(picked.size()) < kappa - 1) {
      picked.insert(uniform(1, span));
    }
    dates.insert(dates.end(), picked.begin(), picked.end());
  }
  // every date used at least once, the rest uniform, then shuffled
  std::vector<Time> assigned(dates.begin(), dates.end());
  while (static_cast<int>(assigned.size()) < n) {
    assigned.push_back(dates[static_cast<std::size_t>(
        uniform(0, static_cast<int>(dates.size()) - 1))]);
  }
  std::shuffle(assigned.begin(), assigned.end(), rng);
  for (int i = 0; i < n; ++i) {
    jobs[static_cast<std::size_t>(i)].rdate = assigned[static_cast<std::size_t>(i)];
  }

  const Time T = Instance::natural_horizon(jobs);
  std::vector<CostFunction> costs;
  for (const Job& job : jobs) {
    std::vector<ExtValue> v(static_cast<std::size_t>(T) + 1);
    const int w = uniform(1, 5);
    switch (model) {
      case CostModel::kStep: {
        const int steps = uniform(1, 3);
        std::vector<std::pair<Time, Rational>> breaks;
        for (int k = 0; k < steps; ++k) {
          Rational inc(uniform(1, 6), uniform(1, 3));
          inc.canonicalize();
          breaks.emplace_back(uniform(job.rdate + 1, T), inc);
        }
        for (Time t = 0; t <= T; ++t) {
          Rational level = 0;
          for (const auto& [at, inc] : breaks) {
            if (t >= at) level += inc;
          }
          v[static_cast<std::size_t>(t)] = ExtValue(level);
        }
        break;
      }
      case CostModel::kWeightedCompletion:
        for (Time t = 0; t <= T; ++t) {
          v[static_cast<std::size_t>(t)] = ExtValue(
              static_cast<long>(w) * std::max(0, t - job.rdate));
        }
        break;
      case CostModel::kWeightedTardiness: {
        const Time due = uniform(job.rdate, std::min(T, job.rdate + total_p));
        for (Time t = 0; t <= T; ++t) {
          v[static_cast<std::size_t>(t)] =
              ExtValue(static_cast<long>(w) * std::max(0, t - due));
        }
        break;
      }
    }
    costs.emplace_back(std::move(v));
  }
  return Instance(std::move(jobs), std::move(costs));
}

}  // namespace lrsched
