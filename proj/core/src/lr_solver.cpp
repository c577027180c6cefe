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

#include "lrsched/lr_solver.hpp"

#include <algorithm>
#include <stdexcept>

#include "local_ratio_engine.hpp"
#include "lrsched/lr_solver_rd.hpp"

namespace lrsched {

std::vector<JobIndex> ModelCosts::support() const {
  std::vector<JobIndex> out;
  for (JobIndex i = 0; i < height.size(); ++i) {
    if (height[i] > 0) out.push_back(i);
  }
  return out;
}

ModelCosts build_model_costs(const Instance& inst, const DueDateVector& sigma,
                             Time t_star) {
  const int d = demand(inst, t_star, sigma);
  ModelCosts m;
  m.start = t_star;
  m.height.assign(inst.num_jobs(), 0);
  for (JobIndex i = 0; i < inst.num_jobs(); ++i) {
    if (sigma[i] < t_star) m.height[i] = std::min(inst.ptime(i), d);
  }
  return m;
}

AlphaResult compute_alpha(std::span<const CostFunction> g,
                          const ModelCosts& model) {
  AlphaResult out;
  bool any_support = false;
  bool found = false;
  for (JobIndex i = 0; i < g.size(); ++i) {
    const int h = model.height.at(i);
    if (h <= 0) continue;
    any_support = true;
    for (Time t = std::max(model.start, 1); t <= g[i].last(); ++t) {
      const ExtValue& v = g[i][t];
      if (v.is_infinite()) continue;
      Rational ratio = v.value() / h;
      if (!found || ratio < out.alpha) {
        out.alpha = std::move(ratio);
        out.tight.clear();
        out.tight.push_back({i, t});
        found = true;
      } else if (ratio == out.alpha) {
        out.tight.push_back({i, t});
      }
    }
  }
  if (!any_support) {
    throw std::logic_error("compute_alpha: model cost vector has empty support");
  }
  if (!found) {
    throw std::domain_error(
        "compute_alpha: every supported residual cost is infinite");
  }
  return out;
}

TightPair select_tight_pair(std::span<const TightPair> tight) {
  if (tight.empty()) throw std::logic_error("select_tight_pair: empty set");
  return *std::min_element(tight.begin(), tight.end(),
                           [](const TightPair& a, const TightPair& b) {
                             if (a.time != b.time) return a.time > b.time;
                             return a.job < b.job;
                           });
}

void subtract_model(std::vector<CostFunction>& g, const ModelCosts& model,
                    const Rational& alpha) {
  for (JobIndex i = 0; i < g.size(); ++i) {
    const int h = model.height.at(i);
    if (h <= 0) continue;
    const Rational step = alpha * h;
    for (Time t = std::max(model.start, 1); t <= g[i].last(); ++t) {
      g[i][t] -= step;
    }
  }
}

namespace {

struct PlainPolicy {
  const Instance& inst;

  DemandPoint worst(const DueDateVector& sigma) const {
    return max_demand_point(inst, sigma);
  }
  ModelCosts model(const DueDateVector& sigma, const DemandPoint& p) const {
    return build_model_costs(inst, sigma, p.t);
  }
  std::size_t covering(const DueDateVector& sigma, const DemandPoint& p) const {
    return static_cast<std::size_t>(
        std::count_if(sigma.values().begin(), sigma.values().end(),
                      [&](Time s) { return s >= p.t; }));
  }
  bool feasible(const DueDateVector& sigma) const {
    return no_residual_demand(inst, sigma);
  }
  Schedule schedule(const DueDateVector& sigma) const {
    return edd_schedule(inst, sigma);
  }
};

bool is_rd_trace(const SolveResult& result) {
  return !result.trace.empty() && result.trace.front().r_star.has_value();
}

}  // namespace

SolveResult lr_cs(const Instance& inst) {
  require_valid(inst);
  if (inst.has_release_dates()) {
    throw std::invalid_argument("lr_cs: instance has release dates");
  }
  return detail::run_local_ratio(inst, DueDateVector::zeros(inst.num_jobs()),
                                 PlainPolicy{inst});
}

RecursionChains reconstruct_chains(const SolveResult& result) {
  RecursionChains c;
  const std::size_t K = result.trace.size();
  c.sigma.reserve(K + 1);
  c.sigma.push_back(result.initial_sigma);
  for (const auto& step : result.trace) {
    c.sigma.push_back(c.sigma.back().with(step.job, step.time));
  }
  c.rho.assign(K + 1, DueDateVector{});
  c.rho[K] = c.sigma[K];
  for (std::size_t k = K; k-- > 0;) {
    const auto& step = result.trace[k];
    c.rho[k] = step.reverted ? c.rho[k + 1].with(step.job, step.previous_due)
                             : c.rho[k + 1];
  }
  return c;
}

namespace detail {

LevelBoundReport level_bound(const Instance& inst, const SolveResult& result,
                             bool rd) {
  LevelBoundReport rep;
  rep.factor = rd ? Rational(4 * static_cast<long>(inst.kappa())) : Rational(4);
  const auto chains = reconstruct_chains(result);
  rep.levels = result.trace.size();
  for (std::size_t k = 0; k < result.trace.size(); ++k) {
    const auto& step = result.trace[k];
    const DueDateVector& sigma = chains.sigma[k];
    const DueDateVector& rho = chains.rho[k];
    const Time t = step.t_star;
    int d = 0;
    if (rd) {
      if (!step.r_star) throw std::invalid_argument("trace lacks r*");
      d = demand_rd(inst, *step.r_star, t, sigma);
    } else {
      d = demand(inst, t, sigma);
    }
    long lhs = 0;
    for (JobIndex i = 0; i < inst.num_jobs(); ++i) {
      if (rd && inst.rdate(i) < *step.r_star) continue;
      if (sigma[i] < t && t <= rho[i]) lhs += std::min(inst.ptime(i), d);
    }
    if (d <= 0) {
      rep.ok = false;
      rep.violations.push_back("level " + std::to_string(step.level) +
                               ": non-positive demand at t*");
      continue;
    }
    Rational ratio(lhs, d);
    ratio.canonicalize();
    if (ratio > rep.max_ratio) rep.max_ratio = ratio;
    if (ratio > rep.factor) {
      rep.ok = false;
      rep.violations.push_back("level " + std::to_string(step.level) +
                               ": ratio " + to_string(ratio) + " > " +
                               to_string(rep.factor));
    }
  }
  return rep;
}

}  // namespace detail

LevelBoundReport check_level_bound(const Instance& inst,
                                   const SolveResult& result) {
  if (is_rd_trace(result)) {
    throw std::invalid_argument(
        "check_level_bound: release-date trace, use check_level_bound_rd");
  }
  return detail::level_bound(inst, result, false);
}

std::string StructureReport::str() const {
  std::string out;
  for (const auto& v : violations) {
    if (!out.empty()) out += "\n";
    out += v;
  }
  return out;
}

StructureReport check_solve_structure(const Instance& inst,
                                      const SolveResult& result) {
  StructureReport rep;
  auto fail = [&](std::string msg) {
    rep.ok = false;
    rep.violations.push_back(std::move(msg));
  };
  const bool rd = is_rd_trace(result);
  const std::size_t n = inst.num_jobs();
  const Time T = inst.horizon();
  const auto chains = reconstruct_chains(result);

  if (static_cast<long>(result.trace.size()) >
      static_cast<long>(n) * static_cast<long>(T)) {
    fail("more than n*T growing levels");
  }

  // Local-ratio accounting: residual g and the accumulated sum of alpha*ghat.
  std::vector<std::vector<Rational>> used(
      n, std::vector<Rational>(static_cast<std::size_t>(T) + 1));
  std::vector<CostFunction> g = inst.costs();
  Rational bound = 0;

  for (std::size_t k = 0; k < result.trace.size(); ++k) {
    const auto& step = result.trace[k];
    const DueDateVector& sigma = chains.sigma[k];
    const std::string at = "level " + std::to_string(step.level) + ": ";

    if (step.job >= n) {
      fail(at + "job index out of range");
      return rep;
    }
    if (sigma[step.job] != step.previous_due) fail(at + "previous due mismatch");
    if (!(step.previous_due < step.t_star && step.t_star <= step.time)) {
      fail(at + "chosen pair violates sigma_j < t* <= s");
    }
    if (!chains.sigma[k].dominated_by(chains.sigma[k + 1])) {
      fail(at + "sigma chain not monotone");
    }

    for (JobIndex j = 0; j < n; ++j) {
      if (!g[j].at(sigma[j]).is_zero()) {
        fail(at + "residual of job " + std::to_string(j + 1) +
             " nonzero at its current due date");
      }
    }

    // Recompute the demand maximiser by exhaustive scan.
    int best = 0;
    Time best_t = 0;
    std::optional<Time> best_r;
    if (rd) {
      for (Time r : inst.release_dates()) {
        for (Time t = r + 1; t <= T; ++t) {
          const int d = demand_rd(inst, r, t, sigma);
          if (d > best || (d == best && d > 0 && t > best_t)) {
            best = d;
            best_t = t;
            best_r = r;
          }
        }
      }
    } else {
      for (Time t = 1; t <= T; ++t) {
        const int d = demand(inst, t, sigma);
        if (d > 0 && d >= best) {
          best = d;
          best_t = t;
        }
      }
    }
    if (best != step.demand || best_t != step.t_star || best_r != step.r_star) {
      fail(at + "recorded demand point is not the maximiser");
    }

    // Model costs from the definition.
    std::vector<int> h(n, 0);
    for (JobIndex i = 0; i < n; ++i) {
      bool eligible = sigma[i] < step.t_star;
      if (rd) {
        eligible = eligible && *step.r_star <= inst.rdate(i) &&
                   inst.rdate(i) < step.t_star;
      }
      if (eligible) h[i] = std::min(inst.ptime(i), step.demand);
    }
    std::optional<Rational> alpha;
    for (JobIndex i = 0; i < n; ++i) {
      if (h[i] == 0) continue;
      for (Time t = step.t_star; t <= T; ++t) {
        if (g[i][t].is_infinite()) continue;
        Rational q = g[i][t].value() / h[i];
        if (!alpha || q < *alpha) alpha = q;
      }
    }
    if (!alpha || *alpha != step.alpha) {
      fail(at + "alpha is not the largest feasible scaling");
      return rep;
    }
    bound += step.alpha * step.demand;
    for (JobIndex i = 0; i < n; ++i) {
      if (h[i] == 0) continue;
      const Rational delta = step.alpha * h[i];
      for (Time t = step.t_star; t <= T; ++t) {
        used[i][static_cast<std::size_t>(t)] += delta;
        try {
          g[i][t] -= delta;
        } catch (const std::domain_error&) {
          fail(at + "residual went negative");
          return rep;
        }
      }
    }
    if (h[step.job] == 0 || !g[step.job][step.time].is_zero()) {
      fail(at + "chosen pair is not tight");
    }
  }

  const std::size_t K = result.trace.size();
  if (!is_feasible(inst, chains.sigma[K])) fail("grown vector not feasible");
  for (JobIndex j = 0; j < n; ++j) {
    if (!g[j].at(chains.sigma[K][j]).is_zero()) {
      fail("final residual nonzero at grown due date");
    }
  }
  if (g != result.residual) fail("residual vector differs from replay");
  if (bound != result.lower_bound) fail("lower bound differs from replay");

  for (JobIndex j = 0; j < n; ++j) {
    for (Time s = 1; s <= T; ++s) {
      const ExtValue& f = inst.cost(j)[s];
      if (f.is_finite() && used[j][static_cast<std::size_t>(s)] > f.value()) {
        fail("dual constraint violated for job " + std::to_string(j + 1) +
             " at " + std::to_string(s));
      }
    }
  }

  for (std::size_t k = 0; k <= K; ++k) {
    const std::string at = "rho(" + std::to_string(k + 1) + "): ";
    if (!is_feasible(inst, chains.rho[k])) fail(at + "infeasible");
    if (!chains.sigma[k].dominated_by(chains.rho[k])) fail(at + "sigma > rho");
    if (k < K) {
      if (!chains.rho[k].dominated_by(chains.rho[k + 1])) {
        fail(at + "rho chain not monotone");
      }
      std::size_t diff = 0;
      for (JobIndex j = 0; j < n; ++j) {
        diff += chains.rho[k][j] != chains.rho[k + 1][j];
      }
      if (diff > 1) fail(at + "undo changed more than one coordinate");
      const auto& step = result.trace[k];
      if (!step.reverted &&
          is_feasible(inst, chains.rho[k + 1].with(step.job, step.previous_due))) {
        fail(at + "kept an increase whose undo was feasible");
      }
    }
  }
  if (chains.rho[0] != result.final_sigma) fail("final sigma mismatch");
  if (total_cost(inst, result.final_sigma) != result.primal_cost) {
    fail("primal cost mismatch");
  }
  if (!result.schedule.meets(result.final_sigma) ||
      !result.schedule.well_formed(inst)) {
    fail("schedule misses a due date or is malformed");
  }
  return rep;
}

}  // namespace lrsched
