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
#include <string>
#include <vector>

#include "lrsched/demand.hpp"
#include "lrsched/model.hpp"

namespace lrsched {

/// Step model cost vector: job i is charged height[i] at every t >= start and
/// nothing before. height[i] = 0 means the job is outside the support.
struct ModelCosts {
  Time start = 0;
  std::vector<int> height;

  int at(JobIndex i, Time t) const { return t >= start ? height[i] : 0; }
  std::vector<JobIndex> support() const;
};

/// height_i = p_i(t*, sigma) if sigma_i < t*, else 0.
ModelCosts build_model_costs(const Instance& inst, const DueDateVector& sigma,
                             Time t_star);

struct TightPair {
  JobIndex job = 0;
  Time time = 0;
  friend bool operator==(const TightPair&, const TightPair&) = default;
};

struct AlphaResult {
  Rational alpha;
  std::vector<TightPair> tight;
};

/// alpha = min g_i(t) / ghat_i(t) over cells with ghat_i(t) > 0 and finite
/// g_i(t), restricted to 1 <= t <= T. `tight` is the argmin set.
/// Throws std::logic_error for an empty support and std::domain_error when
/// every supported cell is infinite.
AlphaResult compute_alpha(std::span<const CostFunction> g,
                          const ModelCosts& model);

/// Largest time, then smallest job. Throws on an empty set.
TightPair select_tight_pair(std::span<const TightPair> tight);

/// g <- g - alpha * ghat on t >= model.start.
void subtract_model(std::vector<CostFunction>& g, const ModelCosts& model,
                    const Rational& alpha);

/// One growing level of the local-ratio recursion.
struct DecompositionStep {
  int level = 0;  // 1-based
  Time t_star = 0;
  std::optional<Time> r_star;
  int demand = 0;
  Rational alpha;
  JobIndex job = 0;
  Time time = 0;           // s, the new due date of `job`
  Time previous_due = 0;   // sigma_job before this level
  std::size_t covering = 0;  // |A| column of the trace
  std::vector<JobIndex> model_support;
  bool reverted = false;   // outcome of the undo phase
};

struct SolveResult {
  DueDateVector initial_sigma;
  DueDateVector final_sigma;
  Schedule schedule;
  ExtValue primal_cost;     // under the original costs
  Rational lower_bound;     // sum_k alpha_k * D_k
  std::vector<DecompositionStep> trace;
  std::vector<CostFunction> residual;  // g after the last decomposition
};

/// Local-ratio due-date growing with reverse-order undo, for instances
/// without release dates. Throws std::invalid_argument on invalid input.
SolveResult lr_cs(const Instance& inst);

struct LevelBoundReport {
  bool ok = true;
  std::size_t levels = 0;
  Rational max_ratio;  // max_k lhs_k / D_k
  Rational factor;     // the bound checked against (4 or 4*kappa)
  std::vector<std::string> violations;
};

/// For each level k: sum over {i : sigma_i < t* <= rho_i} of p_i(t*, sigma)
/// <= 4 D(t*, sigma), with sigma/rho the level's input/output vectors.
LevelBoundReport check_level_bound(const Instance& inst,
                                   const SolveResult& result);

struct StructureReport {
  bool ok = true;
  std::vector<std::string> violations;
  std::string str() const;
};

/// Replays a finished solve from its trace, independently of the solver:
/// recomputes every decomposition, checks sigma/rho chains, residual
/// non-negativity, residual zero at current due dates, tightness of the
/// chosen pair, the n*T level cap, and final feasibility. Works for both
/// solvers (release-date variant when the trace carries r*).
StructureReport check_solve_structure(const Instance& inst,
                                      const SolveResult& result);

/// Level-by-level sigma^(k) (k = 1..K+1) and rho^(k) (k = 1..K+1)
/// reconstructed from a trace.
struct RecursionChains {
  std::vector<DueDateVector> sigma;
  std::vector<DueDateVector> rho;
};
RecursionChains reconstruct_chains(const SolveResult& result);

}  // namespace lrsched
