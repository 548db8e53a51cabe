#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "icsp/risk.hpp"

namespace icsp {

struct SearchOptions {
  enum class Mode { equal_intervals, free_intervals };
  Mode mode = Mode::equal_intervals;
  double h_grid = 0.01;       // coarse interval-length step
  double refine_tol = 1e-4;   // golden-section width tolerance
  std::optional<int> n_cap;   // override of the n_0 bound
  std::optional<int> k_cap;   // override of k_0(n); required when C_I = 0
  int mc_draws = 100'000;     // draws for Monte Carlo objectives
  std::uint64_t seed = 1;
};

struct SearchBounds {
  int n0;
  double no_sampling_risk;  // min{E[h], C_r}
  double unit_margin;       // C_s - r_s
  double c_inspect, c_time;

  int k0(int n) const;
  double tau_bound(int n, int k) const;
};

SearchBounds search_bounds(const CostModel& costs, const PriorSpec& prior);

struct ThresholdChoice {
  double r0;         // reported threshold
  double r0_lo;      // highest rejected reliability estimate
  double r0_hi;      // lowest accepted reliability estimate
  double risk;
};

// Minimizes the reliability-rule risk over R0 at a fixed plan. The risk is a
// step function of R0; the optimum is located over the finite set of outcome
// reliability estimates.
ThresholdChoice optimize_threshold(const SamplingPlan& plan,
                                   const PriorSpec& prior,
                                   const CostModel& costs);

struct TraceEntry {
  int n, k;
  std::vector<double> epochs;
  double risk;        // risk of the rule being optimized
  double risk_bayes;  // Bayes-rule risk at the same plan (dominance audit)
  double r0;          // optimized threshold (reliability kind), else NaN
};

struct OptimalPlanResult {
  std::optional<SamplingPlan> plan;  // empty = no sampling
  DecisionRule rule;
  RiskReport report;
};

// Nested search of Algorithms 2 (reliability kind) and 3 (bayes kind) over
// n, k and the inspection spacing. audit_trace, when set, receives one entry
// per (n, k, h) candidate with both rules evaluated.
OptimalPlanResult optimize_plan(DecisionRule::Kind rule_kind,
                                const PriorSpec& prior, const CostModel& costs,
                                const SearchOptions& opts,
                                std::vector<TraceEntry>* audit_trace = nullptr);

// Same nested scheme with the normal-approximation risk as objective and
// (h, R0) optimized jointly under common random numbers.
OptimalPlanResult optimize_plan_approx(const PriorSpec& prior,
                                       const CostModel& costs,
                                       const SearchOptions& opts);

}  // namespace icsp
