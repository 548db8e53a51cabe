#pragma once

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "icsp/decision.hpp"
#include "icsp/loss.hpp"
#include "icsp/model.hpp"
#include "icsp/prior.hpp"

namespace icsp {

struct RiskReport {
  double total_risk;
  double penalty_r1;
  double p_accept;
  double e_failures;
  double e_duration;
  double e_inspections;
  std::vector<std::pair<std::string, double>> decomposition;
};

// E_nu[(1 - exp(-nu tau_i))^n]: probability that all items have failed by the
// i-th inspection, averaged over the prior. Alternating binomial sum for
// n <= 40, gamma quadrature beyond.
double expected_all_failed_prob(const SamplingPlan& plan, const PriorSpec& prior,
                                int i);

struct ExpectedCounts {
  double failures;     // E[D_t]
  double duration;     // E[tau]
  double inspections;  // E[M]
};

ExpectedCounts expected_counts(const SamplingPlan& plan, const PriorSpec& prior);

double acceptance_probability(const SamplingPlan& plan, const DecisionRule& rule,
                              const PriorSpec& prior, const CostModel& costs);

// R1 = sum over accepted outcomes of int (h(nu) - C_r) P_D(d|nu) p(nu) dnu.
double penalty_exact(const SamplingPlan& plan, const DecisionRule& rule,
                     const PriorSpec& prior, const CostModel& costs);

double penalty_mc(const SamplingPlan& plan, const DecisionRule& rule,
                  const PriorSpec& prior, const CostModel& costs, int n_draws,
                  std::mt19937_64& rng);

RiskReport bayes_risk(const SamplingPlan& plan, const DecisionRule& rule,
                      const PriorSpec& prior, const CostModel& costs);

// Degenerate n = 0 plan: min{E[h(nu)], C_r}.
RiskReport no_sampling_risk(const PriorSpec& prior, const CostModel& costs);

// Large-sample risk: the exact acceptance set replaced by the normal
// approximation Phi((c(nu) - R0) / S(nu)) inside the prior expectation.
// Draws with singular information are dropped; >1% dropped throws.
double approx_bayes_risk(const SamplingPlan& plan, double r0,
                         const PriorSpec& prior, const CostModel& costs,
                         int n_draws, std::mt19937_64& rng);

}  // namespace icsp
