#pragma once

#include <random>
#include <stdexcept>

#include "icsp/loss.hpp"
#include "icsp/model.hpp"
#include "icsp/prior.hpp"

namespace icsp {

struct alternating_sum_instability : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Total failures beyond which the alternating posterior sums lose too many
// digits; callers switch to the Monte Carlo variant.
inline constexpr int kAlternatingSumMaxFailures = 40;

enum class Verdict { accept, reject };

struct DecisionRule {
  enum class Kind { reliability, bayes } kind;
  double r0 = 0.0;  // threshold, reliability kind only

  static DecisionRule reliability_threshold(double r0);
  static DecisionRule bayes_posterior() { return {Kind::bayes, 0.0}; }
};

// Type-II rule: accept iff exp(-nu_hat tau_0) > R0 (strict).
Verdict reliability_rule(const SamplingPlan& plan, const IntervalData& data,
                         double t0, double r0);

// Posterior expectation phi(d) of the acceptance cost, closed form for
// equal-interval plans; throws alternating_sum_instability for d_t > 40.
double posterior_expected_cost(const SamplingPlan& plan, const IntervalData& data,
                               const PriorSpec& prior, const CostModel& costs);

// Self-normalized importance estimate of phi(d) over prior draws; supports
// unequal intervals.
double posterior_expected_cost_mc(const SamplingPlan& plan,
                                  const IntervalData& data,
                                  const PriorSpec& prior, const CostModel& costs,
                                  int n_draws, std::mt19937_64& rng);

// Type-I rule: accept iff phi(d) <= C_r.
Verdict bayes_rule(const SamplingPlan& plan, const IntervalData& data,
                   const PriorSpec& prior, const CostModel& costs);

struct NoSamplingDecision {
  Verdict verdict;
  double risk;  // min{E[h(nu)], C_r}
};

NoSamplingDecision no_sampling_decision(const PriorSpec& prior,
                                        const CostModel& costs);

}  // namespace icsp
