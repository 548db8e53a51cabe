#pragma once

#include <random>
#include <vector>

#include "icsp/loss.hpp"
#include "icsp/model.hpp"

namespace icsp {

// Gamma-Dirichlet prior: total rate nu ~ gamma(alpha, eta), cause fractions
// nu_j / nu ~ Dirichlet(alpha_1, ..., alpha_J), independent of nu.
struct PriorSpec {
  double alpha;
  double eta;
  std::vector<double> dir_alphas;

  PriorSpec(double alpha, double eta, std::vector<double> dir_alphas);
  double alpha0() const;
  int causes() const { return static_cast<int>(dir_alphas.size()); }
};

double prior_log_density(const PriorSpec& prior, const FailureRates& rates);

FailureRates sample_prior(const PriorSpec& prior, std::mt19937_64& rng);

// Closed-form prior expectation of
//   nu^exponent_total * prod_j nu_j^linear_exps[j] * exp(-rate_shift * nu)
// via the Gamma-Dirichlet normalization integral.
double gd_expectation(const PriorSpec& prior, double exponent_total,
                      const std::vector<int>& linear_exps, double rate_shift);

// E[h(nu)] under the prior; the accept-without-test risk.
double expected_acceptance_cost(const PriorSpec& prior, const CostModel& costs);

// Marginal outcome probability P_D(d) = int P_D(d | nu) p(nu) dnu.
// Equal-interval plans use the alternating-sum closed form; unequal plans a
// deterministic quadrature over the gamma total-rate prior.
double prior_predictive(const SamplingPlan& plan, const IntervalData& data,
                        const PriorSpec& prior);

// Monte Carlo estimate of the same marginal, averaging P_D(d | nu) over
// prior draws.
double prior_predictive_mc(const SamplingPlan& plan, const IntervalData& data,
                           const PriorSpec& prior, int n_draws,
                           std::mt19937_64& rng);

}  // namespace icsp
