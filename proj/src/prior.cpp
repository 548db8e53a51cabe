#include "icsp/prior.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "icsp/numeric.hpp"
#include "outcome_stats.hpp"

namespace icsp {

PriorSpec::PriorSpec(double alpha_, double eta_, std::vector<double> dir)
    : alpha(alpha_), eta(eta_), dir_alphas(std::move(dir)) {
  if (!(alpha > 0.0)) throw std::invalid_argument("prior.alpha must be > 0");
  if (!(eta > 0.0)) throw std::invalid_argument("prior.eta must be > 0");
  if (dir_alphas.empty())
    throw std::invalid_argument("prior.dir_alphas: at least one cause required");
  for (double a : dir_alphas)
    if (!(a > 0.0))
      throw std::invalid_argument("prior.dir_alphas entries must be > 0");
}

double PriorSpec::alpha0() const {
  return std::accumulate(dir_alphas.begin(), dir_alphas.end(), 0.0);
}

double prior_log_density(const PriorSpec& prior, const FailureRates& rates) {
  const int J = prior.causes();
  if (rates.causes() != J)
    throw std::invalid_argument("rate vector does not match prior dimension");
  for (double r : rates.rates)
    if (!(r > 0.0)) throw std::invalid_argument("rates must be > 0");
  const double nu = rates.total;
  // gamma(alpha, eta) density of nu times Dirichlet density of the fractions,
  // with the |d fractions / d rates| = nu^{-(J-1)} change of variables.
  double ld = prior.alpha * std::log(prior.eta) - std::lgamma(prior.alpha) +
              (prior.alpha - 1.0) * std::log(nu) - prior.eta * nu;
  ld += std::lgamma(prior.alpha0());
  for (int j = 0; j < J; ++j) {
    ld -= std::lgamma(prior.dir_alphas[j]);
    ld += (prior.dir_alphas[j] - 1.0) * std::log(rates.rates[j] / nu);
  }
  ld -= (J - 1) * std::log(nu);
  return ld;
}

FailureRates sample_prior(const PriorSpec& prior, std::mt19937_64& rng) {
  std::gamma_distribution<double> total_dist(prior.alpha, 1.0 / prior.eta);
  const double nu = total_dist(rng);
  const int J = prior.causes();
  std::vector<double> g(J);
  double gsum = 0.0;
  for (int j = 0; j < J; ++j) {
    std::gamma_distribution<double> d(prior.dir_alphas[j], 1.0);
    g[j] = d(rng);
    gsum += g[j];
  }
  std::vector<double> out(J);
  for (int j = 0; j < J; ++j) out[j] = nu * g[j] / gsum;
  return FailureRates(std::move(out));
}

double gd_expectation(const PriorSpec& prior, double exponent_total,
                      const std::vector<int>& linear_exps, double rate_shift) {
  const int J = prior.causes();
  if (static_cast<int>(linear_exps.size()) != J)
    throw std::invalid_argument("linear exponent vector does not match prior dimension");
  if (rate_shift < 0.0) throw std::invalid_argument("rate shift must be >= 0");
  int esum = 0;
  for (int e : linear_exps) {
    if (e < 0) throw std::invalid_argument("linear exponents must be >= 0");
    esum += e;
  }
  const double a0 = prior.alpha0();
  const double ap = prior.alpha + exponent_total + esum;
  if (!(ap > 0.0)) throw std::invalid_argument("shifted gamma shape must be > 0");
  double lv = std::lgamma(ap) - std::lgamma(prior.alpha) +
              prior.alpha * std::log(prior.eta) -
              ap * std::log(prior.eta + rate_shift) + std::lgamma(a0) -
              std::lgamma(a0 + esum);
  for (int j = 0; j < J; ++j)
    lv += std::lgamma(prior.dir_alphas[j] + linear_exps[j]) -
          std::lgamma(prior.dir_alphas[j]);
  return std::exp(lv);
}

double expected_acceptance_cost(const PriorSpec& prior, const CostModel& costs) {
  const int J = prior.causes();
  if (costs.causes() != J)
    throw std::invalid_argument("cost model does not match prior dimension");
  double v = costs.c0;
  std::vector<int> exps(J, 0);
  for (int p = 1; p <= J; ++p) {
    exps[p - 1] = 1;
    v += costs.c_lin[p - 1] * gd_expectation(prior, 0.0, exps, 0.0);
    for (int q = p; q <= J; ++q) {
      exps[q - 1] += 1;
      v += costs.quad(p, q) * gd_expectation(prior, 0.0, exps, 0.0);
      exps[q - 1] -= 1;
    }
    exps[p - 1] = 0;
  }
  return v;
}

double prior_predictive(const SamplingPlan& plan, const IntervalData& data,
                        const PriorSpec& prior) {
  const int k = plan.k();
  const int J = prior.causes();
  if (data.k() != k || data.causes() != J || data.n() != plan.n)
    throw std::invalid_argument("data dimensions do not match plan/prior");
  std::vector<int> u(k);
  for (int m = 1; m <= k; ++m) u[m - 1] = data.interval_total(m);
  const auto g = detail::gamma_factors(prior, plan, u);
  const int dt = data.total();
  // Multinomial coefficient of the full count matrix plus the Dirichlet
  // moment of the cause totals.
  double lc = std::lgamma(plan.n + 1.0) - std::lgamma(plan.n - dt + 1.0);
  for (const int c : data.counts()) lc -= std::lgamma(c + 1.0);
  double ldir = std::lgamma(prior.alpha0()) - std::lgamma(prior.alpha0() + dt);
  for (int j = 1; j <= J; ++j)
    ldir += std::lgamma(prior.dir_alphas[j - 1] + data.cause_total(j)) -
            std::lgamma(prior.dir_alphas[j - 1]);
  return std::exp(lc + ldir) * g.a0;
}

double prior_predictive_mc(const SamplingPlan& plan, const IntervalData& data,
                           const PriorSpec& prior, int n_draws,
                           std::mt19937_64& rng) {
  if (n_draws < 1) throw std::invalid_argument("draw count must be >= 1");
  CompensatedSum acc;
  for (int i = 0; i < n_draws; ++i) {
    const FailureRates nu = sample_prior(prior, rng);
    acc.add(std::exp(outcome_log_pmf(nu, plan, data)));
  }
  return acc.value() / n_draws;
}

}  // namespace icsp
