#include "icsp/decision.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "icsp/mle.hpp"
#include "icsp/numeric.hpp"
#include "outcome_stats.hpp"

namespace icsp {

DecisionRule DecisionRule::reliability_threshold(double r0) {
  if (!(r0 > 0.0 && r0 < 1.0))
    throw std::invalid_argument("reliability threshold must lie in (0, 1)");
  return {Kind::reliability, r0};
}

Verdict reliability_rule(const SamplingPlan& plan, const IntervalData& data,
                         double t0, double r0) {
  return estimate_reliability(plan, data, t0) > r0 ? Verdict::accept
                                                   : Verdict::reject;
}

double posterior_expected_cost(const SamplingPlan& plan, const IntervalData& data,
                               const PriorSpec& prior, const CostModel& costs) {
  if (data.k() != plan.k() || data.n() != plan.n ||
      data.causes() != prior.causes() || costs.causes() != prior.causes())
    throw std::invalid_argument("data dimensions do not match plan/prior/costs");
  if (plan.equal_spacing() && data.total() > kAlternatingSumMaxFailures)
    throw alternating_sum_instability(
        "too many failures for the alternating-sum closed form; use the Monte "
        "Carlo variant");
  const int k = plan.k();
  std::vector<int> u(k);
  for (int m = 1; m <= k; ++m) u[m - 1] = data.interval_total(m);
  const auto gs = detail::group_stats(prior, plan, u);
  std::vector<int> d_plus(data.causes());
  for (int j = 1; j <= data.causes(); ++j) d_plus[j - 1] = data.cause_total(j);
  return detail::split_posterior_cost(prior, costs, gs, d_plus);
}

double posterior_expected_cost_mc(const SamplingPlan& plan,
                                  const IntervalData& data,
                                  const PriorSpec& prior, const CostModel& costs,
                                  int n_draws, std::mt19937_64& rng) {
  if (n_draws < 1) throw std::invalid_argument("draw count must be >= 1");
  std::vector<double> log_w(n_draws);
  std::vector<double> h(n_draws);
  double max_lw = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < n_draws; ++i) {
    const FailureRates nu = sample_prior(prior, rng);
    log_w[i] = outcome_log_pmf(nu, plan, data);
    h[i] = acceptance_cost(costs, nu);
    max_lw = std::max(max_lw, log_w[i]);
  }
  if (!std::isfinite(max_lw))
    throw std::runtime_error("all posterior importance weights underflowed");
  CompensatedSum num, den;
  for (int i = 0; i < n_draws; ++i) {
    const double w = std::exp(log_w[i] - max_lw);
    num.add(h[i] * w);
    den.add(w);
  }
  return num.value() / den.value();
}

Verdict bayes_rule(const SamplingPlan& plan, const IntervalData& data,
                   const PriorSpec& prior, const CostModel& costs) {
  return posterior_expected_cost(plan, data, prior, costs) <= costs.c_reject
             ? Verdict::accept
             : Verdict::reject;
}

NoSamplingDecision no_sampling_decision(const PriorSpec& prior,
                                        const CostModel& costs) {
  const double eh = expected_acceptance_cost(prior, costs);
  if (eh <= costs.c_reject) return {Verdict::accept, eh};
  return {Verdict::reject, costs.c_reject};
}

}  // namespace icsp
