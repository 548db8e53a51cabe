#include "icsp/simulator.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "icsp/mle.hpp"
#include "outcome_stats.hpp"

namespace icsp {

SimulatedTest simulate_test(const FailureRates& rates, const SamplingPlan& plan,
                            std::mt19937_64& rng) {
  const int k = plan.k();
  const int J = rates.causes();
  IntervalData data = IntervalData::zeros(plan.n, k, J);
  std::exponential_distribution<double> unit_exp(1.0);
  int failed = 0;
  for (int i = 0; i < plan.n; ++i) {
    // Minimum of per-cause exponential latent lifetimes.
    double t = std::numeric_limits<double>::infinity();
    int cause = 0;
    for (int j = 1; j <= J; ++j) {
      const double x = unit_exp(rng) / rates.rates[j - 1];
      if (x < t) {
        t = x;
        cause = j;
      }
    }
    if (t > plan.epoch(k)) continue;
    int m = 1;
    while (plan.epoch(m) < t) ++m;
    ++data.at(m, cause);
    ++failed;
  }
  SimulatedTest out{std::move(data), k, plan.epoch(k)};
  if (failed == plan.n) {
    int cum = 0;
    for (int m = 1; m <= k; ++m) {
      for (int j = 1; j <= J; ++j) cum += out.data.at(m, j);
      if (cum == plan.n) {
        out.terminated_at = m;
        out.duration = plan.epoch(m);
        break;
      }
    }
  }
  return out;
}

OperatingCharacteristics empirical_oc(
    const SamplingPlan& plan, const DecisionRule& rule,
    const std::variant<PriorSpec, FailureRates>& prior_or_rates,
    const CostModel& costs, int reps, std::mt19937_64& rng) {
  if (reps < 1) throw std::invalid_argument("replication count must be >= 1");
  const PriorSpec* prior = std::get_if<PriorSpec>(&prior_or_rates);
  if (rule.kind == DecisionRule::Kind::bayes && prior == nullptr)
    throw std::invalid_argument(
        "the Bayes rule needs a prior; fixed rates only support the "
        "reliability rule");
  const int k = plan.k();
  const int J = prior ? prior->causes()
                      : std::get<FailureRates>(prior_or_rates).causes();
  double s_acc = 0.0, s_fail = 0.0, s_fail2 = 0.0, s_dur = 0.0, s_dur2 = 0.0,
         s_insp = 0.0, s_insp2 = 0.0;
  double s_rel = 0.0, s_rel2 = 0.0;
  long rel_count = 0;
  std::vector<int> u(k), d_plus(J);
  for (int i = 0; i < reps; ++i) {
    const FailureRates nu =
        prior ? sample_prior(*prior, rng)
              : std::get<FailureRates>(prior_or_rates);
    const SimulatedTest test = simulate_test(nu, plan, rng);
    bool accept;
    if (rule.kind == DecisionRule::Kind::reliability) {
      accept = estimate_reliability(plan, test.data, costs.t0) > rule.r0;
    } else {
      for (int m = 1; m <= k; ++m) u[m - 1] = test.data.interval_total(m);
      for (int j = 1; j <= J; ++j) d_plus[j - 1] = test.data.cause_total(j);
      const auto gs = detail::group_stats(*prior, plan, u);
      accept = detail::split_posterior_cost(*prior, costs, gs, d_plus) <=
               costs.c_reject;
    }
    s_acc += accept ? 1.0 : 0.0;
    const double f = test.data.total();
    const double d = test.duration;
    const double m = test.terminated_at;
    s_fail += f;
    s_fail2 += f * f;
    s_dur += d;
    s_dur2 += d * d;
    s_insp += m;
    s_insp2 += m * m;
    const RateEstimate est = fit_total_rate(plan, test.data);
    if (!est.unbounded) {
      const double r = std::exp(-est.total * costs.t0);
      s_rel += r;
      s_rel2 += r * r;
      ++rel_count;
    }
  }
  auto mean_se = [reps](double s, double s2) {
    const double mean = s / reps;
    const double var = std::max(0.0, s2 / reps - mean * mean);
    return std::pair<double, double>(mean, std::sqrt(var / reps));
  };
  OperatingCharacteristics oc;
  const double pa = s_acc / reps;
  oc.p_accept = pa;
  oc.p_accept_se = std::sqrt(std::max(0.0, pa * (1.0 - pa)) / reps);
  std::tie(oc.e_failures, oc.e_failures_se) = mean_se(s_fail, s_fail2);
  std::tie(oc.e_duration, oc.e_duration_se) = mean_se(s_dur, s_dur2);
  std::tie(oc.e_inspections, oc.e_inspections_se) = mean_se(s_insp, s_insp2);
  if (rel_count > 1) {
    const double mean = s_rel / rel_count;
    oc.sd_reliability = std::sqrt(
        std::max(0.0, (s_rel2 - rel_count * mean * mean) / (rel_count - 1)));
  } else {
    oc.sd_reliability = 0.0;
  }
  return oc;
}

}  // namespace icsp
