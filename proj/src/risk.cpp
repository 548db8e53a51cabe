#include "icsp/risk.hpp"

#include <cmath>
#include <stdexcept>

#include "icsp/asymptotics.hpp"
#include "icsp/mle.hpp"
#include "icsp/numeric.hpp"
#include "icsp/simulator.hpp"
#include "outcome_stats.hpp"

namespace icsp {

double expected_all_failed_prob(const SamplingPlan& plan, const PriorSpec& prior,
                                int i) {
  if (i < 1 || i > plan.k()) throw std::out_of_range("inspection index out of range");
  const double tau = plan.epoch(i);
  const int n = plan.n;
  if (n <= 40) {
    std::vector<SignedLog> terms;
    terms.reserve(n + 1);
    for (int j = 0; j <= n; ++j) {
      const double lt = log_binomial(n, j) +
                        prior.alpha * (std::log(prior.eta) -
                                       std::log(prior.eta + j * tau));
      terms.push_back({lt, (j % 2 == 0) ? 1 : -1});
    }
    return signed_logsumexp(terms);
  }
  return gamma_expectation(
      [&](double nu) { return std::pow(-std::expm1(-nu * tau), n); },
      prior.alpha, prior.eta);
}

ExpectedCounts expected_counts(const SamplingPlan& plan, const PriorSpec& prior) {
  const int k = plan.k();
  ExpectedCounts ec;
  const double tail = std::pow(prior.eta / (prior.eta + plan.epoch(k)), prior.alpha);
  ec.failures = plan.n * (1.0 - tail);
  ec.duration = plan.epoch(k);
  ec.inspections = k;
  for (int i = 1; i < k; ++i) {
    const double pi = expected_all_failed_prob(plan, prior, i);
    ec.inspections -= pi;
    ec.duration -= (plan.epoch(i + 1) - plan.epoch(i)) * pi;
  }
  return ec;
}

namespace {

// Shared accumulation over the acceptance set: reliability verdicts depend
// only on the interval totals, Bayes verdicts additionally on the cause
// split, both available in closed form at group level.
struct AcceptanceSums {
  double predictive = 0.0;  // P(A)
  double penalty = 0.0;     // R1
};

AcceptanceSums accumulate_acceptance(const SamplingPlan& plan,
                                     const DecisionRule& rule,
                                     const PriorSpec& prior,
                                     const CostModel& costs) {
  AcceptanceSums sums;
  CompensatedSum pred, pen;
  detail::for_each_group(prior, plan, [&](const detail::GroupStats& gs) {
    if (rule.kind == DecisionRule::Kind::reliability) {
      const double rhat =
          detail::group_reliability_estimate(plan, gs.u, costs.t0);
      if (rhat > rule.r0) {
        pred.add(detail::group_predictive(gs));
        pen.add(detail::group_penalty(prior, costs, gs));
      }
      return;
    }
    detail::for_each_split(gs.dt, prior.causes(), [&](const std::vector<int>& dp) {
      if (detail::split_posterior_cost(prior, costs, gs, dp) <= costs.c_reject) {
        pred.add(detail::split_predictive(prior, gs, dp));
        pen.add(detail::split_penalty(prior, costs, gs, dp));
      }
    });
  });
  sums.predictive = pred.value();
  sums.penalty = pen.value();
  return sums;
}

void check_enumerable(const SamplingPlan& plan, const PriorSpec& prior,
                      const DecisionRule& rule) {
  // Group-level work: C(n + k, k) gamma-factor evaluations; Bayes adds a
  // C(n + J - 1, J - 1) split factor.
  double groups = 1.0;
  for (int i = 1; i <= plan.k(); ++i)
    groups *= static_cast<double>(plan.n + i) / i;
  if (rule.kind == DecisionRule::Kind::bayes) {
    double splits = 1.0;
    for (int i = 1; i <= prior.causes() - 1; ++i)
      splits *= static_cast<double>(plan.n + i) / i;
    groups *= splits;
  }
  if (groups > static_cast<double>(kDefaultEnumCap))
    throw enumeration_cap_error("acceptance-set enumeration exceeds the cap");
}

}  // namespace

double acceptance_probability(const SamplingPlan& plan, const DecisionRule& rule,
                              const PriorSpec& prior, const CostModel& costs) {
  check_enumerable(plan, prior, rule);
  return accumulate_acceptance(plan, rule, prior, costs).predictive;
}

double penalty_exact(const SamplingPlan& plan, const DecisionRule& rule,
                     const PriorSpec& prior, const CostModel& costs) {
  check_enumerable(plan, prior, rule);
  return accumulate_acceptance(plan, rule, prior, costs).penalty;
}

double penalty_mc(const SamplingPlan& plan, const DecisionRule& rule,
                  const PriorSpec& prior, const CostModel& costs, int n_draws,
                  std::mt19937_64& rng) {
  if (n_draws < 1) throw std::invalid_argument("draw count must be >= 1");
  CompensatedSum acc;
  const int k = plan.k();
  std::vector<int> u(k), d_plus(prior.causes());
  for (int i = 0; i < n_draws; ++i) {
    const FailureRates nu = sample_prior(prior, rng);
    const SimulatedTest test = simulate_test(nu, plan, rng);
    bool accept;
    if (rule.kind == DecisionRule::Kind::reliability) {
      accept = estimate_reliability(plan, test.data, costs.t0) > rule.r0;
    } else {
      for (int m = 1; m <= k; ++m) u[m - 1] = test.data.interval_total(m);
      for (int j = 1; j <= prior.causes(); ++j)
        d_plus[j - 1] = test.data.cause_total(j);
      const auto gs = detail::group_stats(prior, plan, u);
      accept = detail::split_posterior_cost(prior, costs, gs, d_plus) <=
               costs.c_reject;
    }
    if (accept) acc.add(acceptance_cost(costs, nu) - costs.c_reject);
  }
  return acc.value() / n_draws;
}

RiskReport bayes_risk(const SamplingPlan& plan, const DecisionRule& rule,
                      const PriorSpec& prior, const CostModel& costs) {
  check_enumerable(plan, prior, rule);
  const auto sums = accumulate_acceptance(plan, rule, prior, costs);
  const auto ec = expected_counts(plan, prior);
  RiskReport rep;
  rep.p_accept = sums.predictive;
  rep.penalty_r1 = sums.penalty;
  rep.e_failures = ec.failures;
  rep.e_duration = ec.duration;
  rep.e_inspections = ec.inspections;
  const double sampling = plan.n * (costs.c_sample - costs.salvage);
  const double time_cost = costs.c_time * ec.duration;
  const double inspect_cost = costs.c_inspect * ec.inspections;
  const double salvage_forfeit = costs.salvage * ec.failures;
  rep.total_risk = costs.c_reject + sampling + time_cost + inspect_cost +
                   salvage_forfeit + sums.penalty;
  rep.decomposition = {{"rejection_cost", costs.c_reject},
                       {"net_sampling_cost", sampling},
                       {"time_cost", time_cost},
                       {"inspection_cost", inspect_cost},
                       {"salvage_forfeited_on_failures", salvage_forfeit},
                       {"acceptance_penalty", sums.penalty}};
  return rep;
}

RiskReport no_sampling_risk(const PriorSpec& prior, const CostModel& costs) {
  const NoSamplingDecision dec = no_sampling_decision(prior, costs);
  RiskReport rep;
  rep.total_risk = dec.risk;
  rep.penalty_r1 = 0.0;
  rep.p_accept = dec.verdict == Verdict::accept ? 1.0 : 0.0;
  rep.e_failures = 0.0;
  rep.e_duration = 0.0;
  rep.e_inspections = 0.0;
  rep.decomposition = {
      {dec.verdict == Verdict::accept ? "expected_acceptance_cost"
                                      : "rejection_cost",
       dec.risk}};
  return rep;
}

double approx_bayes_risk(const SamplingPlan& plan, double r0,
                         const PriorSpec& prior, const CostModel& costs,
                         int n_draws, std::mt19937_64& rng) {
  if (n_draws < 1) throw std::invalid_argument("draw count must be >= 1");
  const auto ec = expected_counts(plan, prior);
  CompensatedSum acc;
  int dropped = 0;
  for (int i = 0; i < n_draws; ++i) {
    const FailureRates nu = sample_prior(prior, rng);
    try {
      const double pa = approx_accept_prob(nu, plan, costs.t0, r0);
      acc.add((acceptance_cost(costs, nu) - costs.c_reject) * pa);
    } catch (const singular_matrix_error&) {
      ++dropped;
    }
  }
  if (dropped * 100 > n_draws)
    throw std::runtime_error(
        "more than 1% of prior draws had singular information");
  return costs.c_reject + plan.n * (costs.c_sample - costs.salvage) +
         costs.c_time * ec.duration + costs.c_inspect * ec.inspections +
         costs.salvage * ec.failures + acc.value() / (n_draws - dropped);
}

}  // namespace icsp
