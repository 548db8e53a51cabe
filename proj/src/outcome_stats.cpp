#include "outcome_stats.hpp"

#include <cmath>
#include <functional>

#include "icsp/mle.hpp"
#include "icsp/numeric.hpp"

namespace icsp::detail {

namespace {

constexpr int kStableFailureLimit = 40;

GammaFactors factors_alternating(const PriorSpec& prior, double h, int dt,
                                 int s) {
  const double alpha = prior.alpha;
  const double eta = prior.eta;
  GammaFactors out{0, 0, 0};
  for (int r = 0; r <= 2; ++r) {
    std::vector<SignedLog> terms;
    terms.reserve(dt + 1);
    const double log_gr = std::lgamma(alpha + r) - std::lgamma(alpha);
    for (int i = 0; i <= dt; ++i) {
      const double c = eta + (i + s) * h;
      const double lt = log_binomial(dt, i) + alpha * (std::log(eta) - std::log(c)) +
                        log_gr - r * std::log(c);
      terms.push_back({lt, (i % 2 == 0) ? 1 : -1});
    }
    const double v = signed_logsumexp(terms);
    if (r == 0) out.a0 = v;
    else if (r == 1) out.a1 = v;
    else out.a2 = v;
  }
  return out;
}

GammaFactors factors_quadrature(const PriorSpec& prior, const SamplingPlan& plan,
                                const std::vector<int>& u) {
  const int k = plan.k();
  int dt = 0;
  for (int x : u) dt += x;
  const int survivors = plan.n - dt;
  auto survival_product = [&](double nu) {
    // log prod_m (e^{-nu tau_{m-1}} - e^{-nu tau_m})^{u_m} * e^{-nu s tau_k}
    double lp = -nu * survivors * plan.epoch(k);
    for (int m = 1; m <= k; ++m) {
      if (u[m - 1] == 0) continue;
      const double cell =
          std::exp(-nu * plan.epoch(m - 1)) - std::exp(-nu * plan.epoch(m));
      if (cell <= 0.0) return -std::numeric_limits<double>::infinity();
      lp += u[m - 1] * std::log(cell);
    }
    return lp;
  };
  GammaFactors out{0, 0, 0};
  for (int r = 0; r <= 2; ++r) {
    double v = gamma_expectation(
        [&](double nu) {
          const double lp = survival_product(nu);
          if (!std::isfinite(lp)) return 0.0;
          return std::exp(lp + r * std::log(nu));
        },
        prior.alpha, prior.eta);
    if (r == 0) out.a0 = v;
    else if (r == 1) out.a1 = v;
    else out.a2 = v;
  }
  return out;
}

}  // namespace

GammaFactors gamma_factors(const PriorSpec& prior, const SamplingPlan& plan,
                           const std::vector<int>& u) {
  int dt = 0, sw = 0;
  const int k = plan.k();
  for (int m = 1; m <= k; ++m) {
    dt += u[m - 1];
    sw += (k - m + 1) * u[m - 1];
  }
  if (plan.equal_spacing() && dt <= kStableFailureLimit) {
    const int s = plan.n * k - sw;
    return factors_alternating(prior, plan.interval_length(), dt, s);
  }
  return factors_quadrature(prior, plan, u);
}

GroupStats group_stats(const PriorSpec& prior, const SamplingPlan& plan,
                       const std::vector<int>& u) {
  GroupStats gs;
  gs.u = u;
  const int k = plan.k();
  gs.dt = 0;
  int sw = 0;
  double lfact = 0.0;
  for (int m = 1; m <= k; ++m) {
    gs.dt += u[m - 1];
    sw += (k - m + 1) * u[m - 1];
    lfact += std::lgamma(u[m - 1] + 1.0);
  }
  gs.s = plan.n * k - sw;
  gs.log_coef = std::lgamma(plan.n + 1.0) - lfact - std::lgamma(plan.n - gs.dt + 1.0);
  gs.g = gamma_factors(prior, plan, u);
  return gs;
}

void for_each_group(const PriorSpec& prior, const SamplingPlan& plan,
                    const std::function<void(const GroupStats&)>& fn) {
  const int k = plan.k();
  std::vector<int> u(k, 0);
  std::function<void(int, int)> rec = [&](int m, int rem) {
    if (m == k) {
      fn(group_stats(prior, plan, u));
      return;
    }
    for (int v = 0; v <= rem; ++v) {
      u[m] = v;
      rec(m + 1, rem - v);
    }
    u[m] = 0;
  };
  rec(0, plan.n);
}

double dm_weight(const PriorSpec& prior, const std::vector<int>& d_plus) {
  int dt = 0;
  for (int d : d_plus) dt += d;
  double lw = std::lgamma(dt + 1.0) + std::lgamma(prior.alpha0()) -
              std::lgamma(prior.alpha0() + dt);
  for (int j = 0; j < prior.causes(); ++j) {
    lw += std::lgamma(prior.dir_alphas[j] + d_plus[j]) -
          std::lgamma(prior.dir_alphas[j]) - std::lgamma(d_plus[j] + 1.0);
  }
  return std::exp(lw);
}

CostContractions cost_contractions(const PriorSpec& prior, const CostModel& costs,
                                   const std::vector<int>& d_plus, int dt) {
  const int J = prior.causes();
  const double a0d = prior.alpha0() + dt;
  double lin = 0.0, quad = 0.0;
  for (int p = 0; p < J; ++p) {
    const double ap = prior.dir_alphas[p] + d_plus[p];
    lin += costs.c_lin[p] * ap;
    for (int q = p; q < J; ++q) {
      const double aq = prior.dir_alphas[q] + d_plus[q] + (p == q ? 1.0 : 0.0);
      quad += costs.quad(p + 1, q + 1) * ap * aq;
    }
  }
  return {lin / a0d, quad / (a0d * (a0d + 1.0))};
}

CostContractions cost_contractions_marginal(const PriorSpec& prior,
                                            const CostModel& costs) {
  const int J = prior.causes();
  const double a0 = prior.alpha0();
  double lin = 0.0, quad = 0.0;
  for (int p = 0; p < J; ++p) {
    lin += costs.c_lin[p] * prior.dir_alphas[p];
    for (int q = p; q < J; ++q) {
      quad += costs.quad(p + 1, q + 1) * prior.dir_alphas[p] *
              (prior.dir_alphas[q] + (p == q ? 1.0 : 0.0));
    }
  }
  return {lin / a0, quad / (a0 * (a0 + 1.0))};
}

double group_penalty(const PriorSpec& prior, const CostModel& costs,
                     const GroupStats& gs) {
  const auto cc = cost_contractions_marginal(prior, costs);
  return std::exp(gs.log_coef) *
         ((costs.c0 - costs.c_reject) * gs.g.a0 + cc.lin * gs.g.a1 +
          cc.quad * gs.g.a2);
}

double split_predictive(const PriorSpec& prior, const GroupStats& gs,
                        const std::vector<int>& d_plus) {
  return std::exp(gs.log_coef) * dm_weight(prior, d_plus) * gs.g.a0;
}

double split_penalty(const PriorSpec& prior, const CostModel& costs,
                     const GroupStats& gs, const std::vector<int>& d_plus) {
  const auto cc = cost_contractions(prior, costs, d_plus, gs.dt);
  return std::exp(gs.log_coef) * dm_weight(prior, d_plus) *
         ((costs.c0 - costs.c_reject) * gs.g.a0 + cc.lin * gs.g.a1 +
          cc.quad * gs.g.a2);
}

double split_posterior_cost(const PriorSpec& prior, const CostModel& costs,
                            const GroupStats& gs, const std::vector<int>& d_plus) {
  const auto cc = cost_contractions(prior, costs, d_plus, gs.dt);
  return costs.c0 + (cc.lin * gs.g.a1 + cc.quad * gs.g.a2) / gs.g.a0;
}

void for_each_split(int dt, int causes,
                    const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> d(causes, 0);
  std::function<void(int, int)> rec = [&](int j, int rem) {
    if (j == causes - 1) {
      d[j] = rem;
      fn(d);
      d[j] = 0;
      return;
    }
    for (int v = 0; v <= rem; ++v) {
      d[j] = v;
      rec(j + 1, rem - v);
    }
    d[j] = 0;
  };
  rec(0, dt);
}

double group_reliability_estimate(const SamplingPlan& plan,
                                  const std::vector<int>& u, double t0) {
  // One-cause data with the given interval totals has the same profile
  // likelihood in the total rate, so the MLE machinery applies directly.
  IntervalData d(plan.n, plan.k(), 1, u);
  return estimate_reliability(plan, d, t0);
}

}  // namespace icsp::detail
