#include "icsp/asymptotics.hpp"

#include <cmath>
#include <stdexcept>

#include "icsp/numeric.hpp"

namespace icsp {

CellFractions cell_fractions(const FailureRates& rates, const SamplingPlan& plan) {
  const int k = plan.k();
  const int J = rates.causes();
  const double nu = rates.total;
  CellFractions cf;
  cf.q_all.resize(k);
  cf.q_cause.resize(k * J);
  for (int m = 1; m <= k; ++m) {
    const double qm = -std::expm1(-nu * plan.gap(m));
    cf.q_all[m - 1] = qm;
    for (int j = 1; j <= J; ++j)
      cf.q_cause[(m - 1) * J + (j - 1)] = rates.rates[j - 1] / nu * qm;
  }
  return cf;
}

CellFractionGradients cell_fraction_gradients(const FailureRates& rates,
                                              const SamplingPlan& plan) {
  const int k = plan.k();
  const int J = rates.causes();
  const double nu = rates.total;
  CellFractionGradients gr;
  gr.d_cause.resize(k * J * J);
  gr.d_all.resize(k * J);
  for (int m = 1; m <= k; ++m) {
    const double delta = plan.gap(m);
    const double surv = std::exp(-nu * delta);  // 1 - q_m
    const double qm = -std::expm1(-nu * delta);
    const double dqm = delta * surv;
    for (int j = 1; j <= J; ++j) {
      gr.d_all[(m - 1) * J + (j - 1)] = dqm;
      const double common = rates.rates[j - 1] * (dqm / nu - qm / (nu * nu));
      for (int l = 1; l <= J; ++l) {
        double v = common;
        if (l == j) v += qm / nu;
        gr.d_cause[(m - 1) * J * J + (j - 1) * J + (l - 1)] = v;
      }
    }
  }
  return gr;
}

InfoMatrix fisher_information(const FailureRates& rates, const SamplingPlan& plan) {
  const int k = plan.k();
  const int J = rates.causes();
  const auto cf = cell_fractions(rates, plan);
  const auto gr = cell_fraction_gradients(rates, plan);
  InfoMatrix info;
  info.dim = J;
  info.n = plan.n;
  info.entries.assign(J * J, 0.0);
  for (int m = 1; m <= k; ++m) {
    const double at_risk = plan.n * reliability(rates, plan.epoch(m - 1));
    const double qm = cf.q_all[m - 1];
    for (int u = 0; u < J; ++u) {
      for (int v = 0; v < J; ++v) {
        double acc = 0.0;
        for (int j = 0; j < J; ++j) {
          const double* g = &gr.d_cause[(m - 1) * J * J + j * J];
          acc += g[u] * g[v] / cf.q_cause[(m - 1) * J + j];
        }
        const double dqm = gr.d_all[(m - 1) * J];  // same for every cause
        acc += dqm * dqm / (1.0 - qm);
        info.entries[u * J + v] += at_risk * acc;
      }
    }
  }
  return info;
}

double delta_sd(const FailureRates& rates, const SamplingPlan& plan, double t0) {
  if (!(t0 > 0.0)) throw std::invalid_argument("mission time must be > 0");
  const int J = rates.causes();
  const InfoMatrix info = fisher_information(rates, plan);
  // c(nu) = exp(-nu t0): every component of the gradient equals -t0 e^{-nu t0}.
  const double gc = -t0 * std::exp(-rates.total * t0);
  std::vector<double> b(J, gc);
  const std::vector<double> x = spd_solve(info.entries, b, J);
  double s2 = 0.0;
  for (int j = 0; j < J; ++j) s2 += gc * x[j];
  return std::sqrt(std::max(0.0, s2));
}

double approx_accept_prob(const FailureRates& rates, const SamplingPlan& plan,
                          double t0, double r0) {
  const double c = std::exp(-rates.total * t0);
  const double s = delta_sd(rates, plan, t0);
  if (s == 0.0) return c > r0 ? 1.0 : 0.0;
  return normal_cdf((c - r0) / s);
}

}  // namespace icsp
