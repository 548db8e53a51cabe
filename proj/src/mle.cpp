#include "icsp/mle.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace icsp {

double score_g(double nu, const SamplingPlan& plan, const IntervalData& data) {
  if (!(nu > 0.0)) throw std::invalid_argument("rate must be > 0");
  if (data.total() == 0)
    throw std::invalid_argument("score undefined for zero failures");
  const int k = plan.k();
  double g = (plan.n - data.total()) * plan.epoch(k);
  for (int m = 1; m <= k; ++m) {
    const int dm = data.interval_total(m);
    if (dm == 0) continue;
    const double delta = plan.gap(m);
    // delta e^{-nu delta} / (1 - e^{-nu delta}) = delta / (e^{nu delta} - 1)
    g += dm * (plan.epoch(m - 1) - delta / std::expm1(nu * delta));
  }
  return g;
}

namespace {

bool all_in_first_interval(const IntervalData& data) {
  for (int m = 2; m <= data.k(); ++m)
    if (data.interval_total(m) > 0) return false;
  return true;
}

RateEstimate finish(double total, const IntervalData& data, bool fallback,
                    bool unbounded) {
  RateEstimate est;
  est.total = total;
  est.used_fallback = fallback;
  est.unbounded = unbounded;
  const int J = data.causes();
  est.per_cause.assign(J, 0.0);
  const int dt = data.total();
  if (unbounded) {
    for (int j = 1; j <= J; ++j)
      est.per_cause[j - 1] = data.cause_total(j) > 0
                                 ? std::numeric_limits<double>::infinity()
                                 : 0.0;
  } else if (dt > 0) {
    est.per_cause = allocate_cause_rates(total, data);
  } else {
    for (int j = 0; j < J; ++j) est.per_cause[j] = total / J;
  }
  return est;
}

}  // namespace

RateEstimate fit_total_rate(const SamplingPlan& plan, const IntervalData& data) {
  if (data.k() != plan.k() || data.n() != plan.n)
    throw std::invalid_argument("data dimensions do not match plan");
  const int dt = data.total();
  const int k = plan.k();
  if (dt == 0)
    return finish(1.0 / (plan.n * plan.epoch(k)), data, true, false);
  if (dt == plan.n && all_in_first_interval(data))
    return finish(std::numeric_limits<double>::infinity(), data, false, true);

  if (plan.equal_spacing()) {
    const double h = plan.interval_length();
    double w = 0.0;
    for (int m = 1; m <= k; ++m) w += m * data.interval_total(m);
    const double denom = w + (plan.n - dt) * k;
    return finish(-std::log1p(-dt / denom) / h, data, false, false);
  }

  double lo = 1e-12, hi = 1.0;
  while (score_g(hi, plan, data) <= 0.0) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e18) throw std::runtime_error("rate estimate bracket expansion failed");
  }
  while (hi - lo > 1e-12 * std::max(1.0, hi)) {
    const double mid = 0.5 * (lo + hi);
    (score_g(mid, plan, data) < 0.0 ? lo : hi) = mid;
  }
  return finish(0.5 * (lo + hi), data, false, false);
}

std::vector<double> allocate_cause_rates(double total, const IntervalData& data) {
  const int dt = data.total();
  if (dt == 0)
    throw std::invalid_argument("cause allocation undefined for zero failures");
  std::vector<double> out(data.causes());
  for (int j = 1; j <= data.causes(); ++j)
    out[j - 1] = data.cause_total(j) * total / dt;
  return out;
}

double estimate_reliability(const SamplingPlan& plan, const IntervalData& data,
                            double t0) {
  if (t0 < 0.0) throw std::invalid_argument("mission time must be >= 0");
  const RateEstimate est = fit_total_rate(plan, data);
  if (est.unbounded) return 0.0;
  return std::exp(-est.total * t0);
}

}  // namespace icsp
