#pragma once

#include <vector>

#include "icsp/model.hpp"

namespace icsp {

struct RateEstimate {
  double total;                  // nu-hat (infinity when unbounded)
  std::vector<double> per_cause; // nu-hat_j
  bool used_fallback = false;    // d_t = 0 convention 1/(n tau_k)
  bool unbounded = false;        // all units failed in the first interval
};

// Profile score g(nu); strictly increasing with a unique root when d_t >= 1.
double score_g(double nu, const SamplingPlan& plan, const IntervalData& data);

RateEstimate fit_total_rate(const SamplingPlan& plan, const IntervalData& data);

// Rate split nu_j = d_{+j} nu / d_t; requires d_t > 0.
std::vector<double> allocate_cause_rates(double total, const IntervalData& data);

// exp(-nu_hat * t0); 0 when the estimate is unbounded.
double estimate_reliability(const SamplingPlan& plan, const IntervalData& data,
                            double t0);

}  // namespace icsp
