#pragma once

// Internal machinery shared by the prior-predictive, posterior-cost and risk
// paths. Outcomes are grouped by their interval totals u = (d_{1+},...,d_{k+});
// the cause split enters only through Dirichlet-multinomial factors that are
// available in closed form, so most quantities never enumerate full count
// matrices.

#include <functional>
#include <vector>

#include "icsp/loss.hpp"
#include "icsp/model.hpp"
#include "icsp/prior.hpp"

namespace icsp::detail {

// E_gamma[nu^r * prod_m (e^{-nu tau_{m-1}} - e^{-nu tau_m})^{u_m}
//          * e^{-nu (n - d_t) tau_k}] for r = 0, 1, 2.
// Equal-interval plans with d_t <= 40 use the alternating binomial sum;
// everything else falls back to gamma quadrature.
struct GammaFactors {
  double a0, a1, a2;
  double operator[](int r) const { return r == 0 ? a0 : (r == 1 ? a1 : a2); }
};

GammaFactors gamma_factors(const PriorSpec& prior, const SamplingPlan& plan,
                           const std::vector<int>& u);

// Per-group summary for a vector of interval totals.
struct GroupStats {
  std::vector<int> u;
  int dt;
  int s;               // nk - sum (k - m + 1) d_{m+} (equal intervals)
  double log_coef;     // log n! / (prod u_m! (n - d_t)!)
  GammaFactors g;
};

GroupStats group_stats(const PriorSpec& prior, const SamplingPlan& plan,
                       const std::vector<int>& u);

// Enumerates interval-total vectors (compositions of 0..n into k parts).
void for_each_group(const PriorSpec& prior, const SamplingPlan& plan,
                    const std::function<void(const GroupStats&)>& fn);

// Dirichlet-multinomial weight of a cause-total split d_+:
// C(d_t; d_+) * Gamma(a0) prod Gamma(a_j + d_{+j}) /
//              (Gamma(a0 + d_t) prod Gamma(a_j)).
double dm_weight(const PriorSpec& prior, const std::vector<int>& d_plus);

// Posterior-cost numerator pieces given a cause split: the linear and
// quadratic cost contractions L, Q with
//   phi(d) = C0 + (L * A1 + Q * A2) / A0.
struct CostContractions {
  double lin, quad;
};
CostContractions cost_contractions(const PriorSpec& prior, const CostModel& costs,
                                   const std::vector<int>& d_plus, int dt);
// Same contractions averaged over the Dirichlet-multinomial split law
// (valid whenever the consuming decision depends on u only).
CostContractions cost_contractions_marginal(const PriorSpec& prior,
                                            const CostModel& costs);

// Group-level prior predictive mass: exp(log_coef) * A0 summed over splits.
inline double group_predictive(const GroupStats& gs) {
  return std::exp(gs.log_coef) * gs.g.a0;
}

// Group-level penalty integral sum_splits int (h(nu) - C_r) P_D p dnu.
double group_penalty(const PriorSpec& prior, const CostModel& costs,
                     const GroupStats& gs);

// Split-level predictive and penalty (share the group's GammaFactors).
double split_predictive(const PriorSpec& prior, const GroupStats& gs,
                        const std::vector<int>& d_plus);
double split_penalty(const PriorSpec& prior, const CostModel& costs,
                     const GroupStats& gs, const std::vector<int>& d_plus);
double split_posterior_cost(const PriorSpec& prior, const CostModel& costs,
                            const GroupStats& gs, const std::vector<int>& d_plus);

// Enumerates compositions of dt into J non-negative parts.
void for_each_split(int dt, int causes,
                    const std::function<void(const std::vector<int>&)>& fn);

// Reliability-rule statistic exp(-nu_hat t0) from interval totals.
double group_reliability_estimate(const SamplingPlan& plan,
                                  const std::vector<int>& u, double t0);

}  // namespace icsp::detail
