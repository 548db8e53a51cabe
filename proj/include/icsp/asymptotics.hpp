#pragma once

#include <vector>

#include "icsp/model.hpp"

namespace icsp {

// Expected (Fisher) information of the cause-specific rates, scaled by n.
struct InfoMatrix {
  std::vector<double> entries;  // J x J row-major, symmetric
  int dim;
  int n;
  double at(int u, int v) const { return entries[(u - 1) * dim + (v - 1)]; }
};

// Conditional cell fractions q_mj, q_m given at-risk at tau_{m-1}.
struct CellFractions {
  std::vector<double> q_cause;  // k x J row-major, q_mj
  std::vector<double> q_all;    // k, q_m
};

// Gradients of the cell fractions with respect to the rate vector.
struct CellFractionGradients {
  // d q_mj / d nu_l, indexed [(m-1)*J*J + (j-1)*J + (l-1)]
  std::vector<double> d_cause;
  // d q_m / d nu_j, identical across j for the exponential model; k x J
  std::vector<double> d_all;
};

CellFractions cell_fractions(const FailureRates& rates, const SamplingPlan& plan);

CellFractionGradients cell_fraction_gradients(const FailureRates& rates,
                                              const SamplingPlan& plan);

InfoMatrix fisher_information(const FailureRates& rates, const SamplingPlan& plan);

// Delta-method standard deviation of the estimated reliability exp(-nu t0).
double delta_sd(const FailureRates& rates, const SamplingPlan& plan, double t0);

// Normal-approximation acceptance probability Phi((c(nu) - R0) / S(nu)).
double approx_accept_prob(const FailureRates& rates, const SamplingPlan& plan,
                          double t0, double r0);

}  // namespace icsp
