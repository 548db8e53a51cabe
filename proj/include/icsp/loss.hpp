#pragma once

#include <vector>

#include "icsp/model.hpp"

namespace icsp {

// Quadratic acceptance-cost coefficients plus the plan-level cost rates.
// c_quad is upper-triangular (entries with i <= j), row-major J x J.
struct CostModel {
  double c0 = 0.0;
  std::vector<double> c_lin;   // C_j, j = 1..J
  std::vector<double> c_quad;  // C_ij, i <= j, row-major
  double c_reject;             // C_r
  double c_sample;             // C_s
  double salvage = 0.0;        // r_s, < C_s
  double c_time = 0.0;         // C_tau
  double c_inspect = 0.0;      // C_I
  double t0;                   // mission time tau_0

  int causes() const { return static_cast<int>(c_lin.size()); }
  double quad(int i, int j) const;  // 1-based, i <= j
  void validate() const;
};

// h(nu) = C_0 + sum C_j nu_j + sum_{i<=j} C_ij nu_i nu_j.
double acceptance_cost(const CostModel& costs, const FailureRates& rates);

}  // namespace icsp
