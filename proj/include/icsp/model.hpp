#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace icsp {

inline constexpr std::uint64_t kDefaultEnumCap = 2'000'000;

struct enumeration_cap_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Cause-specific exponential hazards; total is the sum of the per-cause rates.
struct FailureRates {
  std::vector<double> rates;
  double total;

  explicit FailureRates(std::vector<double> per_cause);
  int causes() const { return static_cast<int>(rates.size()); }
};

// Life-test design: n items inspected at strictly increasing epochs.
struct SamplingPlan {
  int n;
  std::vector<double> epochs;

  SamplingPlan(int sample_size, std::vector<double> inspection_epochs);
  static SamplingPlan equal_intervals(int n, double h, int k);

  int k() const { return static_cast<int>(epochs.size()); }
  double epoch(int m) const;  // tau_m, m in 0..k, tau_0 = 0
  double gap(int m) const { return epoch(m) - epoch(m - 1); }  // m in 1..k
  bool equal_spacing(double rel_tol = 1e-9) const;
  double interval_length() const;  // requires equal spacing
};

// Observed per-interval, per-cause failure counts.
class IntervalData {
 public:
  IntervalData(int n, int k, int causes, std::vector<int> counts_row_major);
  static IntervalData zeros(int n, int k, int causes);

  int n() const { return n_; }
  int k() const { return k_; }
  int causes() const { return j_; }
  int at(int m, int j) const { return counts_[(m - 1) * j_ + (j - 1)]; }
  int& at(int m, int j) { return counts_[(m - 1) * j_ + (j - 1)]; }
  int interval_total(int m) const;  // d_{m+}
  int cause_total(int j) const;     // d_{+j}
  int total() const;                // d_t
  const std::vector<int>& counts() const { return counts_; }

 private:
  int n_, k_, j_;
  std::vector<int> counts_;
};

// RF of the pooled lifetime: exp(-nu t).
double reliability(const FailureRates& rates, double t);

// Sub-distribution G(j, t) = (nu_j / nu)(1 - exp(-nu t)); cause is 1-based.
double sub_distribution(const FailureRates& rates, int cause, double t);

// Multinomial cell probability G(j, tau_m) - G(j, tau_{m-1}).
double interval_cell_prob(const FailureRates& rates, const SamplingPlan& plan,
                          int m, int cause);

// log P_D(d | nu) of the interval-censored outcome.
double outcome_log_pmf(const FailureRates& rates, const SamplingPlan& plan,
                       const IntervalData& data);

// Number of distinct outcomes: C(n + kJ, kJ).
std::uint64_t outcome_count(const SamplingPlan& plan, int causes);

// Visits every outcome (composition of 0..n failures into the k*J cells)
// exactly once, in a deterministic order. Throws enumeration_cap_error when
// the outcome count exceeds cap.
void for_each_outcome(const SamplingPlan& plan, int causes, std::uint64_t cap,
                      const std::function<void(const IntervalData&)>& fn);

std::vector<IntervalData> enumerate_outcomes(const SamplingPlan& plan,
                                             int causes,
                                             std::uint64_t cap = kDefaultEnumCap);

}  // namespace icsp
