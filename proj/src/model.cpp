#include "icsp/model.hpp"

#include <cmath>
#include <numeric>

#include "icsp/numeric.hpp"

namespace icsp {

FailureRates::FailureRates(std::vector<double> per_cause)
    : rates(std::move(per_cause)) {
  if (rates.empty()) throw std::invalid_argument("at least one cause required");
  total = 0.0;
  for (double r : rates) {
    if (!(r > 0.0)) throw std::invalid_argument("every failure rate must be > 0");
    total += r;
  }
}

SamplingPlan::SamplingPlan(int sample_size, std::vector<double> inspection_epochs)
    : n(sample_size), epochs(std::move(inspection_epochs)) {
  if (n < 1) throw std::invalid_argument("sample size must be >= 1");
  if (epochs.empty()) throw std::invalid_argument("at least one inspection epoch");
  double prev = 0.0;
  for (double t : epochs) {
    if (!(t > prev))
      throw std::invalid_argument("inspection epochs must be strictly increasing and positive");
    prev = t;
  }
}

SamplingPlan SamplingPlan::equal_intervals(int n, double h, int k) {
  if (!(h > 0.0)) throw std::invalid_argument("interval length must be > 0");
  std::vector<double> epochs(k);
  for (int m = 1; m <= k; ++m) epochs[m - 1] = m * h;
  return SamplingPlan(n, std::move(epochs));
}

double SamplingPlan::epoch(int m) const {
  if (m < 0 || m > k()) throw std::out_of_range("inspection index out of range");
  return m == 0 ? 0.0 : epochs[m - 1];
}

bool SamplingPlan::equal_spacing(double rel_tol) const {
  const double h = epochs[0];
  for (int m = 1; m <= k(); ++m)
    if (std::fabs(gap(m) - h) > rel_tol * h) return false;
  return true;
}

double SamplingPlan::interval_length() const {
  if (!equal_spacing())
    throw std::logic_error("plan does not have equal inspection intervals");
  return epochs[0];
}

IntervalData::IntervalData(int n, int k, int causes, std::vector<int> counts)
    : n_(n), k_(k), j_(causes), counts_(std::move(counts)) {
  if (static_cast<int>(counts_.size()) != k_ * j_)
    throw std::invalid_argument("count matrix dimension mismatch");
  int dt = 0;
  for (int c : counts_) {
    if (c < 0) throw std::invalid_argument("negative failure count");
    dt += c;
  }
  if (dt > n_) throw std::invalid_argument("total failures exceed sample size");
}

IntervalData IntervalData::zeros(int n, int k, int causes) {
  return IntervalData(n, k, causes, std::vector<int>(k * causes, 0));
}

int IntervalData::interval_total(int m) const {
  int s = 0;
  for (int j = 1; j <= j_; ++j) s += at(m, j);
  return s;
}

int IntervalData::cause_total(int j) const {
  int s = 0;
  for (int m = 1; m <= k_; ++m) s += at(m, j);
  return s;
}

int IntervalData::total() const {
  return std::accumulate(counts_.begin(), counts_.end(), 0);
}

double reliability(const FailureRates& rates, double t) {
  if (t < 0.0) throw std::invalid_argument("time must be non-negative");
  return std::exp(-rates.total * t);
}

double sub_distribution(const FailureRates& rates, int cause, double t) {
  if (cause < 1 || cause > rates.causes())
    throw std::out_of_range("cause index out of range");
  if (t < 0.0) throw std::invalid_argument("time must be non-negative");
  return rates.rates[cause - 1] / rates.total * (1.0 - std::exp(-rates.total * t));
}

double interval_cell_prob(const FailureRates& rates, const SamplingPlan& plan,
                          int m, int cause) {
  if (m < 1 || m > plan.k()) throw std::out_of_range("interval index out of range");
  if (cause < 1 || cause > rates.causes())
    throw std::out_of_range("cause index out of range");
  const double nu = rates.total;
  return rates.rates[cause - 1] / nu *
         (std::exp(-nu * plan.epoch(m - 1)) - std::exp(-nu * plan.epoch(m)));
}

double outcome_log_pmf(const FailureRates& rates, const SamplingPlan& plan,
                       const IntervalData& data) {
  if (data.k() != plan.k() || data.n() != plan.n ||
      data.causes() != rates.causes())
    throw std::invalid_argument("data dimensions do not match plan/rates");
  const int k = plan.k();
  const int J = rates.causes();
  const int dt = data.total();
  double lp = std::lgamma(plan.n + 1.0) - std::lgamma(plan.n - dt + 1.0);
  for (int m = 1; m <= k; ++m) {
    for (int j = 1; j <= J; ++j) {
      const int d = data.at(m, j);
      if (d == 0) continue;
      lp += d * std::log(interval_cell_prob(rates, plan, m, j)) -
            std::lgamma(d + 1.0);
    }
  }
  lp += -(plan.n - dt) * rates.total * plan.epoch(k);
  return lp;
}

std::uint64_t outcome_count(const SamplingPlan& plan, int causes) {
  const int cells = plan.k() * causes;
  // C(n + cells, cells) with overflow saturation.
  long double v = 1.0L;
  for (int i = 1; i <= cells; ++i) v *= (plan.n + i) / static_cast<long double>(i);
  if (v > 1e18L) return UINT64_MAX;
  return static_cast<std::uint64_t>(v + 0.5L);
}

void for_each_outcome(const SamplingPlan& plan, int causes, std::uint64_t cap,
                      const std::function<void(const IntervalData&)>& fn) {
  if (outcome_count(plan, causes) > cap)
    throw enumeration_cap_error("outcome space exceeds enumeration cap");
  const int cells = plan.k() * causes;
  std::vector<int> counts(cells, 0);
  // Depth-first over cells; rem failures left to place.
  std::function<void(int, int)> rec = [&](int cell, int rem) {
    if (cell == cells) {
      fn(IntervalData(plan.n, plan.k(), causes, counts));
      return;
    }
    for (int v = 0; v <= rem; ++v) {
      counts[cell] = v;
      rec(cell + 1, rem - v);
    }
    counts[cell] = 0;
  };
  rec(0, plan.n);
}

std::vector<IntervalData> enumerate_outcomes(const SamplingPlan& plan,
                                             int causes, std::uint64_t cap) {
  std::vector<IntervalData> out;
  for_each_outcome(plan, causes, cap,
                   [&](const IntervalData& d) { out.push_back(d); });
  return out;
}

}  // namespace icsp
