#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace icsp {

// Kahan-compensated accumulator.
class CompensatedSum {
 public:
  void add(double x) {
    double y = x - comp_;
    double t = sum_ + y;
    comp_ = (t - sum_) - y;
    sum_ = t;
  }
  double value() const { return sum_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

// Signed value carried as (sign, log magnitude) to keep alternating sums
// representable far outside double range.
struct SignedLog {
  double log_abs;  // -inf encodes zero
  int sign;        // -1, 0, +1
};

SignedLog signed_log(double x);

// Sum of terms given in (sign, log magnitude) form, evaluated by shifting to
// the largest magnitude and compensating the linear-space accumulation.
// Returns a linear-space double; the caller is responsible for the result
// being representable.
double signed_logsumexp(const std::vector<SignedLog>& terms);

// log of the binomial coefficient C(n, k).
double log_binomial(std::int64_t n, std::int64_t k);

// Standard normal CDF.
double normal_cdf(double x);

// Fixed composite Gauss-Legendre rule on [a, b] (16-point panels).
double integrate(const std::function<double(double)>& f, double a, double b,
                 int panels = 48);

// Expectation E[f(x)] for x ~ gamma(shape alpha, rate eta), by quadrature
// over an interval carrying all but a negligible tail of the gamma mass.
double gamma_expectation(const std::function<double(double)>& f, double alpha,
                         double eta, int panels = 64);

// Solve the symmetric positive-definite system A x = b in place via Cholesky.
// A is stored row-major, dimension dim. Throws singular_matrix_error when a
// pivot falls below pivot_floor * trace(A).
std::vector<double> spd_solve(std::vector<double> a, std::vector<double> b,
                              int dim, double pivot_floor = 1e-12);

struct singular_matrix_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace icsp
