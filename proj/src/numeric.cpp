#include "icsp/numeric.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

namespace icsp {

SignedLog signed_log(double x) {
  if (x == 0.0) return {-std::numeric_limits<double>::infinity(), 0};
  return {std::log(std::fabs(x)), x > 0.0 ? 1 : -1};
}

double signed_logsumexp(const std::vector<SignedLog>& terms) {
  double m = -std::numeric_limits<double>::infinity();
  for (const auto& t : terms)
    if (t.sign != 0) m = std::max(m, t.log_abs);
  if (!std::isfinite(m)) return 0.0;
  CompensatedSum acc;
  for (const auto& t : terms) {
    if (t.sign == 0) continue;
    acc.add(t.sign * std::exp(t.log_abs - m));
  }
  return acc.value() * std::exp(m);
}

double log_binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return -std::numeric_limits<double>::infinity();
  return std::lgamma(double(n) + 1.0) - std::lgamma(double(k) + 1.0) -
         std::lgamma(double(n - k) + 1.0);
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

namespace {
// 16-point Gauss-Legendre nodes/weights on [-1, 1] (positive half; symmetric).
constexpr std::array<double, 8> kGlNodes = {
    0.0950125098376374, 0.2816035507792589, 0.4580167776572274,
    0.6178762444026438, 0.7554044083550030, 0.8656312023878318,
    0.9445750230732326, 0.9894009349916499};
constexpr std::array<double, 8> kGlWeights = {
    0.1894506104550685, 0.1826034150449236, 0.1691565193950025,
    0.1495959888165767, 0.1246289712555339, 0.0951585116824928,
    0.0622535239386479, 0.0271524594117541};
}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 int panels) {
  CompensatedSum acc;
  const double step = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    const double lo = a + p * step;
    const double mid = lo + 0.5 * step;
    const double half = 0.5 * step;
    for (std::size_t i = 0; i < kGlNodes.size(); ++i) {
      acc.add(kGlWeights[i] * half * f(mid + half * kGlNodes[i]));
      acc.add(kGlWeights[i] * half * f(mid - half * kGlNodes[i]));
    }
  }
  return acc.value();
}

double gamma_expectation(const std::function<double(double)>& f, double alpha,
                         double eta, int panels) {
  // Integrate the standardized gamma(alpha, 1) density against f(x / eta).
  // [0, hi] covers the mass up to ~1e-14 for the shapes used here.
  const double hi = alpha + 12.0 * std::sqrt(alpha) + 45.0;
  const double log_norm = -std::lgamma(alpha);
  auto integrand = [&](double x) {
    if (x <= 0.0) return 0.0;
    const double log_dens = log_norm + (alpha - 1.0) * std::log(x) - x;
    return std::exp(log_dens) * f(x / eta);
  };
  return integrate(integrand, 0.0, hi, panels);
}

std::vector<double> spd_solve(std::vector<double> a, std::vector<double> b,
                              int dim, double pivot_floor) {
  double trace = 0.0;
  for (int i = 0; i < dim; ++i) trace += a[i * dim + i];
  const double floor = pivot_floor * std::max(trace, 1.0);
  // Cholesky, lower triangle in place.
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j <= i; ++j) {
      double s = a[i * dim + j];
      for (int p = 0; p < j; ++p) s -= a[i * dim + p] * a[j * dim + p];
      if (i == j) {
        if (s <= floor)
          throw singular_matrix_error("information matrix is singular");
        a[i * dim + i] = std::sqrt(s);
      } else {
        a[i * dim + j] = s / a[j * dim + j];
      }
    }
  }
  for (int i = 0; i < dim; ++i) {
    double s = b[i];
    for (int p = 0; p < i; ++p) s -= a[i * dim + p] * b[p];
    b[i] = s / a[i * dim + i];
  }
  for (int i = dim - 1; i >= 0; --i) {
    double s = b[i];
    for (int p = i + 1; p < dim; ++p) s -= a[p * dim + i] * b[p];
    b[i] = s / a[i * dim + i];
  }
  return b;
}

}  // namespace icsp
