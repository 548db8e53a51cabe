#include "icsp/loss.hpp"

#include <stdexcept>

namespace icsp {

namespace {
// Packed upper-triangular index: row i, column j, both 1-based, i <= j.
int tri_index(int i, int j, int dim) {
  return (i - 1) * dim - (i - 1) * (i - 2) / 2 + (j - i);
}
}  // namespace

double CostModel::quad(int i, int j) const {
  const int dim = causes();
  if (i < 1 || j < i || j > dim)
    throw std::out_of_range("quadratic cost index out of range");
  return c_quad[tri_index(i, j, dim)];
}

void CostModel::validate() const {
  const int dim = causes();
  if (dim < 1) throw std::invalid_argument("costs.c_lin: at least one cause required");
  if (static_cast<int>(c_quad.size()) != dim * (dim + 1) / 2)
    throw std::invalid_argument("costs.c_quad: expected upper-triangular J(J+1)/2 entries");
  if (c0 < 0.0) throw std::invalid_argument("costs.c0 must be >= 0");
  for (double c : c_lin)
    if (c < 0.0) throw std::invalid_argument("costs.c_lin entries must be >= 0");
  for (double c : c_quad)
    if (c < 0.0) throw std::invalid_argument("costs.c_quad entries must be >= 0");
  if (!(c_reject > 0.0)) throw std::invalid_argument("costs.c_reject must be > 0");
  if (!(c_sample > 0.0)) throw std::invalid_argument("costs.c_sample must be > 0");
  if (salvage < 0.0) throw std::invalid_argument("costs.salvage must be >= 0");
  if (!(salvage < c_sample))
    throw std::invalid_argument("costs.salvage must be below costs.c_sample");
  if (c_time < 0.0) throw std::invalid_argument("costs.c_time must be >= 0");
  if (c_inspect < 0.0) throw std::invalid_argument("costs.c_inspect must be >= 0");
  if (!(t0 > 0.0)) throw std::invalid_argument("costs.t0 must be > 0");
}

double acceptance_cost(const CostModel& costs, const FailureRates& rates) {
  const int dim = costs.causes();
  if (rates.causes() != dim)
    throw std::invalid_argument("rate vector does not match cost dimension");
  double h = costs.c0;
  for (int i = 1; i <= dim; ++i) {
    h += costs.c_lin[i - 1] * rates.rates[i - 1];
    for (int j = i; j <= dim; ++j)
      h += costs.quad(i, j) * rates.rates[i - 1] * rates.rates[j - 1];
  }
  return h;
}

}  // namespace icsp
