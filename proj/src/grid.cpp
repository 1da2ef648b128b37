#include "fhj/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fhj {

namespace {
bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }
}  // namespace

TorusGrid::TorusGrid(int dim, int points_per_axis, double period)
    : dim_(dim), m_(points_per_axis), period_(period) {
  if (dim != 1 && dim != 2)
    throw std::invalid_argument("TorusGrid: dim must be 1 or 2, got " +
                                std::to_string(dim));
  if (m_ < 16 || !is_power_of_two(m_))
    throw std::invalid_argument(
        "TorusGrid: points_per_axis must be a power of two >= 16, got " +
        std::to_string(m_));
  if (!(period > 0.0) || !std::isfinite(period))
    throw std::invalid_argument("TorusGrid: period must be positive");
  size_ = 1;
  for (int d = 0; d < dim_; ++d) size_ *= static_cast<std::size_t>(m_);
}

double TorusGrid::cell_volume() const {
  double v = 1.0;
  for (int d = 0; d < dim_; ++d) v *= spacing();
  return v;
}

double TorusGrid::volume() const {
  double v = 1.0;
  for (int d = 0; d < dim_; ++d) v *= period_;
  return v;
}

double TorusGrid::wavenumber_magnitude(std::size_t flat) const {
  auto k = wavevector(flat);
  return dim_ == 1 ? std::abs(k[0]) : std::hypot(k[0], k[1]);
}

}  // namespace fhj
