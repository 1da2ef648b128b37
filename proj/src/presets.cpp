#include "fhj/presets.hpp"

#include <cmath>
#include <stdexcept>

#include "fhj/besov.hpp"
#include "fhj/poisson.hpp"

namespace fhj {

namespace {

double bump_profile(double r, double radius) {
  const double u = r / radius;
  if (std::abs(u) >= 1.0) return 0.0;
  return std::exp(-1.0 / (1.0 - u * u));
}

Field radial_field(const TorusGrid& grid, double radius, double offset,
                   bool gauss) {
  Field f(grid);
  for (std::size_t i = 0; i < f.samples.size(); ++i) {
    auto idx = grid.axis_indices(i);
    const double x = grid.coord(idx[0]) - offset;
    const double y = grid.dim() == 2 ? grid.coord(idx[1]) : 0.0;
    const double r = std::hypot(x, y);
    f.samples[i] = gauss ? std::exp(-(r * r) / (radius * radius))
                         : bump_profile(r, radius);
  }
  return f;
}

}  // namespace

Field preset_initial_data(const std::string& name, const TorusGrid& grid,
                          std::optional<double> amplitude,
                          double support_radius) {
  if (!(support_radius > 0.0) || 4.0 * support_radius > grid.period())
    throw std::invalid_argument("preset: support radius does not fit the box");

  Field f(grid);
  if (name == "bump") {
    f = radial_field(grid, support_radius, 0.0, false);
  } else if (name == "gauss" || name == "gauss-like") {
    f = radial_field(grid, support_radius, 0.0, true);
  } else if (name == "poisson") {
    f = sample_kernel(grid, 1.0, KernelSampling::periodized);
  } else if (name == "dipole") {
    // Grid-aligned offsets so the two translates cancel in mass exactly.
    const double h = grid.spacing();
    const double offset = std::round(1.5 * support_radius / h) * h;
    Field pos = radial_field(grid, support_radius, -offset, false);
    Field neg = radial_field(grid, support_radius, offset, false);
    for (std::size_t i = 0; i < f.samples.size(); ++i)
      f.samples[i] = pos.samples[i] - neg.samples[i];
  } else {
    throw std::invalid_argument("preset: unknown initial data '" + name + "'");
  }

  if (amplitude) {
    const DyadicPartition part = build_partition(grid);
    const double norm = besov_norm(f, {1.0, INFINITY, 1.0, true}, part);
    if (norm == 0.0) throw std::invalid_argument("preset: zero norm field");
    const double scale = *amplitude / norm;
    for (auto& v : f.samples) v *= scale;
  }
  return f;
}

}  // namespace fhj
