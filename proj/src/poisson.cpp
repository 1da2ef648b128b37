#include "fhj/poisson.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fhj/quadrature.hpp"
#include "fhj/spectral.hpp"

namespace fhj {

namespace {

constexpr double kPi = std::numbers::pi;

void check_scale(double t) {
  if (!(t > 0.0) || !std::isfinite(t))
    throw std::invalid_argument("poisson: kernel scale t must be positive");
}

// Exact L-periodization of the 1D kernel: the circle Poisson kernel
//   sum_n P_t(x + nL) = (1/L) (1 - rho^2) / (1 - 2 rho cos(2 pi x / L) + rho^2),
// rho = exp(-2 pi t / L).
double periodized_value_1d(double t, double x, double period) {
  const double rho = std::exp(-2.0 * kPi * t / period);
  const double theta = 2.0 * kPi * x / period;
  const double denom = 1.0 - 2.0 * rho * std::cos(theta) + rho * rho;
  return (1.0 - rho * rho) / (denom * period);
}

double periodized_derivative_1d(double t, double x, double period) {
  const double rho = std::exp(-2.0 * kPi * t / period);
  const double theta = 2.0 * kPi * x / period;
  const double denom = 1.0 - 2.0 * rho * std::cos(theta) + rho * rho;
  const double ddenom_dx = 2.0 * rho * std::sin(theta) * (2.0 * kPi / period);
  return -(1.0 - rho * rho) * ddenom_dx / (denom * denom * period);
}

// Band-limited periodization: coefficients exp(-t|k|)/L^N.
Spectrum periodized_spectrum(const TorusGrid& grid, double t) {
  Spectrum s(grid);
  const double inv_vol = 1.0 / grid.volume();
  for (std::size_t i = 0; i < s.coeffs.size(); ++i)
    s.coeffs[i] = inv_vol * std::exp(-t * grid.wavenumber_magnitude(i));
  return s;
}

}  // namespace

double normalization_constant(int dim) {
  if (dim == 1) {
    auto integrand = [](double x) { return 1.0 / (1.0 + x * x); };
    return 1.0 / integrate_real_line(integrand).value;
  }
  if (dim == 2) {
    // Polar coordinates: integral of (1+r^2)^(-3/2) * 2 pi r dr.
    auto integrand = [](double r) {
      return 2.0 * kPi * r * std::pow(1.0 + r * r, -1.5);
    };
    return 1.0 / integrate_half_line(integrand).value;
  }
  throw std::invalid_argument("normalization_constant: dim must be 1 or 2");
}

double kernel_value(int dim, double t, std::span<const double, 2> x) {
  check_scale(t);
  static const double c1 = normalization_constant(1);
  static const double c2 = normalization_constant(2);
  if (dim == 1) return c1 * t / (t * t + x[0] * x[0]);
  const double r2 = x[0] * x[0] + x[1] * x[1];
  return c2 * t * std::pow(t * t + r2, -1.5);
}

PoissonProfile make_profile(int dim, double t) {
  check_scale(t);
  return {dim, t, normalization_constant(dim)};
}

Field sample_kernel(const TorusGrid& grid, double t, KernelSampling mode) {
  check_scale(t);
  Field f(grid);
  if (mode == KernelSampling::open_space) {
    for (std::size_t i = 0; i < f.samples.size(); ++i) {
      auto idx = grid.axis_indices(i);
      std::array<double, 2> x = {grid.coord(idx[0]),
                                 grid.dim() == 2 ? grid.coord(idx[1]) : 0.0};
      f.samples[i] = kernel_value(grid.dim(), t, x);
    }
    return f;
  }
  if (grid.dim() == 1) {
    for (int i = 0; i < grid.points_per_axis(); ++i)
      f.samples[i] = periodized_value_1d(t, grid.coord(i), grid.period());
    return f;
  }
  return inverse_transform(periodized_spectrum(grid, t));
}

std::vector<Field> sample_kernel_gradient(const TorusGrid& grid, double t,
                                          KernelSampling mode) {
  check_scale(t);
  if (mode == KernelSampling::periodized) {
    if (grid.dim() == 1) {
      Field g(grid);
      for (int i = 0; i < grid.points_per_axis(); ++i)
        g.samples[i] = periodized_derivative_1d(t, grid.coord(i), grid.period());
      return {g};
    }
    auto spectra = gradient_spectrum(periodized_spectrum(grid, t));
    std::vector<Field> out;
    for (const auto& s : spectra) out.push_back(inverse_transform(s));
    return out;
  }
  // d/dx_j of c_N t (t^2+|x|^2)^(-(N+1)/2).
  const double cn = normalization_constant(grid.dim());
  const int dim = grid.dim();
  std::vector<Field> out(dim, Field(grid));
  for (std::size_t i = 0; i < grid.size(); ++i) {
    auto idx = grid.axis_indices(i);
    std::array<double, 2> x = {grid.coord(idx[0]),
                               dim == 2 ? grid.coord(idx[1]) : 0.0};
    const double r2 = x[0] * x[0] + x[1] * x[1];
    const double base =
        -cn * t * (dim + 1) * std::pow(t * t + r2, -(dim + 3) / 2.0);
    for (int d = 0; d < dim; ++d) out[d].samples[i] = base * x[d];
  }
  return out;
}

double kernel_identity_check(const TorusGrid& grid, double s, double t,
                             KernelSampling mode) {
  check_scale(s);
  if (t < 0.0) throw std::invalid_argument("kernel_identity_check: t >= 0");
  Field start = sample_kernel(grid, s, mode);
  Field flowed = semigroup_apply(start, t);
  if (t == 0.0) {
    // semigroup_apply(f, 0) is the identity, so the discrepancy is exactly 0.
    double err = 0.0;
    for (std::size_t i = 0; i < flowed.samples.size(); ++i)
      err = std::max(err, std::abs(flowed.samples[i] - start.samples[i]));
    return err;
  }
  Field target = sample_kernel(grid, s + t, mode);
  double err = 0.0;
  for (std::size_t i = 0; i < flowed.samples.size(); ++i)
    err = std::max(err, std::abs(flowed.samples[i] - target.samples[i]));
  return err;
}

std::vector<double> zero_mean_decay_check(const Field& f,
                                          std::span<const double> times) {
  const double m = mass(f);
  if (std::abs(m) > 1e-10 * (1.0 + lq_norm(f, 1.0)))
    throw std::invalid_argument(
        "zero_mean_decay_check: input has nonzero mass " + std::to_string(m));
  Spectrum s = forward_transform(f);
  std::vector<double> norms;
  norms.reserve(times.size());
  double prev = 0.0;
  for (double t : times) {
    if (t < prev)
      throw std::invalid_argument("zero_mean_decay_check: times must be sorted");
    Spectrum st = s;
    semigroup_apply_inplace(st, t);
    norms.push_back(lq_norm(inverse_transform(st), 1.0));
    prev = t;
  }
  return norms;
}

}  // namespace fhj
