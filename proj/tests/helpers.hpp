#ifndef FHJ_TESTS_HELPERS_HPP
#define FHJ_TESTS_HELPERS_HPP

#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "fhj/besov.hpp"
#include "fhj/field.hpp"
#include "fhj/spectral.hpp"

namespace fhj::testing {

inline Field random_field(const TorusGrid& grid, unsigned seed,
                          double amplitude = 1.0) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> dist(-amplitude, amplitude);
  Field f(grid);
  for (auto& v : f.samples) v = dist(rng);
  return f;
}

/// Random real field with spectrum supported on modes lo <= |m| <= hi and
/// amplitudes |m|^(-decay), for corpus tests that need band-limited data.
inline Field random_band_limited(const TorusGrid& grid, unsigned seed, int lo,
                                 int hi, double decay = 1.0) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> phase(0.0, 2 * std::numbers::pi);
  Spectrum s(grid);
  const int m = grid.points_per_axis();
  if (grid.dim() == 1) {
    for (int mode = lo; mode <= hi && mode < m / 2; ++mode) {
      const double amp = std::pow(mode, -decay);
      const std::complex<double> c =
          amp * std::exp(std::complex<double>(0.0, phase(rng)));
      s.coeffs[static_cast<std::size_t>(mode)] = c;
      s.coeffs[static_cast<std::size_t>(m - mode)] = std::conj(c);
    }
  } else {
    for (int a = -m / 2 + 1; a < m / 2; ++a)
      for (int b = 0; b < m / 2; ++b) {
        if (b == 0 && a <= 0) continue;  // half-plane; mirror fills the rest
        const double mag = std::hypot(a, b);
        if (mag < lo || mag > hi) continue;
        const std::complex<double> c =
            std::pow(mag, -decay) *
            std::exp(std::complex<double>(0.0, phase(rng)));
        const int ia = a >= 0 ? a : a + m;
        const int ib = b;
        const int ja = a > 0 ? m - a : -a;
        const int jb = m - b == m ? 0 : m - b;
        s.coeffs[static_cast<std::size_t>(ia) * m + ib] = c;
        s.coeffs[static_cast<std::size_t>(ja) * m + jb] = std::conj(c);
      }
  }
  return inverse_transform(s);
}

/// O(M^2) reference DFT matching the Spectrum convention (1D).
inline std::vector<std::complex<double>> naive_dft(const Field& f) {
  const int m = f.grid.points_per_axis();
  std::vector<std::complex<double>> out(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) {
    std::complex<double> acc = 0.0;
    for (int i = 0; i < m; ++i)
      acc += f.samples[static_cast<std::size_t>(i)] *
             std::exp(std::complex<double>(
                 0.0, -2.0 * std::numbers::pi * k * i / m));
    out[static_cast<std::size_t>(k)] = acc / static_cast<double>(m);
  }
  return out;
}

inline double max_abs_diff(const Field& a, const Field& b) {
  double err = 0.0;
  for (std::size_t i = 0; i < a.samples.size(); ++i)
    err = std::max(err, std::abs(a.samples[i] - b.samples[i]));
  return err;
}

inline double max_abs(const Field& f) {
  double m = 0.0;
  for (double v : f.samples) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace fhj::testing

#endif
