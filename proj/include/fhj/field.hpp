#ifndef FHJ_FIELD_HPP
#define FHJ_FIELD_HPP

#include <complex>
#include <vector>

#include "fhj/grid.hpp"

namespace fhj {

/// Real samples on a TorusGrid, row-major in axis order.
struct Field {
  TorusGrid grid;
  std::vector<double> samples;

  Field(const TorusGrid& g, double value = 0.0)
      : grid(g), samples(g.size(), value) {}
  Field(const TorusGrid& g, std::vector<double> data);
};

/// Complex Fourier coefficients on a TorusGrid, DFT layout, normalized so
/// that samples(x_i) = sum_m coeffs(m) * exp(i k_m . (x_i + L/2)). The zero
/// mode is the mean of the field; real fields have Hermitian symmetry
/// coeff(-m) = conj(coeff(m)).
struct Spectrum {
  TorusGrid grid;
  std::vector<std::complex<double>> coeffs;

  Spectrum(const TorusGrid& g) : grid(g), coeffs(g.size()) {}
  Spectrum(const TorusGrid& g, std::vector<std::complex<double>> data);
};

/// Throws NumericalAbort if any sample is NaN or infinite.
void require_finite(const Field& f, const char* context);

/// Integral of f over the box: h^N * sum of samples.
double mass(const Field& f);

}  // namespace fhj

#endif
