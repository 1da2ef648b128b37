#include "fhj/field.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "fhj/errors.hpp"

namespace fhj {

Field::Field(const TorusGrid& g, std::vector<double> data)
    : grid(g), samples(std::move(data)) {
  if (samples.size() != grid.size())
    throw std::invalid_argument("Field: sample count does not match grid");
}

Spectrum::Spectrum(const TorusGrid& g, std::vector<std::complex<double>> data)
    : grid(g), coeffs(std::move(data)) {
  if (coeffs.size() != grid.size())
    throw std::invalid_argument("Spectrum: coefficient count does not match grid");
}

void require_finite(const Field& f, const char* context) {
  for (double v : f.samples)
    if (!std::isfinite(v))
      throw NumericalAbort(std::string(context) +
                           ": field contains a non-finite sample");
}

double mass(const Field& f) {
  double s = 0.0;
  for (double v : f.samples) s += v;
  return s * f.grid.cell_volume();
}

}  // namespace fhj
