#ifndef FHJ_QUADRATURE_HPP
#define FHJ_QUADRATURE_HPP

#include <functional>

namespace fhj {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int subdivisions = 0;
};

/// Adaptive Gauss-Kronrod (G7,K15) integration of f over [a, b].
/// Bisects the interval with the worst local error until the summed
/// estimate meets abs_tol + rel_tol * |value|.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b, double rel_tol = 1e-12,
                                    double abs_tol = 1e-300,
                                    int max_subdivisions = 2000);

/// Integral over the whole real line via the substitution x = u/(1-u^2),
/// u in (-1, 1).
QuadratureResult integrate_real_line(const std::function<double(double)>& f,
                                     double rel_tol = 1e-12);

/// Integral over [0, infinity) via x = u/(1-u), u in (0, 1).
QuadratureResult integrate_half_line(const std::function<double(double)>& f,
                                     double rel_tol = 1e-12);

}  // namespace fhj

#endif
