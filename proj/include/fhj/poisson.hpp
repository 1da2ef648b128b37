#ifndef FHJ_POISSON_HPP
#define FHJ_POISSON_HPP

#include <span>
#include <vector>

#include "fhj/field.hpp"

namespace fhj {

/// How P_t is placed on the torus.
///
/// open_space evaluates the closed-form real-line kernel at the grid points
/// and keeps the algebraic tails that leave the box (truncation error ~
/// 4t/(pi L) in L1 for N = 1). periodized wraps the kernel around the torus:
/// in 1D via the exact circle-Poisson closed form, in 2D via spectral
/// synthesis of exp(-t|k|). The periodized kernel is the one the discrete
/// semigroup actually propagates, so torus-native identities hold to
/// aliasing accuracy (~exp(-t pi/h)) instead of the open-space tail budget.
enum class KernelSampling { open_space, periodized };

struct PoissonProfile {
  int dim;
  double scale;   // t > 0
  double c_n;     // normalization constant of the unit profile
};

/// c_N with 1/c_N = integral of (1+|x|^2)^(-(N+1)/2), by adaptive quadrature
/// to a 1e-12 relative target, independent of any grid. N in {1,2}.
double normalization_constant(int dim);

/// Open-space P_t(x) = c_N t (t^2+|x|^2)^(-(N+1)/2).
double kernel_value(int dim, double t, std::span<const double, 2> x);

PoissonProfile make_profile(int dim, double t);

/// P_t sampled on the grid. Errors on t <= 0.
Field sample_kernel(const TorusGrid& grid, double t,
                    KernelSampling mode = KernelSampling::open_space);

/// Gradient of P_t from the analytic derivative (open_space) or the exact
/// periodic closed form / synthesis (periodized).
std::vector<Field> sample_kernel_gradient(
    const TorusGrid& grid, double t,
    KernelSampling mode = KernelSampling::open_space);

/// max over the grid of |e^{tL} P_s - P_{s+t}|, with both kernels sampled in
/// the given mode. t = 0 returns 0 exactly.
double kernel_identity_check(const TorusGrid& grid, double s, double t,
                             KernelSampling mode = KernelSampling::open_space);

/// ||e^{tL} f||_L1 at each time, for zero-mean f. Errors when |mass(f)|
/// exceeds 1e-10 * (1 + ||f||_L1).
std::vector<double> zero_mean_decay_check(const Field& f,
                                          std::span<const double> times);

}  // namespace fhj

#endif
