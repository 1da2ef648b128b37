#ifndef FHJ_SPECTRAL_HPP
#define FHJ_SPECTRAL_HPP

#include <functional>
#include <span>
#include <vector>

#include "fhj/field.hpp"

namespace fhj {

/// Real symbol evaluated on a wavevector (size-2 span, second entry 0 in 1D).
using Symbol = std::function<double(std::span<const double, 2>)>;

/// Discrete Fourier coefficients of f (see Spectrum for the convention).
/// Errors on non-finite samples.
Spectrum forward_transform(const Field& f);

/// Synthesizes the real field from Hermitian-symmetric coefficients.
/// Throws invalid_argument if the imaginary residual exceeds 1e-10 relative
/// to the synthesis scale, which signals a broken multiplier upstream.
/// check_symmetry = false skips the test; it is for frequency-localized
/// pieces of a checked parent spectrum, where real radial multipliers cannot
/// introduce asymmetry but the piece may consist of the parent's roundoff.
Field inverse_transform(const Spectrum& s, bool check_symmetry = true);

/// F^-1[ sym(k) * F f ]. The symbol must be finite on the grid's wavenumbers.
Field apply_multiplier(const Field& f, const Symbol& sym);
Spectrum apply_multiplier(const Spectrum& s, const Symbol& sym);

/// Spectral derivative ik per axis; the unpaired Nyquist mode is zeroed to
/// keep the result real.
std::vector<Field> gradient(const Field& f);
std::vector<Spectrum> gradient_spectrum(const Spectrum& s);

/// Poisson semigroup: multiplier exp(-t|k|). Mass (the zero mode) is
/// conserved exactly; t = 0 returns the input unchanged. Errors on t < 0.
Field semigroup_apply(const Field& f, double t);
void semigroup_apply_inplace(Spectrum& s, double t);

/// (sum |f|^q h^N)^(1/q) for q < infinity, max|f| for q = infinity.
/// Errors on q < 1.
double lq_norm(const Field& f, double q);

/// Pointwise Euclidean magnitude of the gradient (|f'| in 1D).
Field gradient_magnitude(const Field& f);

/// Zero-pad a spectrum onto a grid with factor*M points per axis (trig
/// interpolation). The coarse Nyquist coefficient is split across the two
/// fine Nyquist partners to preserve realness.
Spectrum pad_spectrum(const Spectrum& s, int factor);

/// Low-pass truncation back to M points per axis; the coarse Nyquist band is
/// zeroed. Inverse of pad_spectrum on band-limited data.
Spectrum truncate_spectrum(const Spectrum& s, int points_per_axis);

/// Stable (1 - exp(-x))/x with value 1 at x = 0.
double phi1(double x);

}  // namespace fhj

#endif
