#include "fhj/spectral.hpp"
#include <cstdio>

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "fhj/errors.hpp"

namespace fhj {

namespace {

// One forward/backward plan pair per (dim, M). Plans are created with
// FFTW_UNALIGNED so they can execute on any caller-provided buffers, and
// FFTW_ESTIMATE keeps planning deterministic. Creation is serialized; the
// new-array execute interface is thread-safe.
struct PlanPair {
  fftw_plan fwd = nullptr;
  fftw_plan bwd = nullptr;
};

PlanPair& plans_for(const TorusGrid& grid) {
  static std::mutex mtx;
  static std::map<std::pair<int, int>, PlanPair> cache;
  std::lock_guard<std::mutex> lock(mtx);
  auto key = std::make_pair(grid.dim(), grid.points_per_axis());
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  std::vector<std::complex<double>> in(grid.size()), out(grid.size());
  auto* in_p = reinterpret_cast<fftw_complex*>(in.data());
  auto* out_p = reinterpret_cast<fftw_complex*>(out.data());
  const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
  PlanPair p;
  const int m = grid.points_per_axis();
  if (grid.dim() == 1) {
    p.fwd = fftw_plan_dft_1d(m, in_p, out_p, FFTW_FORWARD, flags);
    p.bwd = fftw_plan_dft_1d(m, in_p, out_p, FFTW_BACKWARD, flags);
  } else {
    p.fwd = fftw_plan_dft_2d(m, m, in_p, out_p, FFTW_FORWARD, flags);
    p.bwd = fftw_plan_dft_2d(m, m, in_p, out_p, FFTW_BACKWARD, flags);
  }
  if (!p.fwd || !p.bwd) throw std::runtime_error("fftw planning failed");
  return cache.emplace(key, p).first->second;
}

void execute(fftw_plan plan, std::vector<std::complex<double>>& in,
             std::vector<std::complex<double>>& out) {
  fftw_execute_dft(plan, reinterpret_cast<fftw_complex*>(in.data()),
                   reinterpret_cast<fftw_complex*>(out.data()));
}

}  // namespace

Spectrum forward_transform(const Field& f) {
  require_finite(f, "forward_transform");
  auto& plans = plans_for(f.grid);
  std::vector<std::complex<double>> in(f.grid.size());
  for (std::size_t i = 0; i < in.size(); ++i) in[i] = f.samples[i];
  Spectrum s(f.grid);
  execute(plans.fwd, in, s.coeffs);
  const double scale = 1.0 / static_cast<double>(f.grid.size());
  for (auto& c : s.coeffs) c *= scale;
  return s;
}

Field inverse_transform(const Spectrum& s, bool check_symmetry) {
  auto& plans = plans_for(s.grid);
  std::vector<std::complex<double>> in(s.coeffs), out(s.grid.size());
  execute(plans.bwd, in, out);

  if (check_symmetry) {
    // The synthesis is bounded by sum |c_m|; measure the imaginary residual
    // against that scale.
    double scale = 0.0;
    for (const auto& c : s.coeffs) scale += std::abs(c);
    double max_im = 0.0;
    for (const auto& c : out) max_im = std::max(max_im, std::abs(c.imag()));
    if (max_im > 1e-10 * (1.0 + scale)) {
      char msg[160];
      std::snprintf(msg, sizeof(msg),
                    "inverse_transform: Hermitian symmetry violated (imaginary "
                    "residual %.3e, scale %.3e); upstream multiplier bug?",
                    max_im, scale);
      throw std::invalid_argument(msg);
    }
  }

  Field f(s.grid);
  for (std::size_t i = 0; i < out.size(); ++i) f.samples[i] = out[i].real();
  return f;
}

Spectrum apply_multiplier(const Spectrum& s, const Symbol& sym) {
  Spectrum r(s.grid);
  for (std::size_t i = 0; i < s.coeffs.size(); ++i) {
    auto k = s.grid.wavevector(i);
    const double v = sym(std::span<const double, 2>(k));
    if (!std::isfinite(v))
      throw std::invalid_argument(
          "apply_multiplier: symbol is non-finite at a grid wavenumber");
    r.coeffs[i] = s.coeffs[i] * v;
  }
  return r;
}

Field apply_multiplier(const Field& f, const Symbol& sym) {
  return inverse_transform(apply_multiplier(forward_transform(f), sym));
}

std::vector<Spectrum> gradient_spectrum(const Spectrum& s) {
  const int dim = s.grid.dim();
  const int m = s.grid.points_per_axis();
  std::vector<Spectrum> out(dim, Spectrum(s.grid));
  for (std::size_t i = 0; i < s.coeffs.size(); ++i) {
    auto idx = s.grid.axis_indices(i);
    for (int d = 0; d < dim; ++d) {
      // ik, with the unpaired mode m = -M/2 zeroed along the axis.
      const int mode = s.grid.signed_mode(idx[d]);
      if (mode == -m / 2) {
        out[d].coeffs[i] = 0.0;
      } else {
        const double k = s.grid.wavenumber(idx[d]);
        out[d].coeffs[i] = std::complex<double>(0.0, k) * s.coeffs[i];
      }
    }
  }
  return out;
}

std::vector<Field> gradient(const Field& f) {
  auto spectra = gradient_spectrum(forward_transform(f));
  std::vector<Field> out;
  out.reserve(spectra.size());
  for (const auto& s : spectra) out.push_back(inverse_transform(s));
  return out;
}

void semigroup_apply_inplace(Spectrum& s, double t) {
  if (t < 0.0 || !std::isfinite(t))
    throw std::invalid_argument("semigroup_apply: t must be nonnegative");
  if (t == 0.0) return;
  for (std::size_t i = 0; i < s.coeffs.size(); ++i)
    s.coeffs[i] *= std::exp(-t * s.grid.wavenumber_magnitude(i));
}

Field semigroup_apply(const Field& f, double t) {
  if (t < 0.0 || !std::isfinite(t))
    throw std::invalid_argument("semigroup_apply: t must be nonnegative");
  if (t == 0.0) return f;
  Spectrum s = forward_transform(f);
  semigroup_apply_inplace(s, t);
  return inverse_transform(s);
}

double lq_norm(const Field& f, double q) {
  if (!(q >= 1.0))
    throw std::invalid_argument("lq_norm: q must be in [1, infinity]");
  if (std::isinf(q)) {
    double m = 0.0;
    for (double v : f.samples) m = std::max(m, std::abs(v));
    return m;
  }
  double acc = 0.0;
  if (q == 1.0) {
    for (double v : f.samples) acc += std::abs(v);
  } else if (q == 2.0) {
    for (double v : f.samples) acc += v * v;
  } else {
    for (double v : f.samples) acc += std::pow(std::abs(v), q);
  }
  return std::pow(acc * f.grid.cell_volume(), 1.0 / q);
}

Field gradient_magnitude(const Field& f) {
  auto g = gradient(f);
  if (g.size() == 1) {
    for (auto& v : g[0].samples) v = std::abs(v);
    return std::move(g[0]);
  }
  Field out(f.grid);
  for (std::size_t i = 0; i < out.samples.size(); ++i)
    out.samples[i] = std::hypot(g[0].samples[i], g[1].samples[i]);
  return out;
}

Spectrum pad_spectrum(const Spectrum& s, int factor) {
  if (factor < 1) throw std::invalid_argument("pad_spectrum: factor must be >= 1");
  if (factor == 1) return s;
  const int m = s.grid.points_per_axis();
  TorusGrid fine(s.grid.dim(), m * factor, s.grid.period());
  Spectrum out(fine);

  const int mf = fine.points_per_axis();
  auto fine_index = [&](int mode) { return mode >= 0 ? mode : mode + mf; };

  if (s.grid.dim() == 1) {
    for (int i = 0; i < m; ++i) {
      const int mode = s.grid.signed_mode(i);
      if (mode == -m / 2) {
        // Split the unpaired coarse Nyquist across its fine partners.
        out.coeffs[fine_index(-m / 2)] += 0.5 * s.coeffs[i];
        out.coeffs[fine_index(m / 2)] += 0.5 * std::conj(s.coeffs[i]);
      } else {
        out.coeffs[fine_index(mode)] += s.coeffs[i];
      }
    }
  } else {
    for (std::size_t flat = 0; flat < s.coeffs.size(); ++flat) {
      auto idx = s.grid.axis_indices(flat);
      const int m0 = s.grid.signed_mode(idx[0]);
      const int m1 = s.grid.signed_mode(idx[1]);
      // Nyquist rows/columns are split along each affected axis.
      std::array<std::pair<int, double>, 2> parts0, parts1;
      int n0 = 1, n1 = 1;
      if (m0 == -m / 2) {
        parts0 = {{{-m / 2, 0.5}, {m / 2, 0.5}}};
        n0 = 2;
      } else {
        parts0[0] = {m0, 1.0};
      }
      if (m1 == -m / 2) {
        parts1 = {{{-m / 2, 0.5}, {m / 2, 0.5}}};
        n1 = 2;
      } else {
        parts1[0] = {m1, 1.0};
      }
      for (int a = 0; a < n0; ++a)
        for (int b = 0; b < n1; ++b) {
          const std::size_t j =
              static_cast<std::size_t>(fine_index(parts0[a].first)) * mf +
              fine_index(parts1[b].first);
          // Real fields: a split mode pairs with the conjugate of its mirror,
          // which coincides with using the same coefficient on both halves
          // only when the orthogonal index is mirrored too. Splitting with
          // equal weights keeps the synthesis real because the coarse
          // spectrum is Hermitian.
          out.coeffs[j] += parts0[a].second * parts1[b].second * s.coeffs[flat];
        }
    }
  }
  return out;
}

Spectrum truncate_spectrum(const Spectrum& s, int points_per_axis) {
  const int mc = points_per_axis;
  if (mc > s.grid.points_per_axis())
    throw std::invalid_argument("truncate_spectrum: target finer than source");
  if (mc == s.grid.points_per_axis()) return s;
  TorusGrid coarse(s.grid.dim(), mc, s.grid.period());
  Spectrum out(coarse);
  const int mf = s.grid.points_per_axis();
  auto src_index = [&](int mode) { return mode >= 0 ? mode : mode + mf; };

  if (s.grid.dim() == 1) {
    for (int i = 0; i < mc; ++i) {
      const int mode = coarse.signed_mode(i);
      // Strict low-pass: drop the coarse Nyquist band entirely.
      out.coeffs[i] = (mode == -mc / 2)
                          ? 0.0
                          : s.coeffs[static_cast<std::size_t>(src_index(mode))];
    }
  } else {
    for (std::size_t flat = 0; flat < out.coeffs.size(); ++flat) {
      auto idx = coarse.axis_indices(flat);
      const int m0 = coarse.signed_mode(idx[0]);
      const int m1 = coarse.signed_mode(idx[1]);
      if (m0 == -mc / 2 || m1 == -mc / 2) {
        out.coeffs[flat] = 0.0;
      } else {
        out.coeffs[flat] =
            s.coeffs[static_cast<std::size_t>(src_index(m0)) * mf + src_index(m1)];
      }
    }
  }
  return out;
}

double phi1(double x) {
  if (x == 0.0) return 1.0;
  return -std::expm1(-x) / x;
}

}  // namespace fhj
