#include "fhj/besov.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "fhj/errors.hpp"
#include "fhj/spectral.hpp"

namespace fhj {

namespace {

constexpr double kPi = std::numbers::pi;

// Radial bump generating the shell profiles: supported on (1/2, 2), C-inf,
// positive in the interior.
double shell_bump(double r) {
  if (r <= 0.5 || r >= 2.0) return 0.0;
  const double u = std::log2(r);
  const double d = 1.0 - u * u;
  return std::exp(-1.0 / d);
}

// Normalizing denominator sum_{j in Z} shell_bump(2^-j r); at most two terms
// are nonzero and the sum is positive for every r > 0.
double shell_denominator(double r) {
  const int j0 = static_cast<int>(std::floor(std::log2(r)));
  double acc = 0.0;
  for (int j = j0 - 1; j <= j0 + 1; ++j) acc += shell_bump(std::ldexp(r, -j));
  return acc;
}

double shell_profile(int j, double k_mag) {
  if (k_mag <= 0.0) return 0.0;
  const double b = shell_bump(std::ldexp(k_mag, -j));
  if (b == 0.0) return 0.0;
  return b / shell_denominator(k_mag);
}

double sigma_accumulate(std::span<const double> terms, double sigma) {
  if (std::isinf(sigma)) {
    double m = 0.0;
    for (double t : terms) m = std::max(m, t);
    return m;
  }
  double acc = 0.0;
  for (double t : terms) acc += std::pow(t, sigma);
  return std::pow(acc, 1.0 / sigma);
}

void check_spec(const BesovSpec& spec) {
  if (!(spec.q >= 1.0)) throw std::invalid_argument("BesovSpec: q must be >= 1");
  if (!(spec.sigma > 0.0))
    throw std::invalid_argument("BesovSpec: sigma must be positive");
}

long binomial(int n, int k) {
  long b = 1;
  for (int i = 0; i < k; ++i) b = b * (n - i) / (i + 1);
  return b;
}

}  // namespace

const std::vector<double>& DyadicPartition::shell(int j) const {
  if (j < j_min || j > j_max)
    throw std::invalid_argument("DyadicPartition: shell index out of range");
  return shells[static_cast<std::size_t>(j - j_min)];
}

DyadicPartition build_partition(const TorusGrid& grid) {
  const double l = grid.period();
  const double h = grid.spacing();
  const int j_min = static_cast<int>(std::floor(std::log2(2.0 * kPi / l)));
  const int j_max = static_cast<int>(std::ceil(std::log2(kPi / h))) - 1;
  if (j_max - j_min + 1 < 3)
    throw std::invalid_argument("build_partition: grid resolves fewer than 3 shells");

  DyadicPartition part{grid, j_min, j_max, {}, {}};
  part.shells.assign(static_cast<std::size_t>(part.shell_count()),
                     std::vector<double>(grid.size()));
  part.low_block.assign(grid.size(), 0.0);

  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double k = grid.wavenumber_magnitude(i);
    double high = 0.0;  // coverage by shells j >= 1
    for (int j = j_min; j <= j_max; ++j) {
      const double v = shell_profile(j, k);
      part.shells[static_cast<std::size_t>(j - j_min)][i] = v;
      if (j >= 1) high += v;
    }
    part.low_block[i] = 1.0 - high;
  }
  return part;
}

Field dyadic_block(const Field& f, int j, const DyadicPartition& part) {
  if (!(f.grid == part.grid))
    throw std::invalid_argument("dyadic_block: field grid does not match partition");
  const auto& mult = part.shell(j);
  Spectrum s = forward_transform(f);
  for (std::size_t i = 0; i < s.coeffs.size(); ++i) s.coeffs[i] *= mult[i];
  return inverse_transform(s, false);
}

std::vector<double> shell_lq_norms(const Spectrum& s, double q,
                                   const DyadicPartition& part) {
  if (!(s.grid == part.grid))
    throw std::invalid_argument("shell_lq_norms: grid mismatch");
  std::vector<double> norms(static_cast<std::size_t>(part.shell_count()));
  Spectrum block(s.grid);
  for (int j = part.j_min; j <= part.j_max; ++j) {
    const auto& mult = part.shells[static_cast<std::size_t>(j - part.j_min)];
    for (std::size_t i = 0; i < s.coeffs.size(); ++i)
      block.coeffs[i] = s.coeffs[i] * mult[i];
    norms[static_cast<std::size_t>(j - part.j_min)] =
        lq_norm(inverse_transform(block, false), q);
  }
  return norms;
}

std::vector<double> shell_lq_norms(const Field& f, double q,
                                   const DyadicPartition& part) {
  return shell_lq_norms(forward_transform(f), q, part);
}

double besov_norm(const Spectrum& s, const BesovSpec& spec,
                  const DyadicPartition& part) {
  check_spec(spec);
  auto norms = shell_lq_norms(s, spec.q, part);
  std::vector<double> terms;
  terms.reserve(norms.size());
  for (int j = spec.homogeneous ? part.j_min : std::max(1, part.j_min);
       j <= part.j_max; ++j)
    terms.push_back(std::pow(2.0, spec.s * j) *
                    norms[static_cast<std::size_t>(j - part.j_min)]);
  double result = sigma_accumulate(terms, spec.sigma);
  if (!spec.homogeneous) {
    Spectrum low(s.grid);
    for (std::size_t i = 0; i < s.coeffs.size(); ++i)
      low.coeffs[i] = s.coeffs[i] * part.low_block[i];
    result += lq_norm(inverse_transform(low, false), spec.q);
  }
  return result;
}

double besov_norm(const Field& f, const BesovSpec& spec,
                  const DyadicPartition& part) {
  return besov_norm(forward_transform(f), spec, part);
}

double besov_norm_differences(const Field& f, double s, double q, double sigma,
                              int m_diff) {
  if (m_diff < 1) throw std::invalid_argument("besov_norm_differences: M >= 1");
  if (!(s > 0.0 && s < m_diff))
    throw std::invalid_argument("besov_norm_differences: need 0 < s < M");
  if (!(q >= 1.0) || !(sigma > 0.0))
    throw std::invalid_argument("besov_norm_differences: bad (q, sigma)");
  require_finite(f, "besov_norm_differences");

  const int m = f.grid.points_per_axis();
  const double h = f.grid.spacing();
  const int rings = static_cast<int>(std::round(std::log2(m))) - 1;  // radii h..L/4*2

  std::vector<long> binom(static_cast<std::size_t>(m_diff) + 1);
  for (int r = 0; r <= m_diff; ++r)
    binom[static_cast<std::size_t>(r)] =
        ((m_diff - r) % 2 == 0 ? 1 : -1) * binomial(m_diff, r);

  Field diff(f.grid);
  const auto& in = f.samples;

  // || D_y^M f ||_q for the lattice shift (s0, s1) in cells.
  auto diff_norm = [&](int s0, int s1) {
    if (f.grid.dim() == 1) {
      for (int i = 0; i < m; ++i) {
        double acc = 0.0;
        for (int r = 0; r <= m_diff; ++r)
          acc += binom[static_cast<std::size_t>(r)] *
                 in[static_cast<std::size_t>((i + r * s0 % m + m) % m)];
        diff.samples[static_cast<std::size_t>(i)] = acc;
      }
    } else {
      for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
          double acc = 0.0;
          for (int r = 0; r <= m_diff; ++r) {
            const int ia = ((a + r * s0) % m + m) % m;
            const int ib = ((b + r * s1) % m + m) % m;
            acc += binom[static_cast<std::size_t>(r)] *
                   in[static_cast<std::size_t>(ia) * m + ib];
          }
          diff.samples[static_cast<std::size_t>(a) * m + b] = acc;
        }
    }
    return lq_norm(diff, q);
  };

  // Lattice shifts sorted by radius; (y, -y) give equal norms, keep one.
  struct Shift {
    double r2;
    int s0, s1;
  };
  std::vector<Shift> shifts;
  const int rmax = m / 2;
  if (f.grid.dim() == 1) {
    for (int s0 = 1; s0 <= rmax; ++s0)
      shifts.push_back({static_cast<double>(s0) * s0, s0, 0});
  } else {
    for (int s0 = -rmax; s0 <= rmax; ++s0)
      for (int s1 = (s0 > 0 ? 0 : 1); s1 <= rmax; ++s1) {
        const double r2 = static_cast<double>(s0) * s0 + static_cast<double>(s1) * s1;
        if (r2 > 0.0 && r2 <= static_cast<double>(rmax) * rmax)
          shifts.push_back({r2, s0, s1});
      }
  }
  std::sort(shifts.begin(), shifts.end(),
            [](const Shift& a, const Shift& b) { return a.r2 < b.r2; });

  std::vector<double> ring_sup(static_cast<std::size_t>(rings), 0.0);
  double running = 0.0;
  std::size_t pos = 0;
  for (int l = 0; l < rings; ++l) {
    const double radius_cells = std::ldexp(1.0, l);
    while (pos < shifts.size() &&
           shifts[pos].r2 <= radius_cells * radius_cells + 1e-9) {
      running = std::max(running, diff_norm(shifts[pos].s0, shifts[pos].s1));
      ++pos;
    }
    ring_sup[static_cast<std::size_t>(l)] = running;
  }

  std::vector<double> terms(static_cast<std::size_t>(rings));
  for (int l = 0; l < rings; ++l) {
    const double eta = std::ldexp(1.0, l) * h;
    terms[static_cast<std::size_t>(l)] =
        std::pow(eta, -s) * ring_sup[static_cast<std::size_t>(l)];
  }
  if (std::isinf(sigma)) return sigma_accumulate(terms, sigma);
  double acc = 0.0;
  for (double t : terms) acc += std::pow(t, sigma);
  return std::pow(acc * std::numbers::ln2, 1.0 / sigma);
}

std::optional<double> interpolation_ratio(const Field& f, double s,
                                          double alpha, double beta, double q,
                                          const DyadicPartition& part) {
  if (!(alpha > 0.0) || !(beta > 0.0))
    throw std::invalid_argument("interpolation_ratio: alpha, beta must be > 0");
  Spectrum spec = forward_transform(f);
  const double num = besov_norm(spec, {s, q, 1.0, true}, part);
  const double hi = besov_norm(spec, {s + alpha, q, INFINITY, true}, part);
  const double lo = besov_norm(spec, {s - beta, q, INFINITY, true}, part);
  const double w = beta / (alpha + beta);
  const double denom = std::pow(hi, w) * std::pow(lo, 1.0 - w);
  if (denom == 0.0) return std::nullopt;
  return num / denom;
}

std::optional<double> nonlinear_estimate_ratio(const Field& f, double p,
                                               double s, double q,
                                               const DyadicPartition& part) {
  if (!(p > 1.0)) throw std::invalid_argument("nonlinear_estimate_ratio: p > 1");
  if (!(s > 0.0 && s < std::min(2.0, p)))
    throw std::invalid_argument(
        "nonlinear_estimate_ratio: need 0 < s < min{2, p}");
  Field powered(f.grid);
  for (std::size_t i = 0; i < f.samples.size(); ++i)
    powered.samples[i] = std::pow(std::abs(f.samples[i]), p);
  const double num = besov_norm(powered, {s, q, 1.0, true}, part);
  const double sup_norm = besov_norm(f, {0.0, INFINITY, 1.0, true}, part);
  const double reg_norm = besov_norm(f, {s, q, 1.0, true}, part);
  const double denom = std::pow(sup_norm, p - 1.0) * reg_norm;
  if (denom == 0.0) return std::nullopt;
  return num / denom;
}

double pointwise_inequality_check(
    double p, std::span<const std::array<double, 4>> tuples) {
  if (!(p > 1.0)) throw std::invalid_argument("pointwise_inequality_check: p > 1");
  auto pw = [](double v, double e) { return std::pow(std::abs(v), e); };
  double worst = 0.0;
  for (const auto& t : tuples) {
    const double a = t[0], b = t[1], c = t[2], d = t[3];
    const double lhs = std::abs(pw(a, p) - pw(b, p) - (pw(c, p) - pw(d, p)));
    double rhs = (pw(c, p - 1.0) + pw(d, p - 1.0)) * std::abs(a - b - (c - d));
    if (p < 2.0) {
      rhs += (pw(a - c, p - 1.0) + pw(b - d, p - 1.0)) * std::abs(a - b);
    } else {
      rhs += (pw(a, p - 2.0) + pw(b, p - 2.0) + pw(c, p - 2.0) + pw(d, p - 2.0)) *
             (std::abs(a - c) + std::abs(b - d)) * std::abs(a - b);
    }
    if (lhs == 0.0) continue;
    worst = std::max(worst, rhs == 0.0 ? INFINITY : lhs / rhs);
  }
  return worst;
}

Field resample_scaled(const Field& u, double lambda) {
  if (!(lambda > 0.0))
    throw std::invalid_argument("resample_scaled: lambda must be positive");
  if (lambda == 1.0) return u;
  if (u.grid.dim() != 1)
    throw std::invalid_argument("resample_scaled: only 1D grids supported");

  const int m = u.grid.points_per_axis();
  Spectrum s = forward_transform(u);

  // Compression by lambda > 1 maps mode m to lambda*m; whatever sits above
  // Nyquist/lambda would fold back. Tolerate roundoff-level tails, reject
  // fields with significant energy there (relative sup above 1e-3).
  if (lambda > 1.0) {
    double max_c = 0.0, max_folded = 0.0;
    const int cutoff = static_cast<int>(std::floor((m / 2) / lambda));
    for (int i = 0; i < m; ++i) {
      const double a = std::abs(s.coeffs[static_cast<std::size_t>(i)]);
      max_c = std::max(max_c, a);
      if (std::abs(u.grid.signed_mode(i)) > cutoff)
        max_folded = std::max(max_folded, a);
    }
    if (max_folded > 1e-3 * max_c)
      throw std::invalid_argument(
          "resample_scaled: rescaling pushes spectral content past Nyquist");
  }

  // lambda^-1 u(lambda x_i) by direct trigonometric evaluation; the Nyquist
  // mode is dropped (band-limit convention for fractional sample points).
  Field out(u.grid);
  const double inv_lambda = 1.0 / lambda;
  const double l = u.grid.period();
  const double h = u.grid.spacing();
  for (int i = 0; i < m; ++i) {
    const double target = lambda * u.grid.coord(i);
    const double frac_index = (target + 0.5 * l) / h;
    const std::complex<double> w =
        std::exp(std::complex<double>(0.0, 2.0 * kPi * frac_index / m));
    std::complex<double> rot(1.0, 0.0);
    double acc = s.coeffs[0].real();
    for (int mm = 1; mm < m / 2; ++mm) {
      rot *= w;
      acc += 2.0 * (s.coeffs[static_cast<std::size_t>(mm)] * rot).real();
    }
    out.samples[static_cast<std::size_t>(i)] = inv_lambda * acc;
  }
  return out;
}

double scaling_check(const Field& u0, double lambda,
                     const DyadicPartition& part) {
  if (lambda == 1.0) return 1.0;
  const BesovSpec critical{1.0, INFINITY, 1.0, true};
  const double base = besov_norm(u0, critical, part);
  if (base == 0.0)
    throw std::invalid_argument("scaling_check: zero input norm");
  return besov_norm(resample_scaled(u0, lambda), critical, part) / base;
}

}  // namespace fhj
