#include "fhj/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fhj/errors.hpp"
#include "fhj/spectral.hpp"

namespace fhj {

namespace {

// ||grad^j f||_q: j = 0 is the plain norm, j = 1 uses the pointwise gradient
// magnitude.
double weighted_norm(const Field& f, double q, int j) {
  if (j == 0) return lq_norm(f, q);
  if (j == 1) return lq_norm(gradient_magnitude(f), q);
  throw std::invalid_argument("derivative order j must be 0 or 1");
}

}  // namespace

MassLedger cstar_estimate(const Trajectory& traj) {
  const auto& times = traj.times;
  const auto& integral = traj.channel("forcing_integral");
  const auto& forcing = traj.channel("forcing_mass");
  if (times.empty()) throw std::invalid_argument("cstar_estimate: empty trajectory");

  MassLedger ledger;
  ledger.m_u0 = traj.channel("mass").front();
  ledger.times = times;
  ledger.forcing_integral = integral;
  ledger.c_of_t.reserve(times.size());
  for (double v : integral) ledger.c_of_t.push_back(ledger.m_u0 + v);

  for (std::size_t i = 1; i < ledger.c_of_t.size(); ++i) {
    const double drop = ledger.c_of_t[i - 1] - ledger.c_of_t[i];
    if (drop > 1e-12 * (1.0 + std::abs(ledger.c_of_t[i])))
      throw NumericalAbort("cstar_estimate: c(t) decreased at t = " +
                           std::to_string(times[i]) + "; solver bug?");
  }

  // Tail beyond the horizon from the fitted decay of the forcing mass.
  const double t_end = times.back();
  double tail = 0.0;
  const double scale = *std::max_element(forcing.begin(), forcing.end());
  if (scale > 0.0 && forcing.back() > 1e-14 * scale && t_end > 0.0) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (std::size_t i = 0; i < times.size(); ++i) {
      if (times[i] < 0.5 * t_end || forcing[i] <= 0.0) continue;
      const double x = std::log(times[i]), y = std::log(forcing[i]);
      sx += x; sy += y; sxx += x * x; sxy += x * y;
      ++n;
    }
    if (n >= 3 && n * sxx - sx * sx > 0.0) {
      const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
      tail = slope < -1.1 ? forcing.back() * t_end / (-slope - 1.0) : INFINITY;
    } else {
      tail = INFINITY;
    }
  }
  ledger.c_star = ledger.c_of_t.back() + tail;
  ledger.c_star_error = tail;
  return ledger;
}

DecayFit decay_fit(std::span<const double> times, std::span<const double> values,
                   double t0, double t1, double theory,
                   const std::string& channel) {
  if (times.size() != values.size())
    throw std::invalid_argument("decay_fit: series length mismatch");
  if (!(t0 > 0.0) || !(t1 >= 4.0 * t0))
    throw std::invalid_argument("decay_fit: window must satisfy t1 >= 4 t0 > 0");

  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::vector<std::pair<double, double>> pts;
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (times[i] < t0 || times[i] > t1) continue;
    if (!(values[i] > 0.0))
      throw std::invalid_argument("decay_fit: nonpositive value at t = " +
                                  std::to_string(times[i]));
    const double x = std::log(times[i]), y = std::log(values[i]);
    pts.emplace_back(x, y);
    sx += x; sy += y; sxx += x * x; sxy += x * y;
  }
  const auto n = static_cast<double>(pts.size());
  if (pts.size() < 3)
    throw std::invalid_argument("decay_fit: fewer than 3 samples in window");
  const double denom = n * sxx - sx * sx;
  if (denom <= 0.0) throw std::invalid_argument("decay_fit: degenerate window");
  const double slope = (n * sxy - sx * sy) / denom;
  const double intercept = (sy - slope * sx) / n;

  double rss = 0.0;
  for (auto [x, y] : pts) {
    const double r = y - (slope * x + intercept);
    rss += r * r;
  }
  return {channel, t0, t1, slope, theory, std::sqrt(rss / n)};
}

std::vector<std::pair<double, double>> profile_error(const Trajectory& traj,
                                                     const MassLedger& ledger,
                                                     double q, int j) {
  if (j != 0 && j != 1)
    throw std::invalid_argument("profile_error: j must be 0 or 1");
  if (!std::isfinite(ledger.c_star))
    throw std::invalid_argument("profile_error: ledger has no finite C*");
  const double dim = traj.grid.dim();
  const double exponent = dim * (1.0 - 1.0 / q) + j;

  std::vector<std::pair<double, double>> series;
  for (std::size_t i = 0; i < traj.times.size(); ++i) {
    const double t = traj.times[i];
    if (t <= 0.0) continue;
    Field profile =
        sample_kernel(traj.grid, t + 1.0, KernelSampling::periodized);
    Field diff(traj.grid);
    for (std::size_t s = 0; s < diff.samples.size(); ++s)
      diff.samples[s] =
          traj.fields[i].samples[s] - ledger.c_star * profile.samples[s];
    series.emplace_back(t, std::pow(t, exponent) * weighted_norm(diff, q, j));
  }
  return series;
}

LinearDifference linear_difference(const Trajectory& traj, const Field& u0,
                                   double q, int j, double r, double p) {
  if (!(r > 1.0) || std::isinf(r))
    throw std::invalid_argument("linear_difference: r must be in (1, infinity)");
  if (j != 0 && j != 1)
    throw std::invalid_argument("linear_difference: j must be 0 or 1");
  if (!(u0.grid == traj.grid))
    throw std::invalid_argument("linear_difference: grid mismatch");

  const double dim = traj.grid.dim();
  const double exponent = dim * (1.0 / r - 1.0 / q) + j;
  const double theory = p >= r ? -dim * (r - 1.0) / r : -dim * (p - 1.0) / r;

  Spectrum base = forward_transform(u0);
  LinearDifference out;
  for (std::size_t i = 0; i < traj.times.size(); ++i) {
    const double t = traj.times[i];
    if (t <= 0.0) continue;
    Spectrum s = base;
    semigroup_apply_inplace(s, t);
    Field lin = inverse_transform(s);
    Field diff(traj.grid);
    for (std::size_t k = 0; k < diff.samples.size(); ++k)
      diff.samples[k] = traj.fields[i].samples[k] - lin.samples[k];
    out.series.emplace_back(t, std::pow(t, exponent) * weighted_norm(diff, q, j));
  }

  // Fit over the trailing decade when the series reaches it.
  if (!out.series.empty()) {
    const double t_end = out.series.back().first;
    const double t_lo = std::max(out.series.front().first, t_end / 10.0);
    if (t_end >= 4.0 * t_lo) {
      std::vector<double> ts, vs;
      for (auto [t, v] : out.series) {
        ts.push_back(t);
        vs.push_back(v);
      }
      bool positive = true;
      for (std::size_t i = 0; i < ts.size(); ++i)
        if (ts[i] >= t_lo && ts[i] <= t_end && !(vs[i] > 0.0)) positive = false;
      if (positive)
        out.fit = decay_fit(ts, vs, t_lo, t_end, theory, "linear_difference");
    }
  }
  out.fit.theory = theory;
  return out;
}

}  // namespace fhj
