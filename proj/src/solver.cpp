#include "fhj/solver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fhj/errors.hpp"
#include "fhj/spectral.hpp"

namespace fhj {

namespace {

struct ForcingResult {
  Spectrum spectrum;
  double mass;
  double grad_linf;
};

// |grad u|^p from the spectrum: differentiate, zero-pad to the oversampled
// grid, take the pointwise power there, transform back and truncate.
ForcingResult forcing_from_spectrum(const Spectrum& u_hat, double p,
                                    int oversample) {
  auto grads = gradient_spectrum(u_hat);
  const int m = u_hat.grid.points_per_axis();

  std::vector<Field> fine;
  fine.reserve(grads.size());
  for (const auto& g : grads)
    fine.push_back(inverse_transform(pad_spectrum(g, oversample)));

  Field power(fine[0].grid);
  double grad_sup2 = 0.0;
  const double half_p = 0.5 * p;
  for (std::size_t i = 0; i < power.samples.size(); ++i) {
    double sq = fine[0].samples[i] * fine[0].samples[i];
    if (fine.size() == 2) sq += fine[1].samples[i] * fine[1].samples[i];
    grad_sup2 = std::max(grad_sup2, sq);
    power.samples[i] = std::pow(sq, half_p);
  }
  if (!std::isfinite(grad_sup2) || !std::isfinite(power.samples[0]))
    throw NumericalAbort("nonlinearity: non-finite value in |grad u|^p");

  Spectrum fine_hat = forward_transform(power);
  ForcingResult r{truncate_spectrum(fine_hat, m), 0.0, std::sqrt(grad_sup2)};
  r.mass = r.spectrum.coeffs[0].real() * u_hat.grid.volume();
  if (!std::isfinite(r.mass))
    throw NumericalAbort("nonlinearity: non-finite forcing mass");
  return r;
}

std::vector<int> stored_step_indices(int n_steps, double dt, int dense,
                                     double growth) {
  std::vector<int> idx{0};
  double next_target = 0.0;
  for (int n = 1; n <= n_steps; ++n) {
    const double t = n * dt;
    bool store = static_cast<int>(idx.size()) < dense ||
                 t >= next_target * (1.0 - 1e-12) || n == n_steps;
    if (store) {
      idx.push_back(n);
      next_target = std::max(t * growth, t + dt);
    }
  }
  return idx;
}

// Diagnostic channels for one snapshot. grad_linf and forcing_mass may be
// supplied by the caller when the step loop already has them.
void append_channels(Trajectory& traj, const Spectrum& u_hat, const Field& u,
                     const DyadicPartition& part, double grad_linf,
                     double forcing_mass, double forcing_integral) {
  traj.channels["l1"].push_back(lq_norm(u, 1.0));
  traj.channels["l2"].push_back(lq_norm(u, 2.0));
  traj.channels["linf"].push_back(lq_norm(u, INFINITY));
  traj.channels["grad_linf"].push_back(grad_linf);
  traj.channels["besov_1_inf_1"].push_back(
      besov_norm(u_hat, {1.0, INFINITY, 1.0, true}, part));
  traj.channels["mass"].push_back(u_hat.coeffs[0].real() * u.grid.volume());
  traj.channels["forcing_mass"].push_back(forcing_mass);
  traj.channels["forcing_integral"].push_back(forcing_integral);
}

double grad_linf_of(const Spectrum& u_hat) {
  return lq_norm(gradient_magnitude(inverse_transform(u_hat)), INFINITY);
}

int step_count(const SolverConfig& cfg) {
  return static_cast<int>(std::ceil(cfg.horizon / cfg.dt - 1e-9));
}

// Fitted power-law extrapolation of the integrand beyond the horizon.
double integral_tail_bound(const std::vector<double>& times,
                           const std::vector<double>& values) {
  const double t_end = times.back();
  const double g_end = values.back();
  if (g_end <= 0.0) return 0.0;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (times[i] < 0.25 * t_end || times[i] <= 0.0 || values[i] <= 0.0) continue;
    const double x = std::log(times[i]), y = std::log(values[i]);
    sx += x; sy += y; sxx += x * x; sxy += x * y;
    ++n;
  }
  if (n < 4) return INFINITY;
  const double denom = n * sxx - sx * sx;
  if (denom <= 0.0) return INFINITY;
  const double slope = (n * sxy - sx * sy) / denom;
  if (slope > -1.1) return INFINITY;  // tail not integrable at this rate
  return g_end * t_end / (-slope - 1.0);
}

}  // namespace

void SolverConfig::validate() const {
  if (!(p > 1.0) || !std::isfinite(p))
    throw std::invalid_argument("SolverConfig: p must be > 1");
  if (!(horizon > 0.0)) throw std::invalid_argument("SolverConfig: T must be > 0");
  if (!(dt > 0.0) || dt > horizon)
    throw std::invalid_argument("SolverConfig: need 0 < dt <= T");
  if (oversample != 2 && oversample != 4)
    throw std::invalid_argument("SolverConfig: oversample must be 2 or 4");
  if (dense_snapshots < 2 || snapshot_growth <= 1.0)
    throw std::invalid_argument("SolverConfig: bad snapshot policy");
}

const std::vector<double>& Trajectory::channel(const std::string& name) const {
  auto it = channels.find(name);
  if (it == channels.end())
    throw std::invalid_argument("Trajectory: no channel named " + name);
  return it->second;
}

XYNormSpec XYNormSpec::defaults(double p, double q, double r) {
  const double lambda = (p - 1.0) / p;
  const double eps = 0.5 * std::min(1.0, p - 1.0);
  return {lambda, q, r, lambda, eps};
}

void XYNormSpec::validate(double p) const {
  if (!(lambda > 0.0 && lambda < 1.0))
    throw std::invalid_argument("XYNormSpec: lambda must be in (0,1)");
  if (!(epsilon > 0.0 && epsilon < std::min(1.0, p - 1.0)))
    throw std::invalid_argument("XYNormSpec: epsilon must be in (0, min{1, p-1})");
  if (!(r >= 1.0) || !(q >= r))
    throw std::invalid_argument("XYNormSpec: need 1 <= r <= q");
}

Field nonlinearity(const Field& u, double p, int oversample) {
  if (!(p > 1.0)) throw std::invalid_argument("nonlinearity: p must be > 1");
  if (oversample != 1 && oversample != 2 && oversample != 4)
    throw std::invalid_argument("nonlinearity: oversample must be 1, 2 or 4");
  require_finite(u, "nonlinearity");
  return inverse_transform(
      forcing_from_spectrum(forward_transform(u), p, oversample).spectrum);
}

Trajectory evolve(const Field& u0, const SolverConfig& cfg) {
  cfg.validate();
  if (!(u0.grid == cfg.grid))
    throw std::invalid_argument("evolve: u0 grid does not match config");
  require_finite(u0, "evolve");

  const int n_steps = step_count(cfg);
  const auto stored = stored_step_indices(n_steps, cfg.dt, cfg.dense_snapshots,
                                          cfg.snapshot_growth);
  const DyadicPartition part = build_partition(cfg.grid);
  const std::size_t n = cfg.grid.size();

  // Exact per-step multipliers of the integrator.
  std::vector<double> decay(n), phi(n), decay_half(n), phi_half(n), mid(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double k = cfg.grid.wavenumber_magnitude(i);
    decay[i] = std::exp(-cfg.dt * k);
    phi[i] = cfg.dt * phi1(cfg.dt * k);
    decay_half[i] = std::exp(-0.5 * cfg.dt * k);
    phi_half[i] = 0.5 * cfg.dt * phi1(0.5 * cfg.dt * k);
    mid[i] = cfg.dt * decay_half[i];
  }

  Spectrum u_hat = forward_transform(u0);
  const double grad0 = grad_linf_of(u_hat);
  const double guard = 1e6 * (grad0 > 0.0 ? grad0 : 1.0);

  Trajectory traj(cfg.grid);
  // Cumulative mass the march actually injects: the ledger uses the scheme's
  // own forcing sample per step, so M(u(t)) - M(u0) - integral is a pure
  // zero-mode consistency check.
  double forcing_integral = 0.0;
  std::size_t next_store = 0;

  for (int step = 0; step <= n_steps; ++step) {
    const double t = step * cfg.dt;

    ForcingResult forcing{Spectrum(cfg.grid), 0.0, 0.0};
    if (cfg.forcing_enabled) {
      forcing = forcing_from_spectrum(u_hat, cfg.p, cfg.oversample);
      if (forcing.grad_linf > guard)
        throw NumericalAbort("evolve: blow-up guard tripped at t = " +
                             std::to_string(t) + " (||grad u||_inf = " +
                             std::to_string(forcing.grad_linf) + ")");
    }

    if (next_store < stored.size() && stored[next_store] == step) {
      Field u = inverse_transform(u_hat);
      require_finite(u, ("evolve: t = " + std::to_string(t)).c_str());
      traj.times.push_back(t);
      const double gl =
          cfg.forcing_enabled ? forcing.grad_linf : grad_linf_of(u_hat);
      append_channels(traj, u_hat, u, part, gl, forcing.mass, forcing_integral);
      traj.fields.push_back(std::move(u));
      ++next_store;
    }
    if (step == n_steps) break;

    if (cfg.scheme == Scheme::exponential_euler || !cfg.forcing_enabled) {
      for (std::size_t i = 0; i < n; ++i)
        u_hat.coeffs[i] = decay[i] * u_hat.coeffs[i] +
                          phi[i] * forcing.spectrum.coeffs[i];
      forcing_integral += cfg.dt * forcing.mass;  // phi1(0) = dt
    } else {
      Spectrum half(cfg.grid);
      for (std::size_t i = 0; i < n; ++i)
        half.coeffs[i] = decay_half[i] * u_hat.coeffs[i] +
                         phi_half[i] * forcing.spectrum.coeffs[i];
      ForcingResult fm = forcing_from_spectrum(half, cfg.p, cfg.oversample);
      for (std::size_t i = 0; i < n; ++i)
        u_hat.coeffs[i] =
            decay[i] * u_hat.coeffs[i] + mid[i] * fm.spectrum.coeffs[i];
      forcing_integral += cfg.dt * fm.mass;
    }
  }
  return traj;
}

Trajectory evolve_linear(const Field& u0, std::vector<double> times) {
  require_finite(u0, "evolve_linear");
  if (times.empty()) throw std::invalid_argument("evolve_linear: no times");
  if (times.front() != 0.0) times.insert(times.begin(), 0.0);
  for (std::size_t i = 1; i < times.size(); ++i)
    if (!(times[i] > times[i - 1]))
      throw std::invalid_argument("evolve_linear: times must be increasing");

  const DyadicPartition part = build_partition(u0.grid);
  Spectrum base = forward_transform(u0);
  Trajectory traj(u0.grid);
  for (double t : times) {
    Spectrum s = base;
    semigroup_apply_inplace(s, t);
    Field u = inverse_transform(s);
    traj.times.push_back(t);
    append_channels(traj, s, u, part, grad_linf_of(s), 0.0, 0.0);
    traj.fields.push_back(std::move(u));
  }
  return traj;
}

PicardResult picard_iterate(const Field& u0, const SolverConfig& cfg,
                            int n_iter, const XYNormSpec& spec) {
  cfg.validate();
  spec.validate(cfg.p);
  if (n_iter < 2) throw std::invalid_argument("picard_iterate: n_iter >= 2");
  if (!(u0.grid == cfg.grid))
    throw std::invalid_argument("picard_iterate: u0 grid does not match config");
  require_finite(u0, "picard_iterate");

  const int n_steps = step_count(cfg);
  const auto stored = stored_step_indices(n_steps, cfg.dt, cfg.dense_snapshots,
                                          cfg.snapshot_growth);
  const DyadicPartition part = build_partition(cfg.grid);
  const std::size_t n = cfg.grid.size();

  std::vector<double> decay(n), phi(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double k = cfg.grid.wavenumber_magnitude(i);
    decay[i] = std::exp(-cfg.dt * k);
    phi[i] = cfg.dt * phi1(cfg.dt * k);
  }

  Spectrum u0_hat = forward_transform(u0);

  // First iterate: the linear flow on the shared step grid.
  std::vector<Spectrum> prev;
  prev.reserve(static_cast<std::size_t>(n_steps) + 1);
  prev.push_back(u0_hat);
  for (int step = 1; step <= n_steps; ++step) {
    Spectrum s = prev.back();
    for (std::size_t i = 0; i < n; ++i) s.coeffs[i] *= decay[i];
    prev.push_back(std::move(s));
  }

  auto make_trajectory = [&](const std::vector<Spectrum>& steps) {
    Trajectory traj(cfg.grid);
    double integral = 0.0, prev_mass = 0.0;
    for (std::size_t si = 0; si < stored.size(); ++si) {
      const int step = stored[si];
      const auto& s = steps[static_cast<std::size_t>(step)];
      ForcingResult f = forcing_from_spectrum(s, cfg.p, cfg.oversample);
      if (si > 0)
        integral += 0.5 * (step - stored[si - 1]) * cfg.dt * (prev_mass + f.mass);
      prev_mass = f.mass;
      Field u = inverse_transform(s);
      require_finite(u, "picard_iterate");
      traj.times.push_back(step * cfg.dt);
      append_channels(traj, s, u, part, f.grad_linf, f.mass, integral);
      traj.fields.push_back(std::move(u));
    }
    return traj;
  };

  // Contraction metric from the stored subset of the shared grid.
  std::vector<double> qs;
  qs.push_back(spec.r);
  if (!std::isinf(spec.r)) qs.push_back(INFINITY);
  auto metric = [&](const std::vector<Spectrum>& a,
                    const std::vector<Spectrum>& b) {
    double result = 0.0;
    Spectrum diff(cfg.grid);
    for (double q : qs) {
      double sup_eps = 0.0, integral = 0.0, prev_val = 0.0, prev_t = 0.0;
      for (std::size_t si = 0; si < stored.size(); ++si) {
        const std::size_t step = static_cast<std::size_t>(stored[si]);
        for (std::size_t i = 0; i < n; ++i)
          diff.coeffs[i] = a[step].coeffs[i] - b[step].coeffs[i];
        auto snorm = shell_lq_norms(diff, q, part);
        double b_eps = 0.0, b_eps1 = 0.0;
        for (int j = part.j_min; j <= part.j_max; ++j) {
          const double v = snorm[static_cast<std::size_t>(j - part.j_min)];
          b_eps += std::pow(2.0, spec.epsilon * j) * v;
          b_eps1 += std::pow(2.0, (1.0 + spec.epsilon) * j) * v;
        }
        sup_eps = std::max(sup_eps, b_eps);
        const double t = stored[si] * cfg.dt;
        if (si > 0) integral += 0.5 * (t - prev_t) * (prev_val + b_eps1);
        prev_val = b_eps1;
        prev_t = t;
      }
      result = std::max(result, sup_eps + integral);
    }
    return result;
  };

  PicardResult result;
  result.iterates.push_back({make_trajectory(prev), 0.0});

  int growth_streak = 0;
  for (int it = 2; it <= n_iter; ++it) {
    std::vector<Spectrum> curr;
    curr.reserve(prev.size());
    curr.push_back(u0_hat);
    for (int step = 0; step < n_steps; ++step) {
      ForcingResult f = forcing_from_spectrum(
          prev[static_cast<std::size_t>(step)], cfg.p, cfg.oversample);
      Spectrum next(cfg.grid);
      const auto& c = curr.back();
      for (std::size_t i = 0; i < n; ++i)
        next.coeffs[i] = decay[i] * c.coeffs[i] + phi[i] * f.spectrum.coeffs[i];
      curr.push_back(std::move(next));
    }
    const double d = metric(curr, prev);
    const double d_prev = result.iterates.back().distance;
    if (it > 2 && d > d_prev) {
      if (++growth_streak >= 3) result.diverged = true;
    } else {
      growth_streak = 0;
    }
    result.iterates.push_back({make_trajectory(curr), d});
    prev = std::move(curr);
  }
  return result;
}

TrajectoryNorm x_norm(const Trajectory& traj, double s, double q,
                      const DyadicPartition& part, bool with_tail) {
  TrajectoryNorm out;
  std::vector<double> integrand;
  integrand.reserve(traj.times.size());
  for (std::size_t i = 0; i < traj.times.size(); ++i) {
    auto snorm = shell_lq_norms(traj.fields[i], q, part);
    double b_s = 0.0, b_s1 = 0.0;
    for (int j = part.j_min; j <= part.j_max; ++j) {
      const double v = snorm[static_cast<std::size_t>(j - part.j_min)];
      b_s += std::pow(2.0, s * j) * v;
      b_s1 += std::pow(2.0, (s + 1.0) * j) * v;
    }
    out.sup_part = std::max(out.sup_part, b_s);
    integrand.push_back(b_s1);
    if (i > 0)
      out.integral_part += 0.5 * (traj.times[i] - traj.times[i - 1]) *
                           (integrand[i] + integrand[i - 1]);
  }
  if (with_tail && traj.times.size() > 1)
    out.tail_bound = integral_tail_bound(traj.times, integrand);
  return out;
}

TrajectoryNorm y_norm(const Trajectory& traj, const XYNormSpec& spec,
                      const DyadicPartition& part, bool with_tail) {
  TrajectoryNorm base = x_norm(traj, spec.s, spec.q, part, with_tail);
  const double dim = traj.grid.dim();
  const double w_exp = dim * (1.0 / spec.r - 1.0 / spec.q) + 1.0 - spec.s;

  double weighted_sup = 0.0, weighted_integral = 0.0;
  std::vector<double> integrand(traj.times.size(), 0.0);
  for (std::size_t i = 0; i < traj.times.size(); ++i) {
    const double t = traj.times[i];
    if (t <= 0.0) continue;
    auto snorm = shell_lq_norms(traj.fields[i], spec.q, part);
    double b1 = 0.0, b2 = 0.0;
    for (int j = part.j_min; j <= part.j_max; ++j) {
      const double v = snorm[static_cast<std::size_t>(j - part.j_min)];
      b1 += std::pow(2.0, 1.0 * j) * v;
      b2 += std::pow(2.0, 2.0 * j) * v;
    }
    const double w = std::pow(t, w_exp);
    weighted_sup = std::max(weighted_sup, w * b1);
    integrand[i] = w * b2;
    if (i > 0)
      weighted_integral += 0.5 * (traj.times[i] - traj.times[i - 1]) *
                           (integrand[i] + integrand[i - 1]);
  }
  TrajectoryNorm out;
  out.sup_part = base.sup_part + weighted_sup;
  out.integral_part = base.integral_part + weighted_integral;
  out.tail_bound = base.tail_bound;
  if (with_tail && traj.times.size() > 1) {
    const double t2 = integral_tail_bound(traj.times, integrand);
    out.tail_bound += t2;
  }
  return out;
}

}  // namespace fhj
