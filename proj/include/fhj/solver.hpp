#ifndef FHJ_SOLVER_HPP
#define FHJ_SOLVER_HPP

#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "fhj/besov.hpp"
#include "fhj/field.hpp"

namespace fhj {

enum class Scheme { exponential_euler, exponential_midpoint };

/// Time integration setup for du/dt + (-Lap)^(1/2) u = |grad u|^p.
struct SolverConfig {
  double p;
  double horizon;
  double dt;
  TorusGrid grid;
  int oversample = 2;  // anti-aliasing factor for |grad u|^p, 2 or 4
  Scheme scheme = Scheme::exponential_euler;
  bool forcing_enabled = true;
  // Snapshot policy: every step until dense_snapshots are stored, then
  // geometric spacing by snapshot_growth (2^(1/8)); the final time is always
  // stored.
  int dense_snapshots = 64;
  double snapshot_growth = 1.0905077326652577;

  void validate() const;
};

/// Time-indexed snapshots plus named diagnostic series, both aligned with
/// `times`. Standard channels: l1, l2, linf, grad_linf, besov_1_inf_1, mass,
/// forcing_mass, forcing_integral (cumulative trapezoid of forcing_mass over
/// every step, not just stored ones).
struct Trajectory {
  TorusGrid grid;
  std::vector<double> times;
  std::vector<Field> fields;
  std::map<std::string, std::vector<double>> channels;

  const std::vector<double>& channel(const std::string& name) const;
  Trajectory(const TorusGrid& g) : grid(g) {}
};

/// Weights for the trajectory norms: the X-norm at smoothness s, the Y-norm
/// weight exponent N(1/r - 1/q) + 1 - s, and the contraction metric
/// smoothness epsilon. lambda is the Y smoothness used by the solver presets
/// (s defaults to it).
struct XYNormSpec {
  double s;
  double q;
  double r;
  double lambda;
  double epsilon;

  static XYNormSpec defaults(double p, double q = INFINITY, double r = 1.0);
  void validate(double p) const;
};

/// |grad u|^p evaluated pointwise on an oversampled grid, then low-pass
/// truncated back. oversample = 1 disables dealiasing (tests only).
Field nonlinearity(const Field& u, double p, int oversample);

/// Duhamel march of the mild formulation with the exact semigroup and phi1
/// multipliers. Aborts (NumericalAbort) when ||grad u||_inf exceeds 1e6
/// times its initial value or a non-finite value appears.
Trajectory evolve(const Field& u0, const SolverConfig& cfg);

/// Exact linear flow e^{tL} u0 snapshotted at the given times (first time 0
/// is prepended when missing).
Trajectory evolve_linear(const Field& u0, std::vector<double> times);

struct PicardIterate {
  Trajectory trajectory;
  double distance;  // d(u_n, u_{n-1}); 0 for the first iterate
};

struct PicardResult {
  std::vector<PicardIterate> iterates;
  bool diverged = false;  // distance grew 3 consecutive times
};

/// Fixed-point iterates u_1 = e^{tL} u0, u_n = Psi(u_{n-1}) on the shared
/// step grid, with the same phi1 quadrature as evolve, and the contraction
/// metric d(u,v) = max_{q in {r, inf}} X^epsilon_q norm of the difference.
PicardResult picard_iterate(const Field& u0, const SolverConfig& cfg,
                            int n_iter, const XYNormSpec& spec);

struct TrajectoryNorm {
  double sup_part = 0.0;
  double integral_part = 0.0;
  double tail_bound = 0.0;  // fitted extrapolation beyond the horizon
  double total() const { return sup_part + integral_part + tail_bound; }
};

/// sup_t ||u(t)||_{B^s_{q,1}} + integral_0^T ||u(t)||_{B^{s+1}_{q,1}} dt over
/// the stored snapshots, plus a power-law tail bound for the truncated
/// integral when with_tail is set.
TrajectoryNorm x_norm(const Trajectory& traj, double s, double q,
                      const DyadicPartition& part, bool with_tail = true);

/// x_norm at smoothness spec.s plus the weighted sup of ||u||_{B^1_{q,1}} and
/// the weighted time-integral of ||u||_{B^2_{q,1}}, weight
/// t^(N(1/r - 1/q) + 1 - s).
TrajectoryNorm y_norm(const Trajectory& traj, const XYNormSpec& spec,
                      const DyadicPartition& part, bool with_tail = true);

}  // namespace fhj

#endif
