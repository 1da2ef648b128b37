#ifndef FHJ_ASYMPTOTICS_HPP
#define FHJ_ASYMPTOTICS_HPP

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fhj/poisson.hpp"
#include "fhj/solver.hpp"

namespace fhj {

/// Running mass bookkeeping of a run: c(t) = M(u0) + integral of the forcing
/// mass, and its extrapolated limit.
struct MassLedger {
  double m_u0 = 0.0;
  std::vector<double> times;
  std::vector<double> forcing_integral;
  std::vector<double> c_of_t;
  double c_star = 0.0;
  double c_star_error = 0.0;  // extrapolated tail, never silently dropped
};

/// c(t) from the trajectory's cumulative forcing channel; the limit is the
/// final value plus a power-law tail fitted to the forcing-mass decay.
/// Errors when c(t) decreases beyond roundoff (solver bug).
MassLedger cstar_estimate(const Trajectory& traj);

struct DecayFit {
  std::string channel;
  double t0 = 0.0;
  double t1 = 0.0;
  double slope = 0.0;
  double theory = 0.0;
  double residual = 0.0;  // rms log residual
};

/// Least-squares slope of log(value) against log(t) over [t0, t1]. Requires
/// t1 >= 4 t0, at least 3 samples in the window, and positive values there.
DecayFit decay_fit(std::span<const double> times, std::span<const double> values,
                   double t0, double t1, double theory = 0.0,
                   const std::string& channel = "");

/// Weighted profile error t^(N(1-1/q)+j) ||grad^j [u(t) - C* P_{t+1}]||_q per
/// stored positive time, with the comparison profile periodized (the torus
/// flow the solution actually follows).
std::vector<std::pair<double, double>> profile_error(const Trajectory& traj,
                                                     const MassLedger& ledger,
                                                     double q, int j);

struct LinearDifference {
  std::vector<std::pair<double, double>> series;  // (t, weighted difference)
  DecayFit fit;  // over the trailing window, against the theory branch
};

/// Weighted difference t^(N(1/r-1/q)+j) ||grad^j [u(t) - e^{tL} u0]||_q with
/// the theory exponent -N(r-1)/r for p >= r and -N(p-1)/r for p < r.
LinearDifference linear_difference(const Trajectory& traj, const Field& u0,
                                   double q, int j, double r, double p);

}  // namespace fhj

#endif
