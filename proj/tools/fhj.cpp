// fhj: pseudo-spectral simulator and norm-analysis toolkit for
//   du/dt + (-Lap)^(1/2) u = |grad u|^p
// on a periodic box, with Littlewood-Paley diagnostics, Picard contraction
// measurements, and Poisson-profile asymptotics.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <thread>

#include "fhj/asymptotics.hpp"
#include "fhj/besov.hpp"
#include "fhj/csv.hpp"
#include "fhj/errors.hpp"
#include "fhj/poisson.hpp"
#include "fhj/presets.hpp"
#include "fhj/snapshot.hpp"
#include "fhj/solver.hpp"
#include "fhj/spectral.hpp"

namespace fs = std::filesystem;
using namespace fhj;

namespace {

constexpr const char* kVersion = "0.1.0";

int max_workers() {
  if (const char* env = std::getenv("FHJ_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

double parse_q(const std::string& text) {
  if (text == "inf" || text == "INF" || text == "infinity") return INFINITY;
  try {
    return std::stod(text);
  } catch (const std::exception&) {
    throw std::invalid_argument("--q: expected a number or 'inf', got " + text);
  }
}

struct GridOptions {
  int dim = 1;
  int points = 1024;
  double period = 100.0;
};

struct InitialDataOptions {
  std::string u0 = "preset:bump";
  double amp = 0.0;  // 0 means "natural scale"
  double support = 2.0;
};

void add_grid_options(CLI::App* cmd, GridOptions& g) {
  cmd->add_option("--N", g.dim, "space dimension (1 or 2)")
      ->default_val(1)
      ->check(CLI::Range(1, 2));
  cmd->add_option("--M", g.points, "grid points per axis (power of two >= 16)")
      ->default_val(1024);
  cmd->add_option("--L", g.period, "box period")->default_val(100.0);
}

void add_initial_data_options(CLI::App* cmd, InitialDataOptions& d) {
  cmd->add_option("--u0", d.u0,
                  "initial data: preset:{bump,gauss,poisson,dipole} or a "
                  "snapshot file")
      ->default_val("preset:bump");
  cmd->add_option("--amp", d.amp,
                  "rescale u0 to this homogeneous B^1_{inf,1} norm (0 keeps "
                  "the natural scale)")
      ->default_val(0.0);
  cmd->add_option("--support", d.support, "preset support radius / width")
      ->default_val(2.0);
}

// Resolves the initial data. A snapshot file fixes the grid; explicit grid
// flags must then agree.
Field load_initial_data(const InitialDataOptions& d, GridOptions& g,
                        const CLI::App* cmd) {
  std::optional<double> amp;
  if (d.amp != 0.0) amp = d.amp;
  if (d.u0.rfind("preset:", 0) == 0) {
    TorusGrid grid(g.dim, g.points, g.period);
    return preset_initial_data(d.u0.substr(7), grid, amp, d.support);
  }
  Snapshot snap = read_snapshot(d.u0);
  const TorusGrid& grid = snap.field.grid;
  if ((cmd->count("--M") && g.points != grid.points_per_axis()) ||
      (cmd->count("--L") && g.period != grid.period()) ||
      (cmd->count("--N") && g.dim != grid.dim()))
    throw std::invalid_argument(
        "--u0 snapshot grid conflicts with explicit --M/--L/--N");
  g.dim = grid.dim();
  g.points = grid.points_per_axis();
  g.period = grid.period();
  if (amp) {
    const DyadicPartition part = build_partition(grid);
    const double norm =
        besov_norm(snap.field, {1.0, INFINITY, 1.0, true}, part);
    if (norm == 0.0) throw std::invalid_argument("--amp: snapshot has zero norm");
    for (auto& v : snap.field.samples) v *= *amp / norm;
  }
  return snap.field;
}

void write_manifest(const fs::path& out_dir, const CLI::App* cmd,
                    double wall_seconds, const std::vector<std::string>& files) {
  std::ofstream out(out_dir / "manifest.txt", std::ios::binary);
  out << "# fhj run manifest (replayable with --config)\n";
  out << "# version = " << kVersion << "\n";
  out << "[" << cmd->get_name() << "]\n";
  out << cmd->config_to_str(true, false);
  out << "# wall_clock_seconds = " << wall_seconds << "\n";
  for (const auto& f : files) out << "# output = " << f << "\n";
}

void write_diagnostics(const fs::path& path, const Trajectory& traj) {
  const std::vector<std::string> header = {"t",         "l1",   "l2",
                                           "linf",      "grad_linf",
                                           "besov_1_inf_1", "mass",
                                           "forcing_mass"};
  CsvWriter csv(path, header);
  for (std::size_t i = 0; i < traj.times.size(); ++i) {
    const std::vector<double> row = {
        traj.times[i],
        traj.channel("l1")[i],
        traj.channel("l2")[i],
        traj.channel("linf")[i],
        traj.channel("grad_linf")[i],
        traj.channel("besov_1_inf_1")[i],
        traj.channel("mass")[i],
        traj.channel("forcing_mass")[i]};
    csv.row(row);
  }
}

std::vector<std::string> write_snapshots(const fs::path& out_dir,
                                         const Trajectory& traj,
                                         const std::string& format) {
  std::vector<std::string> files;
  for (std::size_t i = 0; i < traj.fields.size(); ++i) {
    char name[32];
    std::snprintf(name, sizeof(name), "snap_%06zu.fhj", i);
    const fs::path p = out_dir / name;
    if (format == "text")
      write_snapshot_text(p, traj.fields[i], traj.times[i]);
    else
      write_snapshot_binary(p, traj.fields[i], traj.times[i]);
    files.push_back(name);
  }
  return files;
}

Trajectory load_run(const fs::path& dir) {
  CsvTable diag = read_csv(dir / "diagnostics.csv");
  std::vector<fs::path> snaps;
  for (const auto& entry : fs::directory_iterator(dir)) {
    const std::string name = entry.path().filename().string();
    if (name.rfind("snap_", 0) == 0 && name.size() > 4 &&
        name.substr(name.size() - 4) == ".fhj")
      snaps.push_back(entry.path());
  }
  std::sort(snaps.begin(), snaps.end());
  if (snaps.empty())
    throw std::invalid_argument("run directory has no snapshots: " +
                                dir.string());

  Snapshot first = read_snapshot(snaps.front());
  Trajectory traj(first.field.grid);
  for (const auto& p : snaps) {
    Snapshot s = read_snapshot(p);
    traj.times.push_back(s.time);
    traj.fields.push_back(std::move(s.field));
  }
  const auto& t_csv = diag.column("t");
  if (t_csv.size() != traj.times.size())
    throw std::invalid_argument("diagnostics.csv rows do not match snapshots");
  for (const auto& name :
       {"l1", "l2", "linf", "grad_linf", "besov_1_inf_1", "mass",
        "forcing_mass"})
    traj.channels[name] = diag.column(name);

  // The per-step cumulative integral is not part of the CSV contract;
  // reconstruct it from the stored forcing-mass samples (coarser quadrature).
  auto& integral = traj.channels["forcing_integral"];
  integral.assign(traj.times.size(), 0.0);
  const auto& fm = traj.channel("forcing_mass");
  for (std::size_t i = 1; i < traj.times.size(); ++i)
    integral[i] = integral[i - 1] + 0.5 * (traj.times[i] - traj.times[i - 1]) *
                                        (fm[i] + fm[i - 1]);
  return traj;
}

// ---------------------------------------------------------------------------
// subcommand handlers

struct SimulateOptions {
  GridOptions grid;
  InitialDataOptions data;
  double p = 0.0;
  double horizon = 10.0;
  double dt = 0.01;
  std::string scheme = "exponential-euler";
  int oversample = 2;
  std::string out = "fhj_run";
  std::string snapshot_format = "binary";
};

SolverConfig make_config(const SimulateOptions& opt) {
  TorusGrid grid(opt.grid.dim, opt.grid.points, opt.grid.period);
  SolverConfig cfg{opt.p, opt.horizon, opt.dt, grid};
  cfg.oversample = opt.oversample;
  cfg.scheme = opt.scheme == "exponential-midpoint"
                   ? Scheme::exponential_midpoint
                   : Scheme::exponential_euler;
  return cfg;
}

int run_simulate(const CLI::App* cmd, SimulateOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  Field u0 = load_initial_data(opt.data, opt.grid, cmd);
  SolverConfig cfg = make_config(opt);
  Trajectory traj = evolve(u0, cfg);

  fs::create_directories(opt.out);
  write_diagnostics(fs::path(opt.out) / "diagnostics.csv", traj);
  auto files = write_snapshots(opt.out, traj, opt.snapshot_format);
  files.insert(files.begin(), "diagnostics.csv");
  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  write_manifest(opt.out, cmd, wall, files);
  return 0;
}

struct LinearOptions {
  GridOptions grid;
  InitialDataOptions data;
  double horizon = 50.0;
  int samples = 97;
  std::string out = "fhj_run";
  std::string snapshot_format = "binary";
};

int run_linear(const CLI::App* cmd, LinearOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  Field u0 = load_initial_data(opt.data, opt.grid, cmd);
  if (opt.samples < 2) throw std::invalid_argument("--samples must be >= 2");
  std::vector<double> times{0.0};
  const double t_lo = opt.horizon / 100.0;
  for (int k = 0; k < opt.samples; ++k)
    times.push_back(t_lo * std::pow(100.0, static_cast<double>(k) /
                                               (opt.samples - 1)));
  Trajectory traj = evolve_linear(u0, times);

  fs::create_directories(opt.out);
  write_diagnostics(fs::path(opt.out) / "diagnostics.csv", traj);
  auto files = write_snapshots(opt.out, traj, opt.snapshot_format);
  files.insert(files.begin(), "diagnostics.csv");
  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  write_manifest(opt.out, cmd, wall, files);
  return 0;
}

struct PicardOptions {
  SimulateOptions sim;
  int iters = 6;
  double r = 1.0;
};

void write_contraction(const fs::path& path, const PicardResult& result) {
  const std::vector<std::string> header = {"n", "distance", "ratio"};
  CsvWriter csv(path, header);
  for (std::size_t i = 1; i < result.iterates.size(); ++i) {
    const double d = result.iterates[i].distance;
    const double prev = result.iterates[i - 1].distance;
    const double ratio = i >= 2 && prev > 0.0 ? d / prev : NAN;
    const std::vector<double> row = {static_cast<double>(i + 1), d, ratio};
    csv.row(row);
  }
}

int run_picard(const CLI::App* cmd, PicardOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  Field u0 = load_initial_data(opt.sim.data, opt.sim.grid, cmd);
  SolverConfig cfg = make_config(opt.sim);
  XYNormSpec spec = XYNormSpec::defaults(cfg.p, INFINITY, opt.r);
  PicardResult result = picard_iterate(u0, cfg, opt.iters, spec);

  fs::create_directories(opt.sim.out);
  write_contraction(fs::path(opt.sim.out) / "contraction.csv", result);
  write_diagnostics(fs::path(opt.sim.out) / "diagnostics.csv",
                    result.iterates.back().trajectory);
  if (result.diverged)
    std::cerr << "picard: distances grew for 3 consecutive iterates "
                 "(outside the contraction regime)\n";
  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  write_manifest(opt.sim.out, cmd, wall,
                 {"contraction.csv", "diagnostics.csv"});
  return 0;
}

struct BesovOptions {
  GridOptions grid;
  InitialDataOptions data;
  double s = 1.0;
  std::string q = "inf";
  std::string out = "fhj_besov";
};

int run_besov(const CLI::App* cmd, BesovOptions& opt) {
  Field f = load_initial_data(opt.data, opt.grid, cmd);
  const DyadicPartition part = build_partition(f.grid);
  const double q = parse_q(opt.q);
  auto norms = shell_lq_norms(f, q, part);

  fs::create_directories(opt.out);
  const std::vector<std::string> header = {"j", "block_lq_norm", "weighted_term"};
  CsvWriter csv(fs::path(opt.out) / "besov_report.csv", header);
  for (int j = part.j_min; j <= part.j_max; ++j) {
    const double n = norms[static_cast<std::size_t>(j - part.j_min)];
    const std::vector<double> row = {static_cast<double>(j), n,
                                     std::pow(2.0, opt.s * j) * n};
    csv.row(row);
  }
  write_manifest(opt.out, cmd, 0.0, {"besov_report.csv"});
  return 0;
}

struct AsymptoticsOptions {
  std::string run;
  std::string out;
  double r = 1.0;
  double t0 = 5.0;
  double t1 = 50.0;
};

int run_asymptotics(const CLI::App* cmd, AsymptoticsOptions& opt) {
  (void)cmd;
  Trajectory traj = load_run(opt.run);
  const fs::path out_dir = opt.out.empty() ? fs::path(opt.run) : fs::path(opt.out);
  fs::create_directories(out_dir);

  MassLedger ledger = cstar_estimate(traj);
  {
    const std::vector<std::string> header = {"t", "c_of_t", "tail_bound"};
    CsvWriter csv(out_dir / "cstar.csv", header);
    for (std::size_t i = 0; i < ledger.times.size(); ++i) {
      // Remaining inflow beyond time t: mass still to arrive on [t, T] plus
      // the extrapolated tail beyond the horizon.
      const double bound =
          ledger.c_of_t.back() - ledger.c_of_t[i] + ledger.c_star_error;
      const std::vector<double> row = {ledger.times[i], ledger.c_of_t[i], bound};
      csv.row(row);
    }
  }

  const double t1 = std::min(opt.t1, traj.times.back());
  const double dim = traj.grid.dim();
  {
    const std::vector<std::string> header = {"channel", "t0",     "t1",
                                             "slope",   "theory", "residual"};
    CsvWriter csv(out_dir / "decay_fits.csv", header);
    struct Entry {
      const char* channel;
      double q;
      int j;
    };
    for (const Entry& e : {Entry{"l1", 1.0, 0}, Entry{"l2", 2.0, 0},
                           Entry{"linf", INFINITY, 0},
                           Entry{"grad_linf", INFINITY, 1}}) {
      const double theory = -dim * (1.0 / opt.r - 1.0 / e.q) - e.j;
      DecayFit fit = decay_fit(traj.times, traj.channel(e.channel), opt.t0, t1,
                               theory, e.channel);
      const std::vector<std::string> row = {
          fit.channel,               format_double(fit.t0),
          format_double(fit.t1),     format_double(fit.slope),
          format_double(fit.theory), format_double(fit.residual)};
      csv.row(row);
    }
  }

  if (!std::isfinite(ledger.c_star))
    throw std::invalid_argument(
        "asymptotics: C* extrapolation diverged; profile errors unavailable");
  {
    const std::vector<std::string> header = {"t", "q", "j", "weighted_error"};
    CsvWriter csv(out_dir / "profile_error.csv", header);
    for (double q : {1.0, static_cast<double>(INFINITY)})
      for (int j : {0, 1})
        for (auto [t, err] : profile_error(traj, ledger, q, j)) {
          const std::vector<double> row = {t, q, static_cast<double>(j), err};
          csv.row(row);
        }
  }
  return 0;
}

struct SweepOptions {
  SimulateOptions sim;
  std::string kind = "amplitude";
  std::vector<double> values;
  int iters = 4;
  double r = 1.0;
};

int run_sweep(const CLI::App* cmd, SweepOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  if (opt.values.empty())
    throw std::invalid_argument("sweep: --values must not be empty");
  fs::create_directories(opt.sim.out);

  if (opt.kind == "scaling") {
    TorusGrid grid(opt.sim.grid.dim, opt.sim.grid.points, opt.sim.grid.period);
    Field u0 = load_initial_data(opt.sim.data, opt.sim.grid, cmd);
    const DyadicPartition part = build_partition(grid);
    const std::vector<std::string> header = {"lambda", "ratio"};
    CsvWriter csv(fs::path(opt.sim.out) / "sweep.csv", header);
    for (double lambda : opt.values) {
      const std::vector<double> row = {lambda,
                                       scaling_check(u0, lambda, part)};
      csv.row(row);
    }
    write_manifest(opt.sim.out, cmd, 0.0, {"sweep.csv"});
    return 0;
  }
  if (opt.kind != "amplitude")
    throw std::invalid_argument("sweep: --kind must be amplitude or scaling");

  struct MemberResult {
    double amp;
    double d2 = 0.0, d3 = 0.0;
  };
  auto run_member = [&](double amp) {
    SimulateOptions mopt = opt.sim;
    mopt.data.amp = amp;
    GridOptions grid_copy = mopt.grid;
    Field u0 = load_initial_data(mopt.data, grid_copy, cmd);
    SolverConfig cfg = make_config(mopt);
    XYNormSpec spec = XYNormSpec::defaults(cfg.p, INFINITY, opt.r);
    PicardResult res = picard_iterate(u0, cfg, std::max(3, opt.iters), spec);
    const fs::path member_dir =
        fs::path(opt.sim.out) / ("amp_" + format_double(amp));
    fs::create_directories(member_dir);
    write_contraction(member_dir / "contraction.csv", res);
    MemberResult m{amp};
    m.d2 = res.iterates[1].distance;
    m.d3 = res.iterates.size() > 2 ? res.iterates[2].distance : NAN;
    return m;
  };

  // Members are independent; FHJ_THREADS caps the concurrency.
  const int workers = std::min<int>(max_workers(),
                                    static_cast<int>(opt.values.size()));
  std::vector<MemberResult> results(opt.values.size());
  std::size_t next = 0;
  while (next < opt.values.size()) {
    std::vector<std::future<MemberResult>> batch;
    for (int w = 0; w < workers && next < opt.values.size(); ++w, ++next)
      batch.push_back(std::async(std::launch::async, run_member,
                                 opt.values[next]));
    for (std::size_t i = 0; i < batch.size(); ++i)
      results[next - batch.size() + i] = batch[i].get();
  }

  const std::vector<std::string> header = {"amplitude", "d2", "d3", "ratio"};
  CsvWriter csv(fs::path(opt.sim.out) / "sweep.csv", header);
  for (const auto& m : results) {
    const std::vector<double> row = {m.amp, m.d2, m.d3,
                                     m.d2 > 0.0 ? m.d3 / m.d2 : NAN};
    csv.row(row);
  }
  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  write_manifest(opt.sim.out, cmd, wall, {"sweep.csv"});
  return 0;
}

void add_simulate_options(CLI::App* cmd, SimulateOptions& opt,
                          bool require_p = true) {
  add_grid_options(cmd, opt.grid);
  add_initial_data_options(cmd, opt.data);
  auto* p = cmd->add_option("--p", opt.p, "nonlinearity exponent (> 1)");
  if (require_p) p->required();
  cmd->add_option("--T", opt.horizon, "time horizon")->default_val(10.0);
  cmd->add_option("--dt", opt.dt, "time step")->default_val(0.01);
  cmd->add_option("--scheme", opt.scheme, "time integrator")
      ->default_val("exponential-euler")
      ->check(CLI::IsMember({"exponential-euler", "exponential-midpoint"}));
  cmd->add_option("--oversample", opt.oversample,
                  "dealiasing factor for |grad u|^p")
      ->default_val(2)
      ->check(CLI::IsMember({2, 4}));
  cmd->add_option("--out", opt.out, "output directory")->default_val("fhj_run");
  cmd->add_option("--snapshot-format", opt.snapshot_format,
                  "snapshot encoding")
      ->default_val("binary")
      ->check(CLI::IsMember({"binary", "text"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pseudo-spectral toolkit for the critical fractional "
               "Hamilton-Jacobi equation"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  app.set_config("--config", "", "read options from a config file or a run manifest");

  SimulateOptions sim_opt;
  auto* sim = app.add_subcommand("simulate", "run the nonlinear solver");
  add_simulate_options(sim, sim_opt);

  LinearOptions lin_opt;
  auto* lin = app.add_subcommand("linear", "run the semigroup flow only");
  add_grid_options(lin, lin_opt.grid);
  add_initial_data_options(lin, lin_opt.data);
  lin->add_option("--T", lin_opt.horizon, "time horizon")->default_val(50.0);
  lin->add_option("--samples", lin_opt.samples,
                  "log-spaced output times over [T/100, T]")
      ->default_val(97);
  lin->add_option("--out", lin_opt.out, "output directory")
      ->default_val("fhj_run");
  lin->add_option("--snapshot-format", lin_opt.snapshot_format,
                  "snapshot encoding")
      ->default_val("binary")
      ->check(CLI::IsMember({"binary", "text"}));

  PicardOptions pic_opt;
  auto* pic = app.add_subcommand("picard", "measure Picard contraction");
  add_simulate_options(pic, pic_opt.sim);
  pic->add_option("--iters", pic_opt.iters, "number of iterates")
      ->default_val(6)
      ->check(CLI::Range(2, 64));
  pic->add_option("--r", pic_opt.r, "lower integrability of the metric")
      ->default_val(1.0);

  BesovOptions bes_opt;
  auto* bes = app.add_subcommand("besov", "report per-shell block norms");
  add_grid_options(bes, bes_opt.grid);
  add_initial_data_options(bes, bes_opt.data);
  bes->add_option("--s", bes_opt.s, "smoothness weight")->default_val(1.0);
  bes->add_option("--q", bes_opt.q, "block integrability (number or inf)")
      ->default_val("inf");
  bes->add_option("--out", bes_opt.out, "output directory")
      ->default_val("fhj_besov");

  AsymptoticsOptions asy_opt;
  auto* asy = app.add_subcommand(
      "asymptotics", "post-process a run directory into decay reports");
  asy->add_option("--run", asy_opt.run, "run directory to read")->required();
  asy->add_option("--out", asy_opt.out, "output directory (default: run dir)");
  asy->add_option("--r", asy_opt.r, "integrability class of u0")
      ->default_val(1.0);
  asy->add_option("--t0", asy_opt.t0, "fit window start")->default_val(5.0);
  asy->add_option("--t1", asy_opt.t1, "fit window end")->default_val(50.0);

  SweepOptions swp_opt;
  auto* swp = app.add_subcommand("sweep", "amplitude or scaling families");
  add_simulate_options(swp, swp_opt.sim, /*require_p=*/false);
  swp->add_option("--kind", swp_opt.kind, "family kind")
      ->default_val("amplitude")
      ->check(CLI::IsMember({"amplitude", "scaling"}));
  swp->add_option("--values", swp_opt.values, "family parameter values")
      ->required()
      ->delimiter(',');
  swp->add_option("--iters", swp_opt.iters, "Picard iterates per member")
      ->default_val(4);
  swp->add_option("--r", swp_opt.r, "lower integrability of the metric")
      ->default_val(1.0);

  for (auto* sub : {sim, lin, pic, bes, asy, swp}) {
    sub->configurable();
    sub->fallthrough();
  }

  // Dispatch on the subcommand named on the command line (a manifest may
  // mention a section without invoking it).
  const std::string invoked = argc > 1 ? argv[1] : "";

  try {
    app.parse(argc, argv);
    if (invoked == "simulate") {
      if (!(sim_opt.p > 1.0))
        throw std::invalid_argument("--p must be > 1");
      return run_simulate(sim, sim_opt);
    }
    if (invoked == "linear") return run_linear(lin, lin_opt);
    if (invoked == "picard") {
      if (!(pic_opt.sim.p > 1.0))
        throw std::invalid_argument("--p must be > 1");
      return run_picard(pic, pic_opt);
    }
    if (invoked == "besov") return run_besov(bes, bes_opt);
    if (invoked == "asymptotics") return run_asymptotics(asy, asy_opt);
    if (invoked == "sweep") {
      if (swp_opt.kind == "amplitude" && !(swp_opt.sim.p > 1.0))
        throw std::invalid_argument("--p must be > 1 for amplitude sweeps");
      return run_sweep(swp, swp_opt);
    }
    return 0;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const NumericalAbort& e) {
    std::cerr << "numerical abort: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
