#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "fhj/csv.hpp"
#include "fhj/presets.hpp"
#include "fhj/snapshot.hpp"
#include "fhj/spectral.hpp"
#include "helpers.hpp"

using namespace fhj;
using namespace fhj::testing;
namespace fs = std::filesystem;

namespace {

const fs::path kCli = FHJ_CLI_PATH;

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  const fs::path log = fs::temp_directory_path() / "fhj_cli_test.log";
  const std::string cmd =
      kCli.string() + " " + args + " > " + log.string() + " 2>&1";
  const int status = std::system(cmd.c_str());
  std::ifstream in(log);
  std::stringstream buf;
  buf << in.rdbuf();
  return {WEXITSTATUS(status), buf.str()};
}

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / name;
  fs::remove_all(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

const std::string kSmallRun =
    "--p 2 --T 2 --dt 0.02 --M 256 --L 50 --u0 preset:bump --amp 0.05 "
    "--support 4";

}  // namespace

TEST_CASE("validation failures exit with code 2 and name the flag") {
  auto r = run_cli("simulate --T 1");
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("--p") != std::string::npos);

  r = run_cli("simulate --p 0.5 --out " +
              fresh_dir("fhj_cli_badp").string());
  CHECK(r.exit_code == 2);

  r = run_cli("simulate --p 2 --u0 preset:nosuch --out " +
              fresh_dir("fhj_cli_badpreset").string());
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("nosuch") != std::string::npos);
}

TEST_CASE("numerical aborts exit with code 3") {
  const fs::path out = fresh_dir("fhj_cli_blowup");
  auto r = run_cli("simulate --p 3 --T 1 --dt 0.1 --M 256 --L 50 --amp 1000 "
                   "--out " + out.string());
  CHECK(r.exit_code == 3);
  CHECK(r.output.find("blow-up") != std::string::npos);
}

TEST_CASE("simulate writes deterministic outputs") {
  const fs::path a = fresh_dir("fhj_cli_det_a");
  const fs::path b = fresh_dir("fhj_cli_det_b");
  REQUIRE(run_cli("simulate " + kSmallRun + " --out " + a.string()).exit_code == 0);
  REQUIRE(run_cli("simulate " + kSmallRun + " --out " + b.string()).exit_code == 0);
  CHECK(slurp(a / "diagnostics.csv") == slurp(b / "diagnostics.csv"));
  CHECK(!slurp(a / "diagnostics.csv").empty());
}

TEST_CASE("a manifest replays to byte-identical diagnostics") {
  const fs::path a = fresh_dir("fhj_cli_rep_a");
  const fs::path b = fresh_dir("fhj_cli_rep_b");
  REQUIRE(run_cli("simulate " + kSmallRun + " --out " + a.string()).exit_code == 0);
  REQUIRE(run_cli("simulate --config " + (a / "manifest.txt").string() +
                  " --out " + b.string())
              .exit_code == 0);
  CHECK(slurp(a / "diagnostics.csv") == slurp(b / "diagnostics.csv"));
  SUBCASE("flags override the manifest") {
    const fs::path c = fresh_dir("fhj_cli_rep_c");
    REQUIRE(run_cli("simulate --config " + (a / "manifest.txt").string() +
                    " --T 1 --out " + c.string())
                .exit_code == 0);
    CHECK(slurp(a / "diagnostics.csv") != slurp(c / "diagnostics.csv"));
  }
}

TEST_CASE("diagnostics CSV has the documented columns") {
  const fs::path out = fresh_dir("fhj_cli_columns");
  REQUIRE(run_cli("simulate " + kSmallRun + " --out " + out.string()).exit_code == 0);
  CsvTable t = read_csv(out / "diagnostics.csv");
  const std::vector<std::string> want = {
      "t", "l1", "l2", "linf", "grad_linf", "besov_1_inf_1", "mass",
      "forcing_mass"};
  CHECK(t.header == want);
  CHECK(t.column("t").front() == 0.0);
  CHECK(t.column("t").back() == doctest::Approx(2.0));
}

TEST_CASE("snapshots written by a run reload as initial data") {
  const fs::path out = fresh_dir("fhj_cli_resume");
  REQUIRE(run_cli("simulate " + kSmallRun + " --out " + out.string()).exit_code == 0);
  Snapshot s = read_snapshot(out / "snap_000000.fhj");
  CHECK(s.time == 0.0);
  CHECK(s.field.grid.points_per_axis() == 256);

  const fs::path out2 = fresh_dir("fhj_cli_resume2");
  REQUIRE(run_cli("simulate --p 2 --T 1 --dt 0.02 --u0 " +
                  (out / "snap_000000.fhj").string() + " --out " + out2.string())
              .exit_code == 0);
  SUBCASE("grid conflicts with the snapshot are rejected") {
    auto r = run_cli("simulate --p 2 --T 1 --dt 0.02 --M 512 --u0 " +
                     (out / "snap_000000.fhj").string() + " --out " +
                     fresh_dir("fhj_cli_resume3").string());
    CHECK(r.exit_code == 2);
  }
}

TEST_CASE("text snapshot format round trips through the CLI") {
  const fs::path out = fresh_dir("fhj_cli_text");
  REQUIRE(run_cli("simulate " + kSmallRun +
                  " --snapshot-format text --out " + out.string())
              .exit_code == 0);
  Snapshot s = read_snapshot(out / "snap_000000.fhj");
  TorusGrid g(1, 256, 50.0);
  Field u0 = preset_initial_data("bump", g, 0.05, 4.0);
  // The stored t = 0 state is u0 after one analysis/synthesis round trip.
  CHECK(max_abs_diff(s.field, u0) < 1e-14);
}

TEST_CASE("linear and asymptotics pipeline") {
  const fs::path out = fresh_dir("fhj_cli_pipeline");
  REQUIRE(run_cli("linear --u0 preset:bump --T 50 --M 2048 --L 400 "
                  "--samples 49 --out " + out.string()).exit_code == 0);
  REQUIRE(run_cli("asymptotics --run " + out.string()).exit_code == 0);

  // decay_fits.csv has a text channel column; scan it by line. Bump data
  // spreads like the kernel, so the sup channel decays at a rate near -1.
  bool found_linf = false;
  {
    std::ifstream in(out / "decay_fits.csv");
    std::string line;
    std::getline(in, line);
    CHECK(line == "channel,t0,t1,slope,theory,residual");
    int rows = 0;
    while (std::getline(in, line)) {
      ++rows;
      if (line.rfind("linf,", 0) == 0) {
        found_linf = true;
        std::stringstream ss(line.substr(5));
        std::string t0s, t1s, slope_s;
        std::getline(ss, t0s, ',');
        std::getline(ss, t1s, ',');
        std::getline(ss, slope_s, ',');
        CHECK(std::stod(slope_s) == doctest::Approx(-1.0).epsilon(0.1));
      }
    }
    CHECK(rows == 4);
  }
  CHECK(found_linf);

  CsvTable cstar = read_csv(out / "cstar.csv");
  CHECK(cstar.column("c_of_t").back() ==
        doctest::Approx(cstar.column("c_of_t").front()).epsilon(1e-12));

  CsvTable prof = read_csv(out / "profile_error.csv");
  CHECK(prof.column("t").size() > 0);
}

TEST_CASE("besov report emits one row per resolved shell") {
  const fs::path out = fresh_dir("fhj_cli_besov");
  REQUIRE(run_cli("besov --u0 preset:bump --M 512 --L 50 --s 1 --q inf --out " +
                  out.string())
              .exit_code == 0);
  CsvTable t = read_csv(out / "besov_report.csv");
  const std::vector<std::string> want = {"j", "block_lq_norm", "weighted_term"};
  CHECK(t.header == want);
  CHECK(t.column("j").size() == 9);  // shells resolved on (512, 50)
  for (std::size_t i = 0; i < t.column("j").size(); ++i) {
    const double weight = std::pow(2.0, t.column("j")[i]);
    CHECK(t.column("weighted_term")[i] ==
          doctest::Approx(weight * t.column("block_lq_norm")[i]).epsilon(1e-12));
  }
}

TEST_CASE("amplitude sweep ratios grow with amplitude") {
  const fs::path out = fresh_dir("fhj_cli_sweep");
  REQUIRE(run_cli("sweep --kind amplitude --values 0.01,0.1,0.5 --p 2 --T 4 "
                  "--dt 0.05 --M 512 --L 100 --support 4 --iters 3 --out " +
                  out.string())
              .exit_code == 0);
  CsvTable t = read_csv(out / "sweep.csv");
  const auto& ratio = t.column("ratio");
  REQUIRE(ratio.size() == 3);
  CHECK(ratio[0] < ratio[1]);
  CHECK(ratio[1] < ratio[2]);
  CHECK(fs::exists(out / "amp_0.01" / "contraction.csv"));
}

TEST_CASE("scaling sweep stays near 1 on dyadic rescalings") {
  const fs::path out = fresh_dir("fhj_cli_scaling");
  REQUIRE(run_cli("sweep --kind scaling --values 0.5,1,2 --M 2048 --L 100 "
                  "--support 4 --out " + out.string())
              .exit_code == 0);
  CsvTable t = read_csv(out / "sweep.csv");
  for (std::size_t i = 0; i < t.column("lambda").size(); ++i) {
    CHECK(t.column("ratio")[i] > 1.0 / 3.0);
    CHECK(t.column("ratio")[i] < 3.0);
  }
}
