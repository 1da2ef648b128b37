#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>

#include "fhj/errors.hpp"
#include "fhj/snapshot.hpp"
#include "fhj/spectral.hpp"
#include "helpers.hpp"

using namespace fhj;
using namespace fhj::testing;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("grid construction enforces invariants") {
  CHECK_THROWS_AS(TorusGrid(3, 64, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(TorusGrid(1, 8, 1.0), std::invalid_argument);    // too small
  CHECK_THROWS_AS(TorusGrid(1, 48, 1.0), std::invalid_argument);   // not 2^k
  CHECK_THROWS_AS(TorusGrid(1, 64, -1.0), std::invalid_argument);
  TorusGrid g(2, 16, 4.0);
  CHECK(g.size() == 256);
  CHECK(g.spacing() == doctest::Approx(0.25));
  CHECK(g.signed_mode(8) == -8);
  CHECK(g.wavenumber(1) == doctest::Approx(2 * kPi / 4.0));
}

TEST_CASE("forward transform matches the naive DFT") {
  TorusGrid g(1, 64, 7.0);
  Field f = random_field(g, 1);
  Spectrum s = forward_transform(f);
  auto ref = naive_dft(f);
  double err = 0.0;
  for (std::size_t i = 0; i < ref.size(); ++i)
    err = std::max(err, std::abs(s.coeffs[i] - ref[i]));
  CHECK(err < 1e-13);
}

TEST_CASE("constant field transforms to a pure zero mode") {
  TorusGrid g(1, 32, 5.0);
  Field f(g, 3.25);
  Spectrum s = forward_transform(f);
  CHECK(s.coeffs[0].real() == doctest::Approx(3.25).epsilon(1e-14));
  for (std::size_t i = 1; i < s.coeffs.size(); ++i)
    CHECK(std::abs(s.coeffs[i]) < 1e-14);
}

TEST_CASE("a single sine occupies exactly the conjugate mode pair") {
  TorusGrid g(1, 64, 10.0);
  Field f(g);
  for (int i = 0; i < 64; ++i)
    f.samples[static_cast<std::size_t>(i)] = std::sin(2 * kPi * g.coord(i) / 10.0);
  Spectrum s = forward_transform(f);
  for (int i = 0; i < 64; ++i) {
    const double mag = std::abs(s.coeffs[static_cast<std::size_t>(i)]);
    if (std::abs(g.signed_mode(i)) == 1)
      CHECK(mag == doctest::Approx(0.5).epsilon(1e-12));
    else
      CHECK(mag < 1e-14);
  }
  CHECK(std::abs(s.coeffs[1] - std::conj(s.coeffs[63])) < 1e-14);
}

TEST_CASE("round trip is the identity within 1e-12") {
  for (int m : {16, 64, 256}) {
    TorusGrid g(1, m, 3.7);
    Field f = random_field(g, static_cast<unsigned>(m));
    CHECK(max_abs_diff(f, inverse_transform(forward_transform(f))) <
          1e-12 * max_abs(f));
  }
  TorusGrid g2(2, 32, 3.0);
  Field f2 = random_field(g2, 9);
  CHECK(max_abs_diff(f2, inverse_transform(forward_transform(f2))) <
        1e-12 * max_abs(f2));
}

TEST_CASE("transform rejects non-finite samples") {
  TorusGrid g(1, 16, 1.0);
  Field f(g, 1.0);
  f.samples[3] = std::nan("");
  CHECK_THROWS_AS(forward_transform(f), NumericalAbort);
}

TEST_CASE("inverse transform flags broken Hermitian symmetry") {
  TorusGrid g(1, 32, 1.0);
  Spectrum s = forward_transform(random_field(g, 2));
  s.coeffs[5] += std::complex<double>(0.1, 0.2);  // damage one mode only
  CHECK_THROWS_AS(inverse_transform(s), std::invalid_argument);
  Spectrum zero(g);
  Field z = inverse_transform(zero);
  CHECK(max_abs(z) == 0.0);
}

TEST_CASE("multipliers act diagonally") {
  TorusGrid g(1, 128, 2 * kPi);
  Field f(g);
  for (int i = 0; i < 128; ++i)
    f.samples[static_cast<std::size_t>(i)] = std::sin(g.coord(i));

  SUBCASE("identity symbol") {
    Field r = apply_multiplier(f, [](auto) { return 1.0; });
    CHECK(max_abs_diff(f, r) < 1e-13);
  }
  SUBCASE("|k| on an eigenfunction") {
    Field r = apply_multiplier(
        f, [](std::span<const double, 2> k) { return std::hypot(k[0], k[1]); });
    for (std::size_t i = 0; i < r.samples.size(); ++i)
      CHECK(r.samples[i] == doctest::Approx(f.samples[i]).epsilon(1e-12));
  }
  SUBCASE("exp(-t|k|) scales the mode") {
    const double t = 0.8;
    Field r = apply_multiplier(f, [t](std::span<const double, 2> k) {
      return std::exp(-t * std::hypot(k[0], k[1]));
    });
    for (std::size_t i = 0; i < r.samples.size(); ++i)
      CHECK(r.samples[i] ==
            doctest::Approx(std::exp(-t) * f.samples[i]).epsilon(1e-12));
  }
  SUBCASE("non-finite symbol is rejected") {
    CHECK_THROWS_AS(
        apply_multiplier(f, [](std::span<const double, 2> k) {
          return 1.0 / std::abs(k[0]);  // infinite at the zero mode
        }),
        std::invalid_argument);
  }
}

TEST_CASE("gradient is exact on band-limited data") {
  TorusGrid g(1, 128, 2 * kPi);
  SUBCASE("constant has zero gradient") {
    Field c(g, 4.0);
    CHECK(max_abs(gradient(c)[0]) < 1e-13);
  }
  SUBCASE("trig polynomial derivative is exact") {
    Field f(g), want(g);
    for (int i = 0; i < 128; ++i) {
      const double x = g.coord(i);
      f.samples[static_cast<std::size_t>(i)] =
          std::sin(3 * x) + 0.5 * std::cos(7 * x);
      want.samples[static_cast<std::size_t>(i)] =
          3 * std::cos(3 * x) - 3.5 * std::sin(7 * x);
    }
    CHECK(max_abs_diff(gradient(f)[0], want) < 1e-12 * max_abs(want));
  }
  SUBCASE("gradient components have zero mass") {
    TorusGrid fine(1, 256, 11.0);
    Field bump = random_band_limited(fine, 3, 1, 40);
    CHECK(std::abs(mass(gradient(bump)[0])) < 1e-12 * lq_norm(bump, 1.0));
  }
  SUBCASE("2D gradient is exact per axis") {
    TorusGrid g2(2, 32, 2 * kPi);
    Field f(g2), wx(g2), wy(g2);
    for (std::size_t i = 0; i < g2.size(); ++i) {
      auto idx = g2.axis_indices(i);
      const double x = g2.coord(idx[0]), y = g2.coord(idx[1]);
      f.samples[i] = std::sin(2 * x) * std::cos(y);
      wx.samples[i] = 2 * std::cos(2 * x) * std::cos(y);
      wy.samples[i] = -std::sin(2 * x) * std::sin(y);
    }
    auto grads = gradient(f);
    CHECK(max_abs_diff(grads[0], wx) < 1e-12 * max_abs(wx));
    CHECK(max_abs_diff(grads[1], wy) < 1e-12 * max_abs(wy));
  }
}

TEST_CASE("semigroup properties") {
  TorusGrid g(1, 256, 20.0);
  Field f = random_field(g, 5);

  SUBCASE("t = 0 is the identity, bitwise") {
    Field r = semigroup_apply(f, 0.0);
    CHECK(max_abs_diff(f, r) == 0.0);
  }
  SUBCASE("negative time is rejected") {
    CHECK_THROWS_AS(semigroup_apply(f, -1.0), std::invalid_argument);
  }
  SUBCASE("single mode decays by exp(-t|k|)") {
    TorusGrid gm(1, 64, 2 * kPi);
    Field mode(gm);
    for (int i = 0; i < 64; ++i)
      mode.samples[static_cast<std::size_t>(i)] = std::sin(4 * gm.coord(i));
    Field r = semigroup_apply(mode, 0.5);
    for (std::size_t i = 0; i < r.samples.size(); ++i)
      CHECK(r.samples[i] ==
            doctest::Approx(std::exp(-2.0) * mode.samples[i]).epsilon(1e-12));
  }
  SUBCASE("composition: e^{sL} e^{tL} = e^{(s+t)L}") {
    Field a = semigroup_apply(semigroup_apply(f, 0.7), 1.3);
    Field b = semigroup_apply(f, 2.0);
    CHECK(max_abs_diff(a, b) < 1e-12 * max_abs(b));
  }
  SUBCASE("Lq contraction on a random corpus") {
    for (unsigned seed : {11u, 12u, 13u, 14u}) {
      Field u = random_field(g, seed);
      Field v = semigroup_apply(u, 0.9);
      for (double q : {1.0, 2.0, static_cast<double>(INFINITY)})
        CHECK(lq_norm(v, q) <= lq_norm(u, q) * (1.0 + 1e-10));
    }
  }
  SUBCASE("mass is conserved exactly") {
    Field r = semigroup_apply(f, 17.0);
    CHECK(mass(r) == doctest::Approx(mass(f)).epsilon(1e-12));
  }
}

TEST_CASE("lq_norm") {
  TorusGrid g(1, 64, 8.0);
  SUBCASE("zero field") { CHECK(lq_norm(Field(g), 2.0) == 0.0); }
  SUBCASE("constant, q = 1 equals |c| L") {
    Field c(g, -2.0);
    CHECK(lq_norm(c, 1.0) == doctest::Approx(16.0).epsilon(1e-14));
  }
  SUBCASE("q below one is rejected") {
    CHECK_THROWS_AS(lq_norm(Field(g, 1.0), 0.5), std::invalid_argument);
  }
  SUBCASE("q = 2 agrees with Parseval") {
    Field f = random_field(g, 21);
    Spectrum s = forward_transform(f);
    double sum = 0.0;
    for (const auto& c : s.coeffs) sum += std::norm(c);
    CHECK(lq_norm(f, 2.0) ==
          doctest::Approx(std::sqrt(sum * g.volume())).epsilon(1e-12));
  }
  SUBCASE("mass equals zero mode times volume") {
    Field f = random_field(g, 22);
    Spectrum s = forward_transform(f);
    CHECK(mass(f) ==
          doctest::Approx(s.coeffs[0].real() * g.volume()).epsilon(1e-12));
  }
}

TEST_CASE("oversampling pad/truncate round trip") {
  TorusGrid g(1, 64, 5.0);
  Field f = random_band_limited(g, 31, 1, 20);
  Spectrum s = forward_transform(f);
  for (int factor : {2, 4}) {
    Spectrum fine = pad_spectrum(s, factor);
    Field upsampled = inverse_transform(fine);
    // Trig interpolation reproduces the coarse samples at shared points.
    for (int i = 0; i < 64; ++i)
      CHECK(upsampled.samples[static_cast<std::size_t>(i * factor)] ==
            doctest::Approx(f.samples[static_cast<std::size_t>(i)])
                .epsilon(1e-12));
    Spectrum back = truncate_spectrum(fine, 64);
    CHECK(max_abs_diff(inverse_transform(back), f) < 1e-12);
  }
  TorusGrid g2(2, 16, 5.0);
  Field f2 = random_band_limited(g2, 32, 1, 5);
  Spectrum s2 = forward_transform(f2);
  Field back2 = inverse_transform(truncate_spectrum(pad_spectrum(s2, 2), 16));
  CHECK(max_abs_diff(back2, f2) < 1e-12);
}

TEST_CASE("phi1 is accurate through the small-argument regime") {
  CHECK(phi1(0.0) == 1.0);
  CHECK(phi1(1e-12) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(phi1(1.0) == doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-14));
  CHECK(phi1(50.0) == doctest::Approx(1.0 / 50.0).epsilon(1e-12));
}

TEST_CASE("snapshot formats round trip") {
  TorusGrid g(1, 32, 6.5);
  Field f = random_field(g, 77);
  const auto dir = std::filesystem::temp_directory_path();

  SUBCASE("binary is bit exact") {
    const auto path = dir / "fhj_test_snap.fhj";
    write_snapshot_binary(path, f, 1.25);
    Snapshot s = read_snapshot(path);
    CHECK(s.time == 1.25);
    CHECK(s.field.grid == g);
    CHECK(max_abs_diff(s.field, f) == 0.0);
  }
  SUBCASE("text is bit exact via shortest round-trip decimals") {
    const auto path = dir / "fhj_test_snap.txt";
    write_snapshot_text(path, f, 0.5);
    Snapshot s = read_snapshot(path);
    CHECK(s.time == 0.5);
    CHECK(max_abs_diff(s.field, f) == 0.0);
  }
  SUBCASE("2D snapshot") {
    TorusGrid g2(2, 16, 2.0);
    Field f2 = random_field(g2, 78);
    const auto path = dir / "fhj_test_snap2.fhj";
    write_snapshot_binary(path, f2, 0.0);
    CHECK(max_abs_diff(read_snapshot(path).field, f2) == 0.0);
  }
}
