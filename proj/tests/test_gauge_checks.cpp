#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qring/errors.hpp"
#include "qring/gauge_checks.hpp"
#include "test_helpers.hpp"

using namespace qring;
constexpr double pi = std::numbers::pi;

TEST_CASE("linear_bc_momentum") {
  CHECK(linear_bc_momentum(1, 0.0) == 1.0);
  CHECK(linear_bc_momentum(1, 2.0 * pi) == 0.0);
  CHECK(linear_bc_momentum(0, pi) == -0.5);
}

TEST_CASE("de_broglie_residual") {
  SUBCASE("continuous gauge satisfies momentum * wavelength = 2 pi") {
    const DeBroglieRecord rec = de_broglie_residual(1.0, 1, 0.0);
    CHECK(rec.residual == 0.0);
    CHECK(rec.wavelength == 2.0 * pi);
  }
  SUBCASE("jump-compensated momentum also closes the relation") {
    CHECK(de_broglie_residual(0.5, 1, pi).residual < 1e-15);
  }
  SUBCASE("mismatched triple leaves the jump behind") {
    CHECK(de_broglie_residual(1.0, 1, pi).residual ==
          doctest::Approx(pi).epsilon(1e-15));
  }
  SUBCASE("zero winding is rejected") {
    CHECK_THROWS_AS(de_broglie_residual(1.0, 0, 0.0),
                    WavelengthUndefinedError);
  }
  SUBCASE("wavelength bookkeeping") {
    for (int m : {-3, -1, 2, 5}) {
      const DeBroglieRecord rec = de_broglie_residual(0.3, m, 1.1);
      CHECK(rec.wavelength * m == doctest::Approx(2.0 * pi).epsilon(1e-12));
    }
  }
  SUBCASE("momenta from the continuity condition always close the relation") {
    auto rng = test_helpers::seeded_rng(21);
    std::uniform_real_distribution<double> jump(-10.0, 10.0);
    for (int m = -5; m <= 5; ++m) {
      if (m == 0) continue;
      for (int trial = 0; trial < 10; ++trial) {
        const double dxi = jump(rng);
        const double n = linear_bc_momentum(m, dxi);
        CHECK(de_broglie_residual(n, m, dxi).residual < 1e-12);
      }
    }
  }
}

TEST_CASE("verify_gauge_invariance") {
  const RingGrid g = make_grid(20);
  SUBCASE("zero gauge changes nothing") {
    CHECK(verify_gauge_invariance(g, BoundarySpec::linear(),
                                  GaugeSpec::zero(g)) < 1e-12);
  }
  SUBCASE("sinusoidal gauge on a twisted operator") {
    CHECK(verify_gauge_invariance(g, BoundarySpec::twisted(1.1),
                                  parse_gauge(g, "sin:0.7:2")) <= 1e-9);
  }
  SUBCASE("jumpy linear gauge on a twisted operator") {
    CHECK(verify_gauge_invariance(g, BoundarySpec::twisted(0.77),
                                  parse_gauge(g, "linear:0.25")) <= 1e-9);
  }
  SUBCASE("holds at larger rings too") {
    const RingGrid big = make_grid(100);
    const GaugeSpec mix =
        GaugeSpec::linear(big, -0.8).plus(GaugeSpec::sinusoid(big, 0.5, 3));
    CHECK(verify_gauge_invariance(big, BoundarySpec::twisted(2.4), mix) <=
          1e-9);
  }
}

TEST_CASE("winding_shift_demo") {
  const RingGrid g = make_grid(20);
  SUBCASE("zero gauge leaves the winding alone") {
    const WindingShift s = winding_shift_demo(g, GaugeSpec::zero(g), 0);
    CHECK(s.winding_after == s.winding_before);
    CHECK(std::abs(s.lambda_after - s.lambda_before) < 1e-12);
  }
  SUBCASE("a full-turn jump shifts the winding by one") {
    const WindingShift s = winding_shift_demo(g, GaugeSpec::linear(g, 1.0), 0);
    CHECK(s.winding_before == -5);  // lowest eigenvalue of the r=20 stencil
    CHECK(s.winding_after == s.winding_before + 1);
    CHECK(std::abs(s.lambda_after - s.lambda_before) < 1e-9);
  }
  SUBCASE("a periodic gauge adds no net winding") {
    const WindingShift s =
        winding_shift_demo(g, GaugeSpec::sinusoid(g, 0.5, 1), 0);
    CHECK(s.winding_after == s.winding_before);
  }
  SUBCASE("index must address the spectrum") {
    CHECK_THROWS_AS(winding_shift_demo(g, GaugeSpec::zero(g), 20),
                    DimensionError);
  }
}
