#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "qring/errors.hpp"
#include "qring/ring_operator.hpp"
#include "qring/spectrum_analysis.hpp"
#include "test_helpers.hpp"

using namespace qring;
constexpr double pi = std::numbers::pi;

namespace {
std::vector<double> discrete_values(const std::vector<SpectrumLabel>& labels) {
  std::vector<double> v;
  v.reserve(labels.size());
  for (const auto& l : labels) v.push_back(l.lambda_discrete);
  return test_helpers::sorted(v);
}
}  // namespace

TEST_CASE("analytic_spectrum windows and values") {
  SUBCASE("r=4 periodic wrap") {
    const auto labels = analytic_spectrum(make_grid(4), 0.0);
    REQUIRE(labels.size() == 4);
    CHECK(labels.front().mode == -1);
    CHECK(labels.back().mode == 2);
    const auto vals = discrete_values(labels);
    CHECK(vals[0] == doctest::Approx(-0.636620).epsilon(1e-6));
    CHECK(vals[1] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(vals[2] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(vals[3] == doctest::Approx(0.636620).epsilon(1e-6));
  }
  SUBCASE("r=4 half-turn twist is doubly degenerate") {
    const auto vals = discrete_values(analytic_spectrum(make_grid(4), pi));
    CHECK(vals[0] == doctest::Approx(-0.450158).epsilon(1e-6));
    CHECK(vals[1] == doctest::Approx(-0.450158).epsilon(1e-6));
    CHECK(vals[2] == doctest::Approx(0.450158).epsilon(1e-6));
    CHECK(vals[3] == doctest::Approx(0.450158).epsilon(1e-6));
  }
  SUBCASE("half-turn twist at r=20 includes the half-integer band heads") {
    const auto labels = analytic_spectrum(make_grid(20), pi);
    bool has_half = false, has_minus_half = false;
    for (const auto& l : labels) {
      if (std::abs(l.lambda_continuum - 0.5) < 1e-12) has_half = true;
      if (std::abs(l.lambda_continuum + 0.5) < 1e-12) has_minus_half = true;
    }
    CHECK(has_half);
    CHECK(has_minus_half);
  }
}

TEST_CASE("analytic labels reproduce the numeric spectrum") {
  auto rng = test_helpers::seeded_rng(31);
  std::uniform_real_distribution<double> twist(0.0, 2.0 * pi);
  for (std::size_t r = 3; r <= 40; ++r) {
    const RingGrid g = make_grid(r);
    for (int trial = 0; trial < 2; ++trial) {
      const double da = twist(rng);
      const auto numeric = eigh(build_twisted(g, da).entries).eigenvalues;
      const auto analytic = discrete_values(analytic_spectrum(g, da));
      for (std::size_t i = 0; i < r; ++i)
        CHECK(std::abs(numeric[i] - analytic[i]) < 1e-9);
    }
  }
}

TEST_CASE("the mirrored convention negates the spectrum") {
  const RingGrid g = make_grid(14);
  const double da = 1.1;
  const auto fig =
      eigh(build_twisted(g, da, BoundarySign::FigureB1).entries).eigenvalues;
  const auto lit =
      eigh(build_twisted(g, da, BoundarySign::PaperLiteral).entries)
          .eigenvalues;
  for (std::size_t i = 0; i < g.points; ++i)
    CHECK(std::abs(fig[i] + lit[g.points - 1 - i]) < 1e-9);
  // and the mirrored analytic labels match the mirrored operator
  const auto labels =
      analytic_spectrum(g, da, BoundarySign::PaperLiteral);
  const auto vals = discrete_values(labels);
  for (std::size_t i = 0; i < g.points; ++i)
    CHECK(std::abs(vals[i] - lit[i]) < 1e-9);
}

TEST_CASE("classify_spectrum") {
  const RingGrid g = make_grid(20);
  SUBCASE("periodic wrap matches with mode window -9..10") {
    const Spectrum s = eigh(build_linear(g).entries);
    const auto labels = classify_spectrum(s, g, 0.0, 1e-9);
    int lo = 100, hi = -100;
    for (const auto& l : labels) {
      REQUIRE(l.matched_numeric.has_value());
      CHECK(std::abs(*l.matched_numeric - l.lambda_discrete) <= 1e-9);
      lo = std::min(lo, l.mode);
      hi = std::max(hi, l.mode);
    }
    CHECK(lo == -9);
    CHECK(hi == 10);
  }
  SUBCASE("aliasing flags at the half-turn twist") {
    const Spectrum s = eigh(build_twisted(g, pi).entries);
    const auto labels = classify_spectrum(s, g, pi, 1e-9);
    for (const auto& l : labels) {
      const bool low_mode = l.mode >= -3 && l.mode <= 2;
      CHECK(l.aliased == !low_mode);
    }
  }
  SUBCASE("wrong twist fails loudly") {
    const Spectrum s = eigh(build_twisted(g, pi).entries);
    CHECK_THROWS_AS(classify_spectrum(s, g, 1.0, 1e-9), ClassificationError);
  }
}

TEST_CASE("superposition_admissible") {
  CHECK(superposition_admissible({0.3, 1.3, -0.7}));
  CHECK_FALSE(superposition_admissible({0.3, 0.8}));
  CHECK(superposition_admissible({0.42}));
  CHECK_THROWS_AS(superposition_admissible({}), InvalidSpecError);
}

TEST_CASE("mirror_superposable") {
  CHECK(mirror_superposable(0.5));
  CHECK_FALSE(mirror_superposable(0.3));
  CHECK(mirror_superposable(0.0));
  CHECK(mirror_superposable(-1.5));
  CHECK_FALSE(mirror_superposable(0.25));
}

TEST_CASE("periodicity_defect") {
  SUBCASE("integer mode differences close the seam") {
    CHECK(periodicity_defect(
              {0.0, {{0.0, cplx(1.0, 0.0)}, {1.0, cplx(1.0, 0.0)}}}) < 1e-12);
  }
  SUBCASE("a 0.3 offset leaves the documented derivative mismatch") {
    const double defect =
        periodicity_defect({0.0, {{0.0, cplx(1.0, 0.0)}, {0.3, cplx(1.0, 0.0)}}});
    CHECK(defect == doctest::Approx(0.485410).epsilon(1e-6));
  }
  SUBCASE("single modes are uniform") {
    CHECK(periodicity_defect({0.0, {{2.7, cplx(0.3, 0.4)}}}) < 1e-15);
  }
  SUBCASE("agrees with the admissibility test on random specs") {
    auto rng = test_helpers::seeded_rng(55);
    std::uniform_real_distribution<double> offset(-2.0, 2.0);
    std::uniform_real_distribution<double> amp(0.2, 1.0);
    std::uniform_int_distribution<int> mode(-4, 4);
    std::uniform_real_distribution<double> shift(0.1, 0.9);
    for (int trial = 0; trial < 60; ++trial) {
      const bool spoil = trial % 2 == 1;
      SuperpositionSpec spec{offset(rng), {}};
      int base = mode(rng);
      spec.terms.push_back({double(base), cplx(amp(rng), amp(rng))});
      spec.terms.push_back({double(base) + 1.0 + (spoil ? shift(rng) : 0.0),
                            cplx(amp(rng), -amp(rng))});
      spec.terms.push_back({double(base) - 2.0, cplx(amp(rng), 0.0)});
      std::vector<double> eigenvalues;
      for (const auto& t : spec.terms)
        eigenvalues.push_back(spec.band_offset + t.mode);
      CHECK(superposition_admissible(eigenvalues) ==
            (periodicity_defect(spec) <= 1e-9));
    }
  }
}

TEST_CASE("energy_bands") {
  SUBCASE("half-integer offset degeneracy") {
    const auto pts = energy_bands(0.5, -1, 0);
    REQUIRE(pts.size() == 2);
    CHECK(pts[0].energy == 0.25);
    CHECK(pts[1].energy == 0.25);
    CHECK(pts[0].energy == pts[0].momentum * pts[0].momentum);
  }
  SUBCASE("integer offset degeneracy") {
    const auto pts = energy_bands(0.0, -1, 1);
    CHECK(pts[0].energy == 1.0);
    CHECK(pts[1].energy == 0.0);
    CHECK(pts[2].energy == 1.0);
  }
  SUBCASE("empty range is rejected") {
    CHECK_THROWS_AS(energy_bands(0.0, 2, 1), InvalidConfigError);
  }
}

TEST_CASE("degenerate_transition") {
  SUBCASE("half-integer offset transfers one unit") {
    const auto t = degenerate_transition(0.5);
    REQUIRE(t.has_value());
    CHECK(t->modes.first == 0);
    CHECK(t->modes.second == -1);
    CHECK(t->momentum_transfer == 1.0);
  }
  SUBCASE("integer offset transfers two units") {
    const auto t = degenerate_transition(0.0);
    REQUIRE(t.has_value());
    CHECK(t->modes.first == 1);
    CHECK(t->modes.second == -1);
    CHECK(t->momentum_transfer == 2.0);
  }
  SUBCASE("generic offsets have no degenerate pair") {
    CHECK_FALSE(degenerate_transition(0.25).has_value());
  }
  SUBCASE("existence coincides with mirror superposability") {
    for (int i = 0; i <= 100; ++i) {
      const double q = 0.01 * i;
      CHECK(degenerate_transition(q).has_value() == mirror_superposable(q));
    }
  }
}

TEST_CASE("flux_eigenvalue") {
  SUBCASE("no flux, no shift") {
    for (int n : {-2, 0, 3}) CHECK(flux_eigenvalue(n, {1.0, 0.0, 1.0, 0.5}) == n);
  }
  SUBCASE("neutral particles ignore the flux") {
    CHECK(flux_eigenvalue(2, {0.0, 7.7, 1.0, 0.0}) == 2.0);
  }
  SUBCASE("a pi phase shifts the eigenvalue by one half") {
    CHECK(flux_eigenvalue(1, {1.0, pi, 1.0, 0.0}) == 1.5);
  }
  SUBCASE("gamma never enters the value") {
    for (double gamma : {0.0, 0.25, 0.5, 1.0})
      CHECK(flux_eigenvalue(3, {0.7, 1.9, 2.0, gamma}) ==
            flux_eigenvalue(3, {0.7, 1.9, 2.0, 0.0}));
  }
  SUBCASE("configuration validation") {
    CHECK_THROWS_AS(flux_eigenvalue(0, {1.0, 1.0, 0.0, 0.0}),
                    InvalidConfigError);
    CHECK_THROWS_AS(flux_eigenvalue(0, {1.0, 1.0, -2.0, 0.0}),
                    InvalidConfigError);
    CHECK_THROWS_AS(flux_eigenvalue(0, {1.0, 1.0, 1.0, 1.5}),
                    InvalidConfigError);
  }
}
