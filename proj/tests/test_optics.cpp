#include <doctest.h>

#include <array>
#include <cmath>
#include <complex>
#include <numbers>

#include "dualwave/errors.hpp"
#include "dualwave/holomorphic.hpp"
#include "dualwave/optics.hpp"

using namespace dualwave;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("index_at worked values") {
  const auto eaton = IndexMap::eaton_exact(1.0);
  CHECK(index_at(eaton, 1.0, 0.0) == doctest::Approx(1.0));
  CHECK(index_at(eaton, 2.0 / 3.0, 0.0) == doctest::Approx(std::sqrt(2.0)));
  CHECK(index_at(eaton, 2.0, 0.0) == doctest::Approx(0.0).scale(1.0));
  CHECK_THROWS_AS(index_at(eaton, 2.5, 0.0), OutOfDomain);

  // Monomial 2 m alpha = 1, n = -1: n_idx(4) = 1/2, matching |g|.
  const auto mono = IndexMap::monomial(0.5, -1.0, 1.0, 8.0);
  CHECK(index_at(mono, 4.0, 0.0) == doctest::Approx(0.5));
  const auto pair = HolomorphicPair::from_spec(PotentialSpec::monomial(-1.0, 0.5));
  const double g_abs = std::abs(eval_g(pair, ComplexPoint::from_polar(4.0, 0.0)));
  CHECK(index_at(mono, 4.0, 0.0) == doctest::Approx(g_abs).epsilon(1e-12));
}

TEST_CASE("optical-mechanical identity: index^2 = |g|^2 across profiles") {
  for (double n : {0.0, 2.0, -1.0, -2.0}) {
    const auto spec = PotentialSpec::monomial(n);
    const auto map = IndexMap::from_potential(spec, 8.0);
    const auto pair = HolomorphicPair::from_spec(spec);
    for (double r : {0.3, 1.0, 2.7}) {
      for (double frac : {0.2, 0.6}) {
        const auto p = ComplexPoint::from_polar(r, frac * pair.window.period);
        const double n_idx = index_at(map, p.x(), p.y());
        const double g2 = std::norm(eval_g(pair, p));
        CHECK(n_idx * n_idx == doctest::Approx(g2).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("constant index gives a straight ray") {
  const auto map = IndexMap::monomial(0.5, 0.0, 1.0, 4.0);
  RayState start{-std::sqrt(4.0 * 4.0 - 1.0), 1.0, 1.0, 0.0, 0.0};
  const auto path = trace_ray(map, start, 1e-3);
  CHECK(path.termination == Termination::ExitedDomain);
  CHECK(std::abs(path.deflection) <= 1e-9);
  for (const auto& st : path.samples) CHECK(st.y == doctest::Approx(1.0));
}

TEST_CASE("ray state stays unit-norm along the trace") {
  const auto map = IndexMap::eaton_exact(1.0);
  const auto path = trace_ray(map, {-4.0, 0.5, 1.0, 0.0, 0.0}, 1e-3);
  for (const auto& st : path.samples)
    CHECK(std::hypot(st.dx, st.dy) == doctest::Approx(1.0).epsilon(1e-12));
  // Arc length strictly increasing.
  for (std::size_t i = 1; i < path.samples.size(); ++i)
    CHECK(path.samples[i].s > path.samples[i - 1].s);
}

TEST_CASE("Eaton lens returns rays by pi") {
  const auto map = IndexMap::eaton_exact(1.0);
  const auto path = trace_ray(map, {-4.0, 0.5, 1.0, 0.0, 0.0}, 1e-4);
  CHECK(path.termination == Termination::ExitedDomain);
  CHECK(std::abs(std::abs(path.deflection) - kPi) <= 1e-3);
}

TEST_CASE("Eaton pi-return across impact parameters with Bouguer drift") {
  const auto map = IndexMap::eaton_exact(1.0);
  const std::array<double, 4> bs{0.1, 0.3, 0.7, 0.9};
  const auto rows = deflection_curve(map, bs, 1e-4);
  REQUIRE(rows.size() == bs.size());
  for (const auto& row : rows) {
    CAPTURE(row.b);
    CHECK(row.error.empty());
    CHECK(row.termination == Termination::ExitedDomain);
    CHECK(std::abs(std::abs(row.deflection) - kPi) <= 1e-3);
  }
  for (double b : bs) {
    const auto path = trace_ray(map, {-4.0, b, 1.0, 0.0, 0.0}, 1e-4);
    CHECK(path.bouguer_drift <= 1e-6);
  }
}

TEST_CASE("step halving: fourth-order consistency of the deflection") {
  const auto map = IndexMap::eaton_exact(1.0);
  auto deflection = [&](double step) {
    return trace_ray(map, {-4.0, 0.5, 1.0, 0.0, 0.0}, step).deflection;
  };
  const double d1 = deflection(4e-4);
  const double d2 = deflection(2e-4);
  const double d3 = deflection(1e-4);
  const double change1 = std::abs(d2 - d1);
  const double change2 = std::abs(d3 - d2);
  CHECK(change2 <= change1 / 15.0 + 1e-9);
}

TEST_CASE("time reversal returns to the entry point") {
  const auto map = IndexMap::eaton_exact(1.0);
  const auto fwd = trace_ray(map, {-4.0, 0.35, 1.0, 0.0, 0.0}, 1e-4);
  REQUIRE(fwd.termination == Termination::ExitedDomain);
  const auto& exit = fwd.samples.back();
  const auto back =
      trace_ray(map, {exit.x, exit.y, -exit.dx, -exit.dy, 0.0}, 1e-4);
  REQUIRE(back.termination == Termination::ExitedDomain);
  // Entry of the forward ray = second sample (after the vacuum segment).
  const auto& entry = fwd.samples[1];
  const auto& ret = back.samples.back();
  CHECK(std::hypot(ret.x - entry.x, ret.y - entry.y) <= 1e-6 * 2.0);
}

TEST_CASE("deflection curve: miss is recorded, not fatal") {
  const auto map = IndexMap::eaton_exact(1.0);
  const std::array<double, 2> bs{0.5, 1.2};
  const auto rows = deflection_curve(map, bs, 1e-3);
  CHECK(rows[0].error.empty());
  CHECK(!rows[1].error.empty());
}

TEST_CASE("phi-approximate Eaton profile") {
  // phi = pi reduces the exponent to 1/2 (the exact Eaton profile).
  const auto approx_pi = IndexMap::eaton_approx(1.0, kPi);
  const auto exact = IndexMap::eaton_exact(1.0);
  for (double r : {0.2, 0.5, 0.9})
    CHECK(index_at(approx_pi, r, 0.0) ==
          doctest::Approx(index_at(exact, r, 0.0)).epsilon(1e-12));

  // phi = pi/2, small impact parameter: deflection within 15% of pi/2.
  // The profile is only an approximation near the center; recorded
  // measurement, qualitative proximity only.
  const auto half = IndexMap::eaton_approx(1.0, kPi / 2.0);
  const auto path = trace_ray(half, {-4.0, 0.05, 1.0, 0.0, 0.0}, 1e-4);
  REQUIRE(path.termination == Termination::ExitedDomain);
  CHECK(std::abs(std::abs(path.deflection) - kPi / 2.0) <= 0.15 * kPi / 2.0);
}

TEST_CASE("hit-singularity termination for a head-on monomial ray") {
  // n = -1 attractive profile, ray aimed at the center.
  const auto map = IndexMap::monomial(0.5, -1.0, 1.0, 2.0);
  const auto path = trace_ray(map, {-2.0, 0.0, 1.0, 0.0, 0.0}, 1e-4);
  CHECK(path.termination == Termination::HitSingularity);
}
