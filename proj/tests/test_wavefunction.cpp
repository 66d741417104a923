#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "dualwave/errors.hpp"
#include "dualwave/wavefunction.hpp"

using namespace dualwave;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("eval_psi worked values") {
  // n = 0, sqrt(2 m alpha) = 1: psi_u = x exp(i y)
  const auto w0 = DualWavefunction::make(PotentialSpec::monomial(0.0), Which::U);
  const auto psi0 = eval_psi(w0, ComplexPoint::from_cartesian(2.0, 0.0));
  CHECK(psi0.real() == doctest::Approx(2.0));
  CHECK(psi0.imag() == doctest::Approx(0.0).scale(1.0));

  // n = 2, sqrt(m alpha / 2) = 1: psi_v = r^2 sin(2t) exp(i r^2 cos(2t))
  const auto w2 = DualWavefunction::make(PotentialSpec::monomial(2.0, 2.0), Which::V);
  const auto psi2 = eval_psi(w2, ComplexPoint::from_polar(1.0, kPi / 4));
  CHECK(psi2.real() == doctest::Approx(1.0));
  CHECK(psi2.imag() == doctest::Approx(0.0).scale(1.0));

  // n = -1, 2 m alpha = 1: psi_u(r=1, t=0) = 2 cos(0) e^{i 0} = 2
  const auto wh = DualWavefunction::make(PotentialSpec::monomial(-1.0, 0.5), Which::U);
  const auto psih = eval_psi(wh, ComplexPoint::from_polar(1.0, 0.0));
  CHECK(psih.real() == doctest::Approx(2.0));
  CHECK(psih.imag() == doctest::Approx(0.0).scale(1.0));
}

TEST_CASE("|psi|^2 equals the squared signed amplitude") {
  const auto spec = PotentialSpec::monomial(2.0);
  for (Which which : {Which::U, Which::V}) {
    const auto w = DualWavefunction::make(spec, which);
    for (double theta : {0.2, 1.1, 2.9}) {
      const auto p = ComplexPoint::from_polar(1.3, theta * spec.single_valued_period() / kPi / 2.0 + 0.01);
      const double amp = w.amplitude(p);
      CHECK(std::norm(eval_psi(w, p)) == doctest::Approx(amp * amp).epsilon(1e-12));
    }
  }
}

TEST_CASE("duality swap is an involution and exchanges amplitude/action") {
  const auto w = DualWavefunction::make(PotentialSpec::monomial(-1.0), Which::U);
  const auto ws = w.swapped();
  CHECK(ws.which == Which::V);
  CHECK(ws.swapped().which == Which::U);
  const auto p = ComplexPoint::from_polar(1.7, 2.2);
  CHECK(w.amplitude(p) == doctest::Approx(ws.action(p)).epsilon(1e-14));
  CHECK(w.action(p) == doctest::Approx(ws.amplitude(p)).epsilon(1e-14));
  // |psi_u| |psi_v| = |u v|
  const auto [u, v] = decompose_uv(w.pair, p);
  CHECK(std::abs(eval_psi(w, p)) * std::abs(eval_psi(ws, p)) ==
        doctest::Approx(std::abs(u * v)).epsilon(1e-12));
}

TEST_CASE("extended wavefunction reduces to 2D at k_zeta = 0") {
  const auto base = DualWavefunction::make(PotentialSpec::monomial(0.0), Which::U);
  const auto ext = ExtendedWavefunction::make(base, 0.0);
  CHECK(ext.energy == doctest::Approx(0.0).scale(1.0));
  const auto p = ComplexPoint::from_cartesian(1.5, 0.4);
  const auto a = eval_psi_extended(ext, p, 3.0, 7.0);
  const auto b = eval_psi(base, p);
  CHECK(a.real() == doctest::Approx(b.real()).epsilon(1e-12));
  CHECK(a.imag() == doctest::Approx(b.imag()).epsilon(1e-12));
}

TEST_CASE("extended wavefunction worked value and dual variant") {
  // n = 0, k = 2, m = 1, shift 0 -> E = 2; at (1,0), zeta = pi/2, t = 0:
  // psi_u = 1 * exp(i [0 + 2*(pi/2)]) = -1.
  const auto base = DualWavefunction::make(PotentialSpec::monomial(0.0), Which::U);
  const auto ext = ExtendedWavefunction::make(base, 2.0);
  CHECK(ext.energy == doctest::Approx(2.0));
  const auto p = ComplexPoint::from_cartesian(1.0, 0.0);
  const auto psi = eval_psi_extended(ext, p, kPi / 2.0, 0.0);
  CHECK(psi.real() == doctest::Approx(-1.0));
  CHECK(psi.imag() == doctest::Approx(0.0).scale(1.0));

  // Dual variant: amplitude v, action u.
  const auto extv = ExtendedWavefunction::make(base.swapped(), 2.0);
  const auto pv = ComplexPoint::from_cartesian(1.0, 0.5);
  const auto psiv = eval_psi_extended(extv, pv, 0.25, 0.1);
  const auto [u, v] = decompose_uv(base.pair, pv);
  const double phase = u + 2.0 * 0.25 - 2.0 * 0.1;
  CHECK(psiv.real() == doctest::Approx(v * std::cos(phase)).epsilon(1e-12));
  CHECK(psiv.imag() == doctest::Approx(v * std::sin(phase)).epsilon(1e-12));
}

TEST_CASE("extended dispersion residual vanishes only on shell") {
  for (Which which : {Which::U, Which::V}) {
    const auto base =
        DualWavefunction::make(PotentialSpec::monomial(-1.0, 0.5), which);
    auto ext = ExtendedWavefunction::make(base, 1.7);
    const auto p = ComplexPoint::from_polar(1.1, 0.9);
    CHECK(extended_dispersion_residual(ext, p, 0.3, 0.2) <= 1e-12);
    const double e0 = ext.energy;
    for (double delta : {0.01 * e0, 0.05 * e0}) {
      auto off = ext;
      off.energy = e0 + delta;
      const double res = extended_dispersion_residual(off, p, 0.3, 0.2);
      CHECK(res >= 0.1 * std::abs(delta) / std::abs(e0));
    }
  }
}

TEST_CASE("single-valuedness periods per family") {
  const auto r0 = single_valuedness(PotentialSpec::monomial(0.0));
  CHECK(*r0.period_u == doctest::Approx(2.0 * kPi));
  CHECK(r0.verified_u);
  CHECK(r0.verified_v);

  const auto r2 = single_valuedness(PotentialSpec::monomial(2.0));
  CHECK(*r2.period_u == doctest::Approx(kPi));
  CHECK(r2.verified_u);

  const auto rh = single_valuedness(PotentialSpec::monomial(-1.0));
  CHECK(*rh.period_u == doctest::Approx(4.0 * kPi));
  CHECK(rh.verified_u);
  CHECK(rh.verified_v);

  const auto rl = single_valuedness(PotentialSpec::monomial(-2.0));
  CHECK(*rl.period_u == doctest::Approx(2.0 * kPi));
  CHECK(rl.verified_u);
  CHECK(!rl.period_v.has_value());
  CHECK(rl.multivalued_v);
  CHECK(!rl.verified_v);
  CHECK(rl.mismatch_v >= 0.1);
}

TEST_CASE("sample_grid: cartesian smoke, masking, |f|^2 identity") {
  const auto w = DualWavefunction::make(PotentialSpec::monomial(0.0), Which::U);
  auto grid = Grid2D::cartesian(1.0, 2.0, 1.0, 2.0, 5, 5);
  const auto sample = sample_grid(w, grid);
  CHECK(sample.size() == 25);
  for (int m : sample.mask) CHECK(m == 0);

  // Annular grid with exclusion: nodes below r_min get masked.
  const auto wh = DualWavefunction::make(PotentialSpec::monomial(-1.0, 0.5), Which::U);
  auto ann = Grid2D::annular(0.1, 1.0, 16, 16, 0.3, 2.8);
  ann.apply_domain_mask(wh.pair.window, 0.2, 0.0);
  const auto s2 = sample_grid(wh, ann);
  bool any_masked = false, any_clear = false;
  for (std::size_t i = 0; i < s2.size(); ++i) {
    if (s2.r[i] < 0.2) {
      CHECK(s2.mask[i] == 1);
      any_masked = true;
    } else {
      any_clear = true;
    }
  }
  CHECK(any_masked);
  CHECK(any_clear);

  // Hydrogen ring identity: u^2 + v^2 = |f|^2 = 4 * 2 m alpha * r.
  auto ring = Grid2D::annular(1.0, 1.0001, 5, 32, 0.3, 2.8);
  const auto s3 = sample_grid(wh, ring);
  for (std::size_t i = 0; i < s3.size(); ++i) {
    const double expect = 4.0 * 1.0 * s3.r[i];  // 2 m alpha = 1
    CHECK(s3.u[i] * s3.u[i] + s3.v[i] * s3.v[i] ==
          doctest::Approx(expect).epsilon(1e-10));
  }
}

TEST_CASE("sample_grid: fully masked grid raises EmptyGrid") {
  const auto w = DualWavefunction::make(PotentialSpec::monomial(-1.0), Which::U);
  auto grid = Grid2D::annular(0.1, 0.15, 5, 5, 0.3, 1.0);
  grid.apply_domain_mask(w.pair.window, 1.0, 0.0);  // exclusion beyond r_max
  CHECK_THROWS_AS(sample_grid(w, grid), EmptyGrid);
}

TEST_CASE("periodicity detected numerically on a ring (n != -2)") {
  const auto spec = PotentialSpec::monomial(-1.0, 0.5);
  const double period = spec.single_valued_period();
  const auto w = DualWavefunction::make(
      spec, Which::U, BranchWindow{0.0, 2.0 * period});
  for (double r : {0.7, 1.9}) {
    for (double theta : {0.2, 1.5, 3.0}) {
      const auto a = eval_psi(w, ComplexPoint::from_polar(r, theta));
      const auto b = eval_psi(w, ComplexPoint::from_polar(r, theta + period));
      CHECK(std::abs(a - b) <= 1e-10 * std::max(1.0, std::abs(a)));
    }
  }
}
