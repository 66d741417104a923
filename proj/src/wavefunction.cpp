#include "dualwave/wavefunction.hpp"

#include <cmath>

#include "dualwave/errors.hpp"

namespace dualwave {

double DualWavefunction::amplitude(const ComplexPoint& p) const {
  const auto [u, v] = decompose_uv(pair, p);
  return which == Which::U ? u : v;
}

double DualWavefunction::action(const ComplexPoint& p) const {
  const auto [u, v] = decompose_uv(pair, p);
  return which == Which::U ? v : u;
}

std::complex<double> eval_psi(const DualWavefunction& w, const ComplexPoint& p) {
  const auto [u, v] = decompose_uv(w.pair, p);
  const double amp = w.which == Which::U ? u : v;
  const double phase = (w.which == Which::U ? v : u) / w.hbar();
  return {amp * std::cos(phase), amp * std::sin(phase)};
}

std::complex<double> eval_psi_extended(const ExtendedWavefunction& w,
                                       const ComplexPoint& p, double zeta,
                                       double t) {
  const double hbar = w.base.hbar();
  const double phase =
      (w.base.action(p) + w.k_zeta * zeta - w.energy * t) / hbar;
  const double amp = w.base.amplitude(p);
  return {amp * std::cos(phase), amp * std::sin(phase)};
}

double extended_dispersion_residual(const ExtendedWavefunction& w,
                                    const ComplexPoint& p, double zeta,
                                    double t) {
  const auto& spec = w.base.pair.spec;
  const double hbar = spec.hbar;
  const double m = spec.m;
  const auto psi = eval_psi_extended(w, p, zeta, t);
  const auto g = eval_g(w.base.pair, p);
  const double g2 = std::norm(g);
  const double k2 = w.k_zeta * w.k_zeta;
  // 3D Laplacian along the closed-form path: nabla^2 psi = -((g gbar + k^2)/hbar^2) psi,
  // i hbar dpsi/dt = E psi.
  const std::complex<double> kinetic =
      (-hbar * hbar / (2.0 * m)) * (-(g2 + k2) / (hbar * hbar)) * psi;
  const std::complex<double> potential = spec.potential(p.r()) * psi;
  const std::complex<double> time_term = -w.energy * psi;
  const double scale = std::abs(kinetic) + std::abs(potential) +
                       std::abs(time_term);
  if (scale == 0.0) return 0.0;
  return std::abs(kinetic + potential + time_term) / scale;
}

SingleValuednessReport single_valuedness(const PotentialSpec& spec,
                                         double tolerance) {
  SingleValuednessReport rep;
  const double radii[] = {0.5, 1.0, 1.7, 2.4};
  const int nangles = 12;

  auto mismatch_at_shift = [&](Which which, double period) {
    // Widen the window so theta and theta + period are both inside it.
    BranchWindow base = spec.default_window();
    BranchWindow wide{base.theta0, base.period + period + 1.0};
    auto w = DualWavefunction::make(spec, which, wide);
    double worst = 0.0;
    for (double r : radii) {
      for (int k = 0; k < nangles; ++k) {
        const double theta = base.theta0 + 0.05 + 0.9 * base.period * k / nangles;
        const auto p0 = ComplexPoint::from_polar(r, theta);
        const auto p1 = ComplexPoint::from_polar(r, theta + period);
        const auto a = eval_psi(w, p0);
        const auto b = eval_psi(w, p1);
        const double scale = std::max(std::abs(a), std::abs(b));
        if (scale == 0.0) continue;
        worst = std::max(worst, std::abs(a - b) / scale);
      }
    }
    return worst;
  };

  if (spec.logarithmic()) {
    const double two_pi = 2.0 * std::numbers::pi;
    rep.period_u = two_pi;
    rep.period_v = std::nullopt;
    rep.multivalued_v = true;
    rep.mismatch_u = mismatch_at_shift(Which::U, two_pi);
    rep.mismatch_v = mismatch_at_shift(Which::V, two_pi);
    rep.verified_u = rep.mismatch_u <= tolerance;
    rep.verified_v = false;
    return rep;
  }

  const double period = spec.single_valued_period();
  rep.period_u = period;
  rep.period_v = period;
  rep.mismatch_u = mismatch_at_shift(Which::U, period);
  rep.mismatch_v = mismatch_at_shift(Which::V, period);
  rep.verified_u = rep.mismatch_u <= tolerance;
  rep.verified_v = rep.mismatch_v <= tolerance;
  return rep;
}

FieldSample sample_grid(const DualWavefunction& w, const Grid2D& grid) {
  if (grid.unmasked_count() == 0)
    throw EmptyGrid("all grid nodes are masked");
  FieldSample out;
  const auto& nodes = grid.nodes();
  out.x.reserve(nodes.size());
  for (const auto& nd : nodes) {
    out.x.push_back(nd.x);
    out.y.push_back(nd.y);
    out.r.push_back(nd.r);
    out.theta.push_back(nd.theta);
    out.mask.push_back(nd.masked ? 1 : 0);
    if (nd.masked) {
      out.re_psi.push_back(0.0);
      out.im_psi.push_back(0.0);
      out.u.push_back(0.0);
      out.v.push_back(0.0);
      out.g_abs2.push_back(0.0);
      continue;
    }
    const auto p = nd.point();
    const auto [u, v] = decompose_uv(w.pair, p);
    const auto psi = eval_psi(w, p);
    out.re_psi.push_back(psi.real());
    out.im_psi.push_back(psi.imag());
    out.u.push_back(u);
    out.v.push_back(v);
    out.g_abs2.push_back(std::norm(eval_g(w.pair, p)));
  }
  return out;
}

}  // namespace dualwave
