#include "dualwave/holomorphic.hpp"

#include <cmath>

#include "dualwave/errors.hpp"

namespace dualwave {

namespace {

void check_branch(const HolomorphicPair& pair, const ComplexPoint& p) {
  if (!pair.window.contains(p.theta()))
    throw BranchViolation("theta " + std::to_string(p.theta()) +
                          " outside branch window [" +
                          std::to_string(pair.window.theta0) + ", " +
                          std::to_string(pair.window.hi()) + ")");
}

}  // namespace

HolomorphicPair HolomorphicPair::from_spec(const PotentialSpec& spec,
                                           std::optional<BranchWindow> window) {
  spec.validate();
  HolomorphicPair pair;
  pair.spec = spec;
  pair.window = window.value_or(spec.default_window());
  const double s2ma = std::sqrt(2.0 * spec.m * spec.eff_alpha());
  if (spec.logarithmic()) {
    pair.form = FormKind::Logarithmic;
    pair.coefficient = s2ma;
    pair.exponent = 0.0;
  } else {
    pair.form = FormKind::PowerLaw;
    pair.coefficient = 2.0 * s2ma / (spec.eff_n() + 2.0);
    pair.exponent = 1.0 + spec.eff_n() / 2.0;
  }
  return pair;
}

double HolomorphicPair::g_coefficient() const {
  return std::sqrt(2.0 * spec.m * spec.eff_alpha());
}

double HolomorphicPair::g_exponent() const { return spec.eff_n() / 2.0; }

bool HolomorphicPair::singular_at_origin() const {
  if (form == FormKind::Logarithmic) return true;
  return exponent < 1.0 || spec.eff_n() < 0.0;
}

std::complex<double> eval_f(const HolomorphicPair& pair, const ComplexPoint& p) {
  check_branch(pair, p);
  if (p.r() <= 0.0 &&
      (pair.form == FormKind::Logarithmic || pair.exponent < 1.0))
    throw SingularPoint("f(z) singular or branch-ambiguous at r = 0");
  if (pair.form == FormKind::Logarithmic) {
    if (p.r() <= 0.0) throw SingularPoint("log z singular at r = 0");
    return {pair.coefficient * std::log(p.r()), pair.coefficient * p.theta()};
  }
  const double mag = pair.coefficient * std::pow(p.r(), pair.exponent);
  const double arg = pair.exponent * p.theta();
  return {mag * std::cos(arg), mag * std::sin(arg)};
}

std::complex<double> eval_g(const HolomorphicPair& pair, const ComplexPoint& p) {
  check_branch(pair, p);
  const double q = pair.g_exponent();
  if (p.r() <= 0.0 && (q < 0.0 || pair.form == FormKind::Logarithmic))
    throw SingularPoint("g(z) singular at r = 0");
  if (pair.form == FormKind::Logarithmic) {
    // g = c / z
    const double mag = pair.coefficient / p.r();
    return {mag * std::cos(-p.theta()), mag * std::sin(-p.theta())};
  }
  const double mag = pair.g_coefficient() * std::pow(p.r(), q);
  const double arg = q * p.theta();
  return {mag * std::cos(arg), mag * std::sin(arg)};
}

std::pair<double, double> decompose_uv(const HolomorphicPair& pair,
                                       const ComplexPoint& p) {
  const auto f = eval_f(pair, p);
  return {f.real(), f.imag()};
}

std::pair<double, double> cauchy_riemann_residual(const HolomorphicPair& pair,
                                                  const ComplexPoint& p,
                                                  double h) {
  if (h <= 0.0) throw ConfigError("stencil step h must be positive");
  ComplexPoint xp = p.offset(h, 0.0), xm = p.offset(-h, 0.0);
  ComplexPoint yp = p.offset(0.0, h), ym = p.offset(0.0, -h);
  for (const auto* q : {&xp, &xm, &yp, &ym}) {
    if (!pair.window.contains(q->theta()) ||
        (q->r() <= 0.0 && pair.singular_at_origin()))
      throw StencilOutOfDomain("CR stencil leaves the valid domain");
  }
  const auto [uxp, vxp] = decompose_uv(pair, xp);
  const auto [uxm, vxm] = decompose_uv(pair, xm);
  const auto [uyp, vyp] = decompose_uv(pair, yp);
  const auto [uym, vym] = decompose_uv(pair, ym);
  const double ux = (uxp - uxm) / (2.0 * h);
  const double uy = (uyp - uym) / (2.0 * h);
  const double vx = (vxp - vxm) / (2.0 * h);
  const double vy = (vyp - vym) / (2.0 * h);
  return {ux - vy, uy + vx};
}

}  // namespace dualwave
