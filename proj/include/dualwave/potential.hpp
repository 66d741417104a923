#pragma once

#include <cmath>
#include <numbers>
#include <string>

#include "dualwave/complex_point.hpp"
#include "dualwave/errors.hpp"

namespace dualwave {

enum class Family { Monomial, EatonExact, EatonApprox };

// A member of the factorizable potential family. Every supported family reduces
// to V(r) = -alpha_eff * r^n_eff together with a constant energy shift, so the
// effective monomial parameters are the single source of truth for V, g and f.
struct PotentialSpec {
  Family family = Family::Monomial;
  double n = 0.0;            // monomial exponent
  double alpha = 0.5;        // strength; default makes sqrt(2 m alpha) = 1
  double m = 1.0;            // mass
  double hbar = 1.0;
  double energy_shift = 0.0; // constant shift E in -2m(V - E) = g gbar
  double a = 1.0;            // lens radius (Eaton families)
  double phi = std::numbers::pi;  // refraction angle (EatonApprox)

  static PotentialSpec monomial(double n, double alpha = 0.5, double m = 1.0,
                                double hbar = 1.0, double energy_shift = 0.0) {
    PotentialSpec s;
    s.family = Family::Monomial;
    s.n = n;
    s.alpha = alpha;
    s.m = m;
    s.hbar = hbar;
    s.energy_shift = energy_shift;
    return s;
  }

  static PotentialSpec eaton_exact(double a, double m = 1.0, double hbar = 1.0) {
    PotentialSpec s;
    s.family = Family::EatonExact;
    s.a = a;
    s.m = m;
    s.hbar = hbar;
    return s;
  }

  static PotentialSpec eaton_approx(double a, double phi, double m = 1.0,
                                    double hbar = 1.0) {
    PotentialSpec s;
    s.family = Family::EatonApprox;
    s.a = a;
    s.phi = phi;
    s.m = m;
    s.hbar = hbar;
    return s;
  }

  void validate() const {
    if (m <= 0.0) throw ConfigError("m must be positive");
    if (hbar <= 0.0) throw ConfigError("hbar must be positive");
    if (family == Family::Monomial && alpha <= 0.0)
      throw ConfigError("alpha must be positive");
    if (family != Family::Monomial && a <= 0.0)
      throw ConfigError("a must be positive");
    if (family == Family::EatonApprox && phi <= 0.0)
      throw ConfigError("phi must be positive");
  }

  double eff_n() const {
    switch (family) {
      case Family::EatonExact:
        return -1.0;
      case Family::EatonApprox:
        return -2.0 * phi / (phi + std::numbers::pi);
      default:
        return n;
    }
  }

  double eff_alpha() const {
    switch (family) {
      case Family::EatonExact:
        return a / m;
      case Family::EatonApprox: {
        // V = -(1/2m) (2a/r)^{2 phi/(phi+pi)} near the lens center.
        const double q = phi / (phi + std::numbers::pi);
        return std::pow(2.0 * a, 2.0 * q) / (2.0 * m);
      }
      default:
        return alpha;
    }
  }

  double eff_shift() const {
    switch (family) {
      case Family::EatonExact:
        return -1.0 / (2.0 * m);
      case Family::EatonApprox:
        return 0.0;
      default:
        return energy_shift;
    }
  }

  double potential(double r) const { return -eff_alpha() * std::pow(r, eff_n()); }

  // V - E; strictly negative wherever the construction is valid.
  double shifted_potential(double r) const { return potential(r) - eff_shift(); }

  // n = -2 is dispatched to the logarithmic generator.
  bool logarithmic() const { return std::abs(eff_n() + 2.0) < 1e-12; }

  // Angular period under which the monomial duals return to themselves.
  double single_valued_period() const {
    const double ne = eff_n();
    if (logarithmic())
      throw ConfigError("n = -2 has no common single-valuedness period");
    return std::abs(4.0 * std::numbers::pi / (ne + 2.0));
  }

  BranchWindow default_window() const {
    if (eff_n() > -2.0 && !logarithmic()) return {0.0, single_valued_period()};
    return {0.0, 2.0 * std::numbers::pi};
  }

  std::string family_name() const {
    switch (family) {
      case Family::EatonExact:
        return "eaton-exact";
      case Family::EatonApprox:
        return "eaton-approx";
      default:
        return "monomial";
    }
  }
};

}  // namespace dualwave
