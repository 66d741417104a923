#pragma once

#include <complex>
#include <optional>
#include <utility>

#include "dualwave/complex_point.hpp"
#include "dualwave/potential.hpp"

namespace dualwave {

enum class FormKind { PowerLaw, Logarithmic };

// Generator pair (f, g = df/dz) for one family member, evaluated on a declared
// branch window.
//
//   PowerLaw:    f(z) = c z^p,  c = 2 sqrt(2 m alpha)/(n+2),  p = 1 + n/2
//                g(z) = sqrt(2 m alpha) z^{n/2}
//   Logarithmic: f(z) = sqrt(2 m alpha) log z,  g(z) = sqrt(2 m alpha)/z
struct HolomorphicPair {
  PotentialSpec spec;
  BranchWindow window;
  FormKind form = FormKind::PowerLaw;
  double coefficient = 1.0;  // c above (for Logarithmic, the log prefactor)
  double exponent = 1.0;     // p above (PowerLaw only)

  static HolomorphicPair from_spec(const PotentialSpec& spec,
                                   std::optional<BranchWindow> window = {});

  double g_coefficient() const;  // sqrt(2 m alpha_eff)
  double g_exponent() const;     // n_eff / 2

  // True when f or g diverges at r = 0.
  bool singular_at_origin() const;
};

std::complex<double> eval_f(const HolomorphicPair& pair, const ComplexPoint& p);
std::complex<double> eval_g(const HolomorphicPair& pair, const ComplexPoint& p);

// (u, v) = (Re f, Im f); signed, never folded through an absolute value.
std::pair<double, double> decompose_uv(const HolomorphicPair& pair,
                                       const ComplexPoint& p);

// Central-difference Cauchy-Riemann defects (du/dx - dv/dy, du/dy + dv/dx).
std::pair<double, double> cauchy_riemann_residual(const HolomorphicPair& pair,
                                                  const ComplexPoint& p, double h);

}  // namespace dualwave
