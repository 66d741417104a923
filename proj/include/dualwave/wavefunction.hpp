#pragma once

#include <complex>
#include <optional>

#include "dualwave/grid.hpp"
#include "dualwave/holomorphic.hpp"

namespace dualwave {

enum class Which { U, V };

inline Which other(Which w) { return w == Which::U ? Which::V : Which::U; }

// One member of the dual pair: psi_u = u exp(i v / hbar), psi_v = v exp(i u / hbar).
struct DualWavefunction {
  HolomorphicPair pair;
  Which which = Which::U;

  static DualWavefunction make(const PotentialSpec& spec, Which which,
                               std::optional<BranchWindow> window = {}) {
    return {HolomorphicPair::from_spec(spec, window), which};
  }

  DualWavefunction swapped() const { return {pair, other(which)}; }

  double hbar() const { return pair.spec.hbar; }

  // Signed amplitude A and action S (phase = S / hbar), unreduced.
  double amplitude(const ComplexPoint& p) const;
  double action(const ComplexPoint& p) const;
};

std::complex<double> eval_psi(const DualWavefunction& w, const ComplexPoint& p);

// Plane-wave extension along a third direction: amplitude(x,y) times
// exp(i [S(x,y) + k_zeta zeta - E t] / hbar).
struct ExtendedWavefunction {
  DualWavefunction base;
  double k_zeta = 0.0;
  double energy = 0.0;

  // Dispersion-consistent energy E = k_zeta^2 / 2m + energy_shift.
  static ExtendedWavefunction make(const DualWavefunction& base, double k_zeta) {
    ExtendedWavefunction e{base, k_zeta, 0.0};
    e.energy = k_zeta * k_zeta / (2.0 * base.pair.spec.m) +
               base.pair.spec.eff_shift();
    return e;
  }
};

std::complex<double> eval_psi_extended(const ExtendedWavefunction& w,
                                       const ComplexPoint& p, double zeta,
                                       double t);

// Relative residual of the time-dependent Schroedinger equation along the
// closed-form Laplacian path; zero exactly when E matches the dispersion.
double extended_dispersion_residual(const ExtendedWavefunction& w,
                                    const ComplexPoint& p, double zeta,
                                    double t);

struct SingleValuednessReport {
  std::optional<double> period_u;  // radians
  std::optional<double> period_v;
  bool verified_u = false;
  bool verified_v = false;
  double mismatch_u = 0.0;  // max relative mismatch psi(theta) vs psi(theta+T)
  double mismatch_v = 0.0;  // for n = -2, measured at T = 2*pi
  bool multivalued_v = false;
};

SingleValuednessReport single_valuedness(const PotentialSpec& spec,
                                         double tolerance = 1e-10);

FieldSample sample_grid(const DualWavefunction& w, const Grid2D& grid);

}  // namespace dualwave
