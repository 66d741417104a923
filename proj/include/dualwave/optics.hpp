#pragma once

#include <span>
#include <string>
#include <vector>

#include "dualwave/potential.hpp"

namespace dualwave {

enum class ProfileKind { FromPotential, EatonExact, EatonApprox, Monomial };

// Radial refractive-index map, n^2(r) = -2m(V - E). The Eaton profiles are
// embedded in vacuum outside the n = 1 radius r = a; monomial / potential
// profiles fill the whole domain out to r_out.
struct IndexMap {
  ProfileKind kind = ProfileKind::Monomial;
  PotentialSpec spec;
  double r_out = 4.0;    // outer domain radius
  double r_excl = 1e-4;  // exclusion radius around the origin

  static IndexMap from_potential(const PotentialSpec& spec, double r_out = 4.0);
  static IndexMap eaton_exact(double a, double r_out = 4.0);
  static IndexMap eaton_approx(double a, double phi, double r_out = 4.0);
  static IndexMap monomial(double alpha, double n, double m = 1.0,
                           double r_out = 4.0);

  double index_squared(double r) const;
  double d_index_squared_dr(double r) const;

  // Radius of the n = 1 boundary where deflection accounting starts; infinity
  // when the profile has no vacuum region.
  double entrance_radius() const;
};

double index_at(const IndexMap& map, double x, double y);

struct RayState {
  double x = 0.0, y = 0.0;
  double dx = 1.0, dy = 0.0;  // unit direction
  double s = 0.0;             // arc length
};

enum class Termination { ExitedDomain, MaxSteps, HitSingularity };

std::string termination_name(Termination t);

struct RayPath {
  std::vector<RayState> samples;
  Termination termination = Termination::MaxSteps;
  double deflection = 0.0;     // signed, accumulated per step (unwrapped)
  double bouguer_drift = 0.0;  // relative drift of n r sin(chi) inside the lens
};

// Fixed-step RK4 integration of d/ds(n dr/ds) = grad n in the form
// r'' = (grad(n^2)/2 - (r' . grad(n^2)/2) r') / n^2. The start must aim into
// the profile region; straight-line propagation covers the vacuum outside.
RayPath trace_ray(const IndexMap& map, RayState start, double step,
                  long max_steps = 2'000'000);

struct DeflectionRow {
  double b = 0.0;
  double deflection = 0.0;
  Termination termination = Termination::MaxSteps;
  std::string error;  // empty on success
};

// One axis-parallel ray per impact parameter, launched from x = -r_out.
std::vector<DeflectionRow> deflection_curve(const IndexMap& map,
                                            std::span<const double> impact,
                                            double step,
                                            long max_steps = 2'000'000);

}  // namespace dualwave
