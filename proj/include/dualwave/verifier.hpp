#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dualwave/grid.hpp"
#include "dualwave/wavefunction.hpp"

namespace dualwave {

struct ResidualReport {
  std::string name;
  double l2 = 0.0;    // RMS over used nodes (pairwise-summed)
  double linf = 0.0;
  double h = 0.0;     // stencil step
  std::optional<double> observed_order;  // from a paired refinement run
  std::size_t nodes_used = 0;
  std::size_t nodes_excluded = 0;  // amplitude floor / stencil failures
};

// Identities checked by the finite-difference path.
enum class Identity {
  Schrodinger,
  HamiltonJacobi,
  Continuity,
  Bohm,
  CauchyRiemann,
  Harmonicity,
  Orthogonality,
  GradientNorm,
};

std::string identity_name(Identity id);
const std::vector<Identity>& all_identities();

struct VerifyOptions {
  double amp_floor_rel = 1e-6;    // |A| floor, relative to max |A| on the grid
  double order_lo = 1.8;
  double order_hi = 2.2;
  double roundoff_floor = 1e-9;   // linf below this counts as converged
  double exclusion_rel = 1e-3;    // r_min as a fraction of the domain radius
  // When set, the potential used inside the residuals (negative controls).
  std::optional<PotentialSpec> residual_spec;
};

// --- finite-difference path ---------------------------------------------------

ResidualReport schrodinger_residual_fd(const DualWavefunction& w,
                                       const Grid2D& grid, double h,
                                       const VerifyOptions& opt = {});

// FD residual of an arbitrary field against V - E (control inputs).
ResidualReport schrodinger_residual_of(
    const std::function<std::complex<double>(const ComplexPoint&)>& psi,
    const std::function<double(double, double)>& shifted_potential,
    const Grid2D& grid, double h, double hbar = 1.0, double m = 1.0);

ResidualReport bohm_potential_residual(const DualWavefunction& w,
                                       const Grid2D& grid, double h,
                                       const VerifyOptions& opt = {});

// Same stencil machinery for an arbitrary amplitude field (control inputs).
ResidualReport bohm_potential_of(
    const std::function<double(const ComplexPoint&)>& amplitude,
    const Grid2D& grid, double h, double amp_floor_rel = 1e-6,
    double hbar = 1.0, double m = 1.0);

std::pair<ResidualReport, ResidualReport> madelung_residuals(
    const DualWavefunction& w, const Grid2D& grid, double h,
    const VerifyOptions& opt = {});

ResidualReport identity_residual(Identity id, const DualWavefunction& w,
                                 const Grid2D& grid, double h,
                                 const VerifyOptions& opt = {});

// --- analytic path (closed-form Laplacian) ------------------------------------

// Relative residual of the stationary equation via
// nabla^2 psi = -(1/hbar^2) g gbar psi; an algebraic identity, so round-off only.
double schrodinger_residual_analytic(const DualWavefunction& w,
                                     const ComplexPoint& p);

// --- family membership --------------------------------------------------------

ResidualReport log_potential_harmonicity(const PotentialSpec& spec,
                                         const Grid2D& grid, double h);

// Discrete Laplacian of log|Vs| for an arbitrary shifted potential Vs(x, y) < 0.
ResidualReport log_harmonicity_of(
    const std::function<double(double, double)>& shifted_potential,
    const Grid2D& grid, double h);

// --- suite driver -------------------------------------------------------------

struct IdentityResult {
  std::string identity;
  Which which = Which::U;
  ResidualReport coarse;
  ResidualReport fine;  // carries observed_order
  bool pass = false;
};

// Runs every identity for both duals on grid and grid.refined().
std::vector<IdentityResult> run_identity_suite(const PotentialSpec& spec,
                                               const Grid2D& grid,
                                               const VerifyOptions& opt = {});

double observed_order(const ResidualReport& coarse, const ResidualReport& fine);

// Canonical verification grid for a spec: nodal lines and singularities of the
// dual amplitudes stay outside the domain.
Grid2D canonical_grid(const PotentialSpec& spec, int n_base = 65);

}  // namespace dualwave
