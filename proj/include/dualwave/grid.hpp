#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dualwave/complex_point.hpp"
#include "dualwave/errors.hpp"

namespace dualwave {

struct GridNode {
  double x = 0.0, y = 0.0, r = 0.0, theta = 0.0;
  bool masked = false;

  ComplexPoint point() const { return ComplexPoint::from_polar(r, theta); }
};

// Sample lattice. Nodes carry their own branch-consistent angle; annular grids
// may sweep windows wider than 2*pi.
class Grid2D {
 public:
  enum class Geometry { Cartesian, Annular };

  static Grid2D cartesian(double x0, double x1, double y0, double y1, int nx,
                          int ny);
  static Grid2D annular(double r0, double r1, int nr, int ntheta,
                        double theta_a, double theta_b, bool log_radial = false);

  // Same geometry at doubled resolution; the characteristic spacing halves
  // exactly so paired refinement gives a clean order estimate.
  Grid2D refined() const;

  // Mask nodes outside the branch window, inside the exclusion radius, or
  // within `margin` of either (one stencil width keeps central differences off
  // the cut).
  void apply_domain_mask(const BranchWindow& window, double r_excl,
                         double margin);

  Geometry geometry() const { return geometry_; }
  const std::vector<GridNode>& nodes() const { return nodes_; }
  std::vector<GridNode>& nodes() { return nodes_; }
  double spacing() const { return spacing_; }
  std::size_t unmasked_count() const;
  std::string describe() const;

  // Geometry parameters (valid per geometry()).
  double x0 = 0, x1 = 0, y0 = 0, y1 = 0;
  int nx = 0, ny = 0;
  double r0 = 0, r1 = 0, theta_a = 0, theta_b = 0;
  int nr = 0, ntheta = 0;
  bool log_radial = false;

 private:
  Geometry geometry_ = Geometry::Cartesian;
  std::vector<GridNode> nodes_;
  double spacing_ = 0.0;

  void build();
};

// Tabulated fields of one dual wavefunction over a grid.
struct FieldSample {
  std::vector<double> x, y, r, theta;
  std::vector<double> re_psi, im_psi, u, v, g_abs2;
  std::vector<int> mask;  // 1 = masked (excluded)

  std::size_t size() const { return x.size(); }
};

}  // namespace dualwave
