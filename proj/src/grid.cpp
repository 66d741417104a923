#include "dualwave/grid.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace dualwave {

Grid2D Grid2D::cartesian(double x0, double x1, double y0, double y1, int nx,
                         int ny) {
  if (nx < 5 || ny < 5)
    throw ConfigError("cartesian grid needs nx, ny >= 5 for interior stencils");
  if (x1 <= x0 || y1 <= y0) throw ConfigError("degenerate cartesian extent");
  Grid2D g;
  g.geometry_ = Geometry::Cartesian;
  g.x0 = x0;
  g.x1 = x1;
  g.y0 = y0;
  g.y1 = y1;
  g.nx = nx;
  g.ny = ny;
  g.build();
  return g;
}

Grid2D Grid2D::annular(double r0, double r1, int nr, int ntheta, double theta_a,
                       double theta_b, bool log_radial) {
  if (nr < 5 || ntheta < 5)
    throw ConfigError("annular grid needs nr, ntheta >= 5 for interior stencils");
  if (r0 <= 0.0 || r1 <= r0) throw ConfigError("degenerate annular extent");
  if (theta_b <= theta_a) throw ConfigError("degenerate angular extent");
  Grid2D g;
  g.geometry_ = Geometry::Annular;
  g.r0 = r0;
  g.r1 = r1;
  g.nr = nr;
  g.ntheta = ntheta;
  g.theta_a = theta_a;
  g.theta_b = theta_b;
  g.log_radial = log_radial;
  g.build();
  return g;
}

void Grid2D::build() {
  nodes_.clear();
  if (geometry_ == Geometry::Cartesian) {
    const double dx = (x1 - x0) / (nx - 1);
    const double dy = (y1 - y0) / (ny - 1);
    nodes_.reserve(static_cast<std::size_t>(nx) * ny);
    for (int j = 0; j < ny; ++j) {
      for (int i = 0; i < nx; ++i) {
        GridNode nd;
        nd.x = x0 + i * dx;
        nd.y = y0 + j * dy;
        nd.r = std::hypot(nd.x, nd.y);
        nd.theta = std::atan2(nd.y, nd.x);
        nodes_.push_back(nd);
      }
    }
    spacing_ = std::min(dx, dy);
  } else {
    const double dtheta = (theta_b - theta_a) / (ntheta - 1);
    nodes_.reserve(static_cast<std::size_t>(nr) * ntheta);
    for (int j = 0; j < ntheta; ++j) {
      for (int i = 0; i < nr; ++i) {
        GridNode nd;
        if (log_radial) {
          const double t = static_cast<double>(i) / (nr - 1);
          nd.r = r0 * std::pow(r1 / r0, t);
        } else {
          nd.r = r0 + (r1 - r0) * i / (nr - 1);
        }
        nd.theta = theta_a + j * dtheta;
        nd.x = nd.r * std::cos(nd.theta);
        nd.y = nd.r * std::sin(nd.theta);
        nodes_.push_back(nd);
      }
    }
    const double min_dr = log_radial
                              ? r0 * (std::pow(r1 / r0, 1.0 / (nr - 1)) - 1.0)
                              : (r1 - r0) / (nr - 1);
    spacing_ = std::min(min_dr, r0 * dtheta);
  }
}

Grid2D Grid2D::refined() const {
  Grid2D g = *this;
  if (geometry_ == Geometry::Cartesian) {
    g.nx = 2 * nx - 1;
    g.ny = 2 * ny - 1;
  } else {
    g.nr = 2 * nr - 1;
    g.ntheta = 2 * ntheta - 1;
  }
  g.build();
  // Log-radial steps do not halve exactly; pin the stencil scale anyway.
  g.spacing_ = spacing_ / 2.0;
  return g;
}

void Grid2D::apply_domain_mask(const BranchWindow& window, double r_excl,
                               double margin) {
  for (auto& nd : nodes_) {
    double theta = nd.theta;
    // Cartesian atan2 angles may sit one sheet below a window like [0, 4*pi).
    if (geometry_ == Geometry::Cartesian && theta < window.theta0)
      theta += 2.0 * std::numbers::pi;
    nd.theta = theta;
    const bool angular_ok = theta >= window.theta0 + margin / std::max(nd.r, 1e-300) &&
                            theta <= window.hi() - margin / std::max(nd.r, 1e-300);
    const bool radial_ok = nd.r >= r_excl + margin;
    nd.masked = !(angular_ok && radial_ok);
  }
}

std::size_t Grid2D::unmasked_count() const {
  return static_cast<std::size_t>(
      std::count_if(nodes_.begin(), nodes_.end(),
                    [](const GridNode& nd) { return !nd.masked; }));
}

std::string Grid2D::describe() const {
  std::ostringstream os;
  if (geometry_ == Geometry::Cartesian)
    os << "cartesian:" << x0 << "," << x1 << "," << y0 << "," << y1 << ","
       << nx << "," << ny;
  else
    os << "annular:" << r0 << "," << r1 << "," << nr << "," << ntheta << ","
       << theta_a << "," << theta_b << (log_radial ? ",log" : "");
  return os.str();
}

}  // namespace dualwave
