#pragma once

#include <cmath>
#include <numbers>

namespace dualwave {

// Half-open angular window [theta0, theta0 + period). Periods wider than 2*pi are
// legal: the monomial families live on multi-sheet fundamental domains.
struct BranchWindow {
  double theta0 = 0.0;
  double period = 2.0 * std::numbers::pi;

  double hi() const { return theta0 + period; }
  bool contains(double theta) const { return theta >= theta0 && theta < hi(); }

  BranchWindow widened(double factor) const { return {theta0, period * factor}; }
};

// A sample point carrying both Cartesian and polar coordinates. The angle is kept
// explicitly (not recomputed from x, y) so points on sheets beyond (-pi, pi] keep
// their branch.
class ComplexPoint {
 public:
  static ComplexPoint from_polar(double r, double theta) {
    ComplexPoint p;
    p.r_ = r;
    p.theta_ = theta;
    p.x_ = r * std::cos(theta);
    p.y_ = r * std::sin(theta);
    return p;
  }

  static ComplexPoint from_cartesian(double x, double y) {
    ComplexPoint p;
    p.x_ = x;
    p.y_ = y;
    p.r_ = std::hypot(x, y);
    p.theta_ = std::atan2(y, x);
    return p;
  }

  // Shift by (dx, dy), tracking the branch of the source point: the angle moves
  // by the principal-value increment, never snapping back to (-pi, pi].
  ComplexPoint offset(double dx, double dy) const {
    const double x = x_ + dx;
    const double y = y_ + dy;
    double dtheta = std::atan2(y, x) - std::atan2(y_, x_);
    const double two_pi = 2.0 * std::numbers::pi;
    if (dtheta > std::numbers::pi) dtheta -= two_pi;
    if (dtheta < -std::numbers::pi) dtheta += two_pi;
    return from_polar(std::hypot(x, y), theta_ + dtheta);
  }

  double x() const { return x_; }
  double y() const { return y_; }
  double r() const { return r_; }
  double theta() const { return theta_; }

 private:
  double x_ = 0.0, y_ = 0.0, r_ = 0.0, theta_ = 0.0;
};

}  // namespace dualwave
