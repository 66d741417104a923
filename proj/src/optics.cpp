#include "dualwave/optics.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "dualwave/errors.hpp"

namespace dualwave {

namespace {

double wrap_pi(double angle) {
  const double two_pi = 2.0 * std::numbers::pi;
  while (angle > std::numbers::pi) angle -= two_pi;
  while (angle < -std::numbers::pi) angle += two_pi;
  return angle;
}

struct Vec4 {
  double x, y, dx, dy;
};

Vec4 operator+(const Vec4& a, const Vec4& b) {
  return {a.x + b.x, a.y + b.y, a.dx + b.dx, a.dy + b.dy};
}
Vec4 operator*(double c, const Vec4& a) { return {c * a.x, c * a.y, c * a.dx, c * a.dy}; }

}  // namespace

IndexMap IndexMap::from_potential(const PotentialSpec& spec, double r_out) {
  IndexMap m;
  m.kind = ProfileKind::FromPotential;
  m.spec = spec;
  m.r_out = r_out;
  return m;
}

IndexMap IndexMap::eaton_exact(double a, double r_out) {
  IndexMap m;
  m.kind = ProfileKind::EatonExact;
  m.spec = PotentialSpec::eaton_exact(a);
  m.r_out = r_out;
  m.r_excl = 1e-4 * a;
  return m;
}

IndexMap IndexMap::eaton_approx(double a, double phi, double r_out) {
  IndexMap m;
  m.kind = ProfileKind::EatonApprox;
  m.spec = PotentialSpec::eaton_approx(a, phi);
  m.r_out = r_out;
  m.r_excl = 1e-4 * a;
  return m;
}

IndexMap IndexMap::monomial(double alpha, double n, double mass, double r_out) {
  IndexMap m;
  m.kind = ProfileKind::Monomial;
  m.spec = PotentialSpec::monomial(n, alpha, mass);
  m.r_out = r_out;
  return m;
}

double IndexMap::index_squared(double r) const {
  switch (kind) {
    case ProfileKind::EatonExact:
      return 2.0 * spec.a / r - 1.0;
    case ProfileKind::EatonApprox: {
      const double q = spec.phi / (spec.phi + std::numbers::pi);
      return std::pow(2.0 * spec.a / r - 1.0, 2.0 * q);
    }
    default:
      // -2m (V - E); monomial and FromPotential share the closed form.
      return -2.0 * spec.m * spec.shifted_potential(r);
  }
}

double IndexMap::d_index_squared_dr(double r) const {
  switch (kind) {
    case ProfileKind::EatonExact:
      return -2.0 * spec.a / (r * r);
    case ProfileKind::EatonApprox: {
      const double q = spec.phi / (spec.phi + std::numbers::pi);
      return 2.0 * q * std::pow(2.0 * spec.a / r - 1.0, 2.0 * q - 1.0) *
             (-2.0 * spec.a / (r * r));
    }
    default: {
      const double ne = spec.eff_n();
      return -2.0 * spec.m * (-spec.eff_alpha() * ne * std::pow(r, ne - 1.0));
    }
  }
}

double IndexMap::entrance_radius() const {
  if (kind == ProfileKind::EatonExact || kind == ProfileKind::EatonApprox)
    return spec.a;
  return std::numeric_limits<double>::infinity();
}

double index_at(const IndexMap& map, double x, double y) {
  const double r = std::hypot(x, y);
  if (r < map.r_excl) throw OutOfDomain("r below the exclusion radius");
  if ((map.kind == ProfileKind::EatonExact ||
       map.kind == ProfileKind::EatonApprox) &&
      r > 2.0 * map.spec.a)
    throw OutOfDomain("Eaton profile undefined beyond r = 2a");
  if (r > map.r_out) throw OutOfDomain("r beyond the outer domain radius");
  const double n2 = map.index_squared(r);
  if (n2 < 0.0)
    throw NegativeIndexSquared("index squared negative: V - E > 0");
  return std::sqrt(n2);
}

std::string termination_name(Termination t) {
  switch (t) {
    case Termination::ExitedDomain: return "exited";
    case Termination::MaxSteps: return "max-steps";
    case Termination::HitSingularity: return "hit-singularity";
  }
  return "unknown";
}

namespace {

Vec4 ray_rhs(const IndexMap& map, const Vec4& v) {
  const double r = std::hypot(v.x, v.y);
  const double n2 = map.index_squared(r);
  const double half_dn2 = 0.5 * map.d_index_squared_dr(r);
  const double gx = half_dn2 * v.x / r;
  const double gy = half_dn2 * v.y / r;
  const double dot = v.dx * gx + v.dy * gy;
  return {v.dx, v.dy, (gx - dot * v.dx) / n2, (gy - dot * v.dy) / n2};
}

Vec4 rk4_step(const IndexMap& map, const Vec4& v, double h) {
  const Vec4 k1 = ray_rhs(map, v);
  const Vec4 k2 = ray_rhs(map, v + (h / 2.0) * k1);
  const Vec4 k3 = ray_rhs(map, v + (h / 2.0) * k2);
  const Vec4 k4 = ray_rhs(map, v + h * k3);
  return v + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

}  // namespace

RayPath trace_ray(const IndexMap& map, RayState start, double step,
                  long max_steps) {
  if (step <= 0.0) throw ConfigError("step must be positive");
  RayPath path;

  const double dnorm = std::hypot(start.dx, start.dy);
  if (dnorm == 0.0) throw ConfigError("zero ray direction");
  Vec4 v{start.x, start.y, start.dx / dnorm, start.dy / dnorm};
  double s = start.s;
  path.samples.push_back({v.x, v.y, v.dx, v.dy, s});

  const double boundary = std::min(map.entrance_radius(), map.r_out);
  double r = std::hypot(v.x, v.y);

  // Vacuum outside the profile: advance analytically to the boundary circle.
  if (r > boundary * (1.0 + 1e-12)) {
    const double pd = v.x * v.dx + v.y * v.dy;
    const double disc = pd * pd - (r * r - boundary * boundary);
    if (disc < 0.0) throw OutOfDomain("ray misses the profile region");
    const double t = -pd - std::sqrt(disc);
    if (t < 0.0) throw OutOfDomain("ray points away from the profile region");
    v.x += t * v.dx;
    v.y += t * v.dy;
    s += t;
    path.samples.push_back({v.x, v.y, v.dx, v.dy, s});
  }

  double angle = std::atan2(v.dy, v.dx);
  const double inv0 =
      std::sqrt(std::max(map.index_squared(std::hypot(v.x, v.y)), 0.0)) *
      (v.x * v.dy - v.y * v.dx);
  const double inv_scale = std::max(std::abs(inv0), 1e-12);
  path.termination = Termination::MaxSteps;

  for (long k = 0; k < max_steps; ++k) {
    Vec4 next = rk4_step(map, v, step);
    double h_used = step;
    double r_next = std::hypot(next.x, next.y);

    if (r_next > boundary) {
      // Land on the boundary circle with a bisected partial step.
      double lo = 0.0, hi = step;
      for (int it = 0; it < 80 && hi - lo > 1e-16 * step; ++it) {
        const double mid = 0.5 * (lo + hi);
        const Vec4 trial = rk4_step(map, v, mid);
        (std::hypot(trial.x, trial.y) > boundary ? hi : lo) = mid;
      }
      h_used = 0.5 * (lo + hi);
      next = rk4_step(map, v, h_used);
      r_next = std::hypot(next.x, next.y);
      path.termination = Termination::ExitedDomain;
    }

    const double angle_next = std::atan2(next.dy, next.dx);
    path.deflection += wrap_pi(angle_next - angle);
    angle = angle_next;

    const double dn = std::hypot(next.dx, next.dy);
    next.dx /= dn;
    next.dy /= dn;
    v = next;
    s += h_used;
    path.samples.push_back({v.x, v.y, v.dx, v.dy, s});

    const double inv = std::sqrt(std::max(map.index_squared(r_next), 0.0)) *
                       (v.x * v.dy - v.y * v.dx);
    path.bouguer_drift =
        std::max(path.bouguer_drift, std::abs(inv - inv0) / inv_scale);

    if (path.termination == Termination::ExitedDomain) break;
    if (r_next < map.r_excl) {
      path.termination = Termination::HitSingularity;
      break;
    }
  }
  return path;
}

std::vector<DeflectionRow> deflection_curve(const IndexMap& map,
                                            std::span<const double> impact,
                                            double step, long max_steps) {
  std::vector<DeflectionRow> rows;
  rows.reserve(impact.size());
  const double boundary = std::min(map.entrance_radius(), map.r_out);
  for (double b : impact) {
    DeflectionRow row;
    row.b = b;
    try {
      RayState start;
      if (std::isfinite(map.entrance_radius()) &&
          map.r_out > map.entrance_radius()) {
        start = {-map.r_out, b, 1.0, 0.0, 0.0};
      } else {
        // No vacuum shell: launch from the outer domain circle.
        const double x0 = -std::sqrt(std::max(boundary * boundary - b * b, 0.0));
        start = {x0, b, 1.0, 0.0, 0.0};
      }
      const RayPath path = trace_ray(map, start, step, max_steps);
      row.deflection = path.deflection;
      row.termination = path.termination;
    } catch (const Error& e) {
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace dualwave
