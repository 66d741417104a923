#include "dualwave/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>

#include "dualwave/errors.hpp"

namespace dualwave {

namespace {

double pairwise_sum(const std::vector<double>& xs, std::size_t lo,
                    std::size_t hi) {
  if (hi - lo <= 8) {
    double s = 0.0;
    for (std::size_t i = lo; i < hi; ++i) s += xs[i];
    return s;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  return pairwise_sum(xs, lo, mid) + pairwise_sum(xs, mid, hi);
}

struct Stencil {
  ComplexPoint c, xp, xm, yp, ym;
};

bool make_stencil(const GridNode& nd, double h, const BranchWindow* window,
                  bool singular_origin, Stencil& out) {
  out.c = nd.point();
  out.xp = out.c.offset(h, 0.0);
  out.xm = out.c.offset(-h, 0.0);
  out.yp = out.c.offset(0.0, h);
  out.ym = out.c.offset(0.0, -h);
  for (const ComplexPoint* p : {&out.c, &out.xp, &out.xm, &out.yp, &out.ym}) {
    if (window && !window->contains(p->theta())) return false;
    if (singular_origin && p->r() <= 0.0) return false;
  }
  return true;
}

// residual_at: node -> value, or NaN to exclude the node.
template <typename F>
ResidualReport reduce_over_grid(std::string name, const Grid2D& grid, double h,
                                F&& residual_at) {
  ResidualReport rep;
  rep.name = std::move(name);
  rep.h = h;
  std::vector<double> squares;
  squares.reserve(grid.nodes().size());
  for (const auto& nd : grid.nodes()) {
    if (nd.masked) continue;
    const double res = residual_at(nd);
    if (std::isnan(res)) {
      ++rep.nodes_excluded;
      continue;
    }
    rep.linf = std::max(rep.linf, std::abs(res));
    squares.push_back(res * res);
  }
  rep.nodes_used = squares.size();
  if (rep.nodes_used == 0)
    throw StencilOutOfDomain("no usable interior nodes for " + rep.name);
  rep.l2 = std::sqrt(pairwise_sum(squares, 0, squares.size()) /
                     static_cast<double>(rep.nodes_used));
  return rep;
}

struct UVStencil {
  double u[5], v[5];  // c, xp, xm, yp, ym
};

UVStencil eval_uv(const HolomorphicPair& pair, const Stencil& st) {
  UVStencil s;
  const ComplexPoint* pts[5] = {&st.c, &st.xp, &st.xm, &st.yp, &st.ym};
  for (int i = 0; i < 5; ++i) {
    const auto [u, v] = decompose_uv(pair, *pts[i]);
    s.u[i] = u;
    s.v[i] = v;
  }
  return s;
}

double lap(const double f[5], double h) {
  return (f[1] + f[2] + f[3] + f[4] - 4.0 * f[0]) / (h * h);
}

void grad(const double f[5], double h, double& fx, double& fy) {
  fx = (f[1] - f[2]) / (2.0 * h);
  fy = (f[3] - f[4]) / (2.0 * h);
}

double max_amplitude(const DualWavefunction& w, const Grid2D& grid) {
  double amax = 0.0;
  for (const auto& nd : grid.nodes()) {
    if (nd.masked) continue;
    amax = std::max(amax, std::abs(w.amplitude(nd.point())));
  }
  return amax;
}

PotentialSpec residual_potential(const DualWavefunction& w,
                                 const VerifyOptions& opt) {
  return opt.residual_spec.value_or(w.pair.spec);
}

}  // namespace

std::string identity_name(Identity id) {
  switch (id) {
    case Identity::Schrodinger: return "schrodinger";
    case Identity::HamiltonJacobi: return "hamilton_jacobi";
    case Identity::Continuity: return "continuity";
    case Identity::Bohm: return "bohm_potential";
    case Identity::CauchyRiemann: return "cauchy_riemann";
    case Identity::Harmonicity: return "harmonicity";
    case Identity::Orthogonality: return "orthogonality";
    case Identity::GradientNorm: return "gradient_norm";
  }
  return "unknown";
}

const std::vector<Identity>& all_identities() {
  static const std::vector<Identity> ids = {
      Identity::Schrodinger,  Identity::HamiltonJacobi, Identity::Continuity,
      Identity::Bohm,         Identity::CauchyRiemann,  Identity::Harmonicity,
      Identity::Orthogonality, Identity::GradientNorm};
  return ids;
}

ResidualReport schrodinger_residual_fd(const DualWavefunction& w,
                                       const Grid2D& grid, double h,
                                       const VerifyOptions& opt) {
  const auto vs = residual_potential(w, opt);
  const double hbar = w.hbar();
  const double m = w.pair.spec.m;
  const bool singular = w.pair.singular_at_origin();
  return reduce_over_grid(
      "schrodinger", grid, h, [&](const GridNode& nd) -> double {
        Stencil st;
        if (!make_stencil(nd, h, &w.pair.window, singular, st))
          return std::nan("");
        std::complex<double> psi[5];
        const ComplexPoint* pts[5] = {&st.c, &st.xp, &st.xm, &st.yp, &st.ym};
        for (int i = 0; i < 5; ++i) psi[i] = eval_psi(w, *pts[i]);
        const std::complex<double> lap_psi =
            (psi[1] + psi[2] + psi[3] + psi[4] - 4.0 * psi[0]) / (h * h);
        const std::complex<double> res =
            -(hbar * hbar / (2.0 * m)) * lap_psi +
            vs.shifted_potential(nd.r) * psi[0];
        return std::abs(res);
      });
}

ResidualReport schrodinger_residual_of(
    const std::function<std::complex<double>(const ComplexPoint&)>& psi,
    const std::function<double(double, double)>& shifted_potential,
    const Grid2D& grid, double h, double hbar, double m) {
  return reduce_over_grid(
      "schrodinger", grid, h, [&](const GridNode& nd) -> double {
        Stencil st;
        make_stencil(nd, h, nullptr, false, st);
        std::complex<double> f[5];
        const ComplexPoint* pts[5] = {&st.c, &st.xp, &st.xm, &st.yp, &st.ym};
        for (int i = 0; i < 5; ++i) f[i] = psi(*pts[i]);
        const std::complex<double> lap_psi =
            (f[1] + f[2] + f[3] + f[4] - 4.0 * f[0]) / (h * h);
        return std::abs(-(hbar * hbar / (2.0 * m)) * lap_psi +
                        shifted_potential(nd.x, nd.y) * f[0]);
      });
}

ResidualReport bohm_potential_of(
    const std::function<double(const ComplexPoint&)>& amplitude,
    const Grid2D& grid, double h, double amp_floor_rel, double hbar,
    double m) {
  double amax = 0.0;
  for (const auto& nd : grid.nodes())
    if (!nd.masked) amax = std::max(amax, std::abs(amplitude(nd.point())));
  const double floor = amp_floor_rel * amax;
  return reduce_over_grid("bohm_potential", grid, h,
                          [&](const GridNode& nd) -> double {
                            Stencil st;
                            make_stencil(nd, h, nullptr, false, st);
                            double a[5];
                            const ComplexPoint* pts[5] = {&st.c, &st.xp, &st.xm,
                                                          &st.yp, &st.ym};
                            for (int i = 0; i < 5; ++i)
                              a[i] = amplitude(*pts[i]);
                            if (std::abs(a[0]) <= floor) return std::nan("");
                            return -(hbar * hbar / (2.0 * m)) * lap(a, h) /
                                   a[0];
                          });
}

ResidualReport bohm_potential_residual(const DualWavefunction& w,
                                       const Grid2D& grid, double h,
                                       const VerifyOptions& opt) {
  const double hbar = w.hbar();
  const double m = w.pair.spec.m;
  const double floor = opt.amp_floor_rel * max_amplitude(w, grid);
  const bool singular = w.pair.singular_at_origin();
  return reduce_over_grid(
      "bohm_potential", grid, h, [&](const GridNode& nd) -> double {
        Stencil st;
        if (!make_stencil(nd, h, &w.pair.window, singular, st))
          return std::nan("");
        const auto uv = eval_uv(w.pair, st);
        const double* a = w.which == Which::U ? uv.u : uv.v;
        if (std::abs(a[0]) <= floor) return std::nan("");
        return -(hbar * hbar / (2.0 * m)) * lap(a, h) / a[0];
      });
}

std::pair<ResidualReport, ResidualReport> madelung_residuals(
    const DualWavefunction& w, const Grid2D& grid, double h,
    const VerifyOptions& opt) {
  auto hj = identity_residual(Identity::HamiltonJacobi, w, grid, h, opt);
  auto cont = identity_residual(Identity::Continuity, w, grid, h, opt);
  return {hj, cont};
}

ResidualReport identity_residual(Identity id, const DualWavefunction& w,
                                 const Grid2D& grid, double h,
                                 const VerifyOptions& opt) {
  if (id == Identity::Schrodinger) return schrodinger_residual_fd(w, grid, h, opt);
  if (id == Identity::Bohm) return bohm_potential_residual(w, grid, h, opt);

  const auto vs = residual_potential(w, opt);
  const double hbar = w.hbar();
  const double m = w.pair.spec.m;
  const bool singular = w.pair.singular_at_origin();
  const double floor =
      id == Identity::HamiltonJacobi ? opt.amp_floor_rel * max_amplitude(w, grid)
                                     : 0.0;

  return reduce_over_grid(
      identity_name(id), grid, h, [&](const GridNode& nd) -> double {
        Stencil st;
        if (!make_stencil(nd, h, &w.pair.window, singular, st))
          return std::nan("");
        const auto uv = eval_uv(w.pair, st);
        const double* a = w.which == Which::U ? uv.u : uv.v;
        const double* s = w.which == Which::U ? uv.v : uv.u;
        double ux, uy, vx, vy;
        switch (id) {
          case Identity::HamiltonJacobi: {
            if (std::abs(a[0]) <= floor) return std::nan("");
            const double q = -(hbar * hbar / (2.0 * m)) * lap(a, h) / a[0];
            double sx, sy;
            grad(s, h, sx, sy);
            return (sx * sx + sy * sy) / (2.0 * m) + q +
                   vs.shifted_potential(nd.r);
          }
          case Identity::Continuity: {
            double ax, ay, sx, sy;
            grad(a, h, ax, ay);
            grad(s, h, sx, sy);
            return (2.0 * a[0] * (ax * sx + ay * sy) +
                    a[0] * a[0] * lap(s, h)) /
                   m;
          }
          case Identity::CauchyRiemann:
            grad(uv.u, h, ux, uy);
            grad(uv.v, h, vx, vy);
            return std::max(std::abs(ux - vy), std::abs(uy + vx));
          case Identity::Harmonicity:
            return std::max(std::abs(lap(uv.u, h)), std::abs(lap(uv.v, h)));
          case Identity::Orthogonality:
            grad(uv.u, h, ux, uy);
            grad(uv.v, h, vx, vy);
            return ux * vx + uy * vy;
          case Identity::GradientNorm:
            grad(uv.u, h, ux, uy);
            grad(uv.v, h, vx, vy);
            return (ux * ux + uy * uy) - (vx * vx + vy * vy);
          default:
            return std::nan("");
        }
      });
}

double schrodinger_residual_analytic(const DualWavefunction& w,
                                     const ComplexPoint& p) {
  const auto& spec = w.pair.spec;
  const double hbar = spec.hbar;
  const double m = spec.m;
  const auto psi = eval_psi(w, p);
  const double g2 = std::norm(eval_g(w.pair, p));
  // Closed-form Laplacian: nabla^2 psi = -(1/hbar^2) g gbar psi.
  const std::complex<double> kinetic =
      -(hbar * hbar / (2.0 * m)) * (-g2 / (hbar * hbar)) * psi;
  const std::complex<double> potential = spec.shifted_potential(p.r()) * psi;
  const double scale = std::abs(kinetic) + std::abs(potential);
  if (scale == 0.0) return 0.0;
  return std::abs(kinetic + potential) / scale;
}

ResidualReport log_harmonicity_of(
    const std::function<double(double, double)>& shifted_potential,
    const Grid2D& grid, double h) {
  return reduce_over_grid(
      "log_potential_harmonicity", grid, h, [&](const GridNode& nd) -> double {
        Stencil st;
        make_stencil(nd, h, nullptr, true, st);
        double lv[5];
        const ComplexPoint* pts[5] = {&st.c, &st.xp, &st.xm, &st.yp, &st.ym};
        for (int i = 0; i < 5; ++i) {
          const double v = shifted_potential(pts[i]->x(), pts[i]->y());
          if (v >= 0.0)
            throw SignViolation("V - E must be strictly negative on the grid");
          lv[i] = std::log(-v);
        }
        return lap(lv, h);
      });
}

ResidualReport log_potential_harmonicity(const PotentialSpec& spec,
                                         const Grid2D& grid, double h) {
  return log_harmonicity_of(
      [&spec](double x, double y) {
        return spec.shifted_potential(std::hypot(x, y));
      },
      grid, h);
}

double observed_order(const ResidualReport& coarse, const ResidualReport& fine) {
  if (coarse.l2 <= 0.0 || fine.l2 <= 0.0)
    return std::numeric_limits<double>::quiet_NaN();
  return std::log2(coarse.l2 / fine.l2);
}

Grid2D canonical_grid(const PotentialSpec& spec, int n_base) {
  const double ne = spec.eff_n();
  if (ne == 0.0) return Grid2D::cartesian(1.0, 2.0, 1.0, 2.0, n_base, n_base);
  if (ne > 0.0)
    return Grid2D::cartesian(1.0, 2.0, 0.1, 0.45, n_base, n_base);
  if (spec.logarithmic())
    return Grid2D::annular(1.2, 3.0, n_base, n_base, 0.3, 2.8);
  return Grid2D::annular(0.5, 2.0, n_base, n_base, 0.3, 2.8);
}

std::vector<IdentityResult> run_identity_suite(const PotentialSpec& spec,
                                               const Grid2D& grid,
                                               const VerifyOptions& opt) {
  const BranchWindow window = spec.default_window();
  const auto pair = HolomorphicPair::from_spec(spec);

  double domain_radius = 0.0;
  for (const auto& nd : grid.nodes())
    domain_radius = std::max(domain_radius, nd.r);
  const double r_excl =
      pair.singular_at_origin() ? opt.exclusion_rel * domain_radius : 0.0;

  Grid2D coarse = grid;
  const double hc = coarse.spacing();
  coarse.apply_domain_mask(window, r_excl, hc);
  Grid2D fine = grid.refined();
  const double hf = fine.spacing();
  fine.apply_domain_mask(window, r_excl, hf);
  if (coarse.unmasked_count() == 0 || fine.unmasked_count() == 0)
    throw StencilOutOfDomain("verification grid too coarse for its window");

  std::vector<IdentityResult> out;
  for (Which which : {Which::U, Which::V}) {
    const auto w = DualWavefunction::make(spec, which);
    for (Identity id : all_identities()) {
      IdentityResult res;
      res.identity = identity_name(id);
      res.which = which;
      res.coarse = identity_residual(id, w, coarse, hc, opt);
      res.fine = identity_residual(id, w, fine, hf, opt);
      const double order = observed_order(res.coarse, res.fine);
      if (!std::isnan(order)) res.fine.observed_order = order;
      const bool at_floor = std::max(res.coarse.linf, res.fine.linf) <=
                            opt.roundoff_floor;
      res.pass = at_floor || (!std::isnan(order) && order >= opt.order_lo &&
                              order <= opt.order_hi);
      out.push_back(std::move(res));
    }
  }
  return out;
}

}  // namespace dualwave
