#include "dualwave/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "dualwave/errors.hpp"

namespace dualwave::io {

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

void write_text(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  out << content;
}

void write_field_csv(const FieldSample& sample,
                     const std::filesystem::path& path) {
  std::ostringstream os;
  os << "x,y,r,theta,re_psi,im_psi,u,v,g_abs2,mask\n";
  for (std::size_t i = 0; i < sample.size(); ++i) {
    os << fmt(sample.x[i]) << ',' << fmt(sample.y[i]) << ',' << fmt(sample.r[i])
       << ',' << fmt(sample.theta[i]) << ',' << fmt(sample.re_psi[i]) << ','
       << fmt(sample.im_psi[i]) << ',' << fmt(sample.u[i]) << ','
       << fmt(sample.v[i]) << ',' << fmt(sample.g_abs2[i]) << ','
       << sample.mask[i] << '\n';
  }
  write_text(path, os.str());
}

nlohmann::json spec_json(const PotentialSpec& spec) {
  nlohmann::json j;
  j["family"] = spec.family_name();
  j["n"] = spec.eff_n();
  j["alpha"] = spec.eff_alpha();
  j["m"] = spec.m;
  j["hbar"] = spec.hbar;
  j["energy_shift"] = spec.eff_shift();
  if (spec.family != Family::Monomial) j["a"] = spec.a;
  if (spec.family == Family::EatonApprox) j["phi"] = spec.phi;
  j["form"] = spec.logarithmic() ? "logarithmic" : "power-law";
  return j;
}

nlohmann::json grid_json(const Grid2D& grid) {
  nlohmann::json j;
  j["geometry"] = grid.describe();
  j["spacing"] = grid.spacing();
  j["nodes"] = grid.nodes().size();
  j["unmasked"] = grid.unmasked_count();
  return j;
}

nlohmann::json residual_report_json(const ResidualReport& rep) {
  nlohmann::json j;
  j["name"] = rep.name;
  j["l2"] = rep.l2;
  j["linf"] = rep.linf;
  j["h"] = rep.h;
  if (rep.observed_order)
    j["observed_order"] = *rep.observed_order;
  else
    j["observed_order"] = nullptr;
  j["nodes_used"] = rep.nodes_used;
  j["nodes_excluded"] = rep.nodes_excluded;
  return j;
}

nlohmann::json identity_result_json(const IdentityResult& res) {
  nlohmann::json j;
  j["identity"] = res.identity;
  j["which"] = res.which == Which::U ? "u" : "v";
  j["coarse"] = residual_report_json(res.coarse);
  j["fine"] = residual_report_json(res.fine);
  j["pass"] = res.pass;
  return j;
}

nlohmann::json single_valuedness_json(const SingleValuednessReport& rep) {
  nlohmann::json j;
  j["period_u"] = rep.period_u ? nlohmann::json(*rep.period_u)
                               : nlohmann::json(nullptr);
  j["period_v"] = rep.period_v ? nlohmann::json(*rep.period_v)
                               : nlohmann::json(nullptr);
  j["verified_u"] = rep.verified_u;
  j["verified_v"] = rep.verified_v;
  j["mismatch_u"] = rep.mismatch_u;
  j["mismatch_v"] = rep.mismatch_v;
  j["multivalued_v"] = rep.multivalued_v;
  return j;
}

void write_json(const nlohmann::json& doc, const std::filesystem::path& path) {
  write_text(path, doc.dump(2) + "\n");
}

void write_ray_csv(const RayPath& path, const IndexMap& map,
                   const std::filesystem::path& file) {
  std::ostringstream os;
  os << "s,x,y,dx,dy,n_idx\n";
  const double entrance = map.entrance_radius();
  for (const auto& st : path.samples) {
    const double r = std::hypot(st.x, st.y);
    double n_idx = 1.0;  // vacuum outside the profile region
    if (r <= entrance * (1.0 + 1e-12)) {
      const double n2 = map.index_squared(std::max(r, map.r_excl));
      n_idx = n2 > 0.0 ? std::sqrt(n2) : 0.0;
    }
    os << fmt(st.s) << ',' << fmt(st.x) << ',' << fmt(st.y) << ','
       << fmt(st.dx) << ',' << fmt(st.dy) << ',' << fmt(n_idx) << '\n';
  }
  write_text(file, os.str());
}

void write_deflection_csv(const std::vector<DeflectionRow>& rows,
                          const std::filesystem::path& file) {
  std::ostringstream os;
  os << "b,deflection_rad,termination\n";
  for (const auto& row : rows) {
    os << fmt(row.b) << ',' << fmt(row.deflection) << ','
       << (row.error.empty() ? termination_name(row.termination)
                             : "error:" + row.error)
       << '\n';
  }
  write_text(file, os.str());
}

}  // namespace dualwave::io
