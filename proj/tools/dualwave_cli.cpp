// Command-line front end: construct dual-wavefunction fields, run the identity
// verification suite, trace rays through gradient-index profiles, and report.
//
// Exit codes: 0 success, 1 failed identity (verify/report), 2 config error,
// 3 evaluation error.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "dualwave/errors.hpp"
#include "dualwave/io.hpp"
#include "dualwave/optics.hpp"
#include "dualwave/verifier.hpp"
#include "dualwave/wavefunction.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct SpecFlags {
  std::string family = "monomial";
  double n = 0.0;
  double alpha = 0.5;
  double m = 1.0;
  double hbar = 1.0;
  double energy_shift = 0.0;
  double a = 1.0;
  double phi = 3.14159265358979323846;

  void attach(CLI::App* cmd) {
    cmd->add_option("--family", family)
        ->check(CLI::IsMember({"monomial", "eaton-exact", "eaton-approx"}));
    cmd->add_option("--n", n, "monomial exponent");
    cmd->add_option("--alpha", alpha, "potential strength");
    cmd->add_option("--m", m, "mass");
    cmd->add_option("--hbar", hbar);
    cmd->add_option("--energy-shift", energy_shift);
    cmd->add_option("--a", a, "lens radius");
    cmd->add_option("--phi", phi, "refraction angle (eaton-approx)");
  }

  dualwave::PotentialSpec build() const {
    using dualwave::PotentialSpec;
    PotentialSpec s;
    if (family == "eaton-exact")
      s = PotentialSpec::eaton_exact(a, m, hbar);
    else if (family == "eaton-approx")
      s = PotentialSpec::eaton_approx(a, phi, m, hbar);
    else
      s = PotentialSpec::monomial(n, alpha, m, hbar, energy_shift);
    s.validate();
    return s;
  }
};

std::vector<double> parse_csv_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) out.push_back(std::stod(tok));
  return out;
}

dualwave::Grid2D parse_grid(const std::string& text,
                            const dualwave::PotentialSpec& spec) {
  using dualwave::ConfigError;
  const auto colon = text.find(':');
  if (colon == std::string::npos)
    throw ConfigError("grid must be geometry:params, got '" + text + "'");
  const std::string geom = text.substr(0, colon);
  std::string params = text.substr(colon + 1);
  bool log_radial = false;
  if (params.size() >= 4 && params.substr(params.size() - 4) == ",log") {
    log_radial = true;
    params = params.substr(0, params.size() - 4);
  }
  const auto vals = parse_csv_list(params);
  if (geom == "cartesian") {
    if (vals.size() != 6)
      throw ConfigError("cartesian grid wants x0,x1,y0,y1,nx,ny");
    return dualwave::Grid2D::cartesian(vals[0], vals[1], vals[2], vals[3],
                                       static_cast<int>(vals[4]),
                                       static_cast<int>(vals[5]));
  }
  if (geom == "annular") {
    if (vals.size() != 4 && vals.size() != 6)
      throw ConfigError("annular grid wants r0,r1,nr,ntheta[,t0,t1][,log]");
    double t0 = 0.0, t1;
    if (vals.size() == 6) {
      t0 = vals[4];
      t1 = vals[5];
    } else {
      t1 = spec.default_window().period;
    }
    return dualwave::Grid2D::annular(vals[0], vals[1], static_cast<int>(vals[2]),
                                     static_cast<int>(vals[3]), t0, t1,
                                     log_radial);
  }
  throw ConfigError("unknown grid geometry '" + geom + "'");
}

int cmd_construct(const SpecFlags& sf, const std::string& grid_text,
                  const std::string& which, const std::string& out_dir) {
  using namespace dualwave;
  const PotentialSpec spec = sf.build();
  Grid2D grid = parse_grid(grid_text, spec);
  const auto pair = HolomorphicPair::from_spec(spec);

  double domain_radius = 0.0;
  for (const auto& nd : grid.nodes())
    domain_radius = std::max(domain_radius, nd.r);
  const double r_excl =
      pair.singular_at_origin() ? 1e-3 * domain_radius : 0.0;
  grid.apply_domain_mask(spec.default_window(), r_excl, grid.spacing());

  fs::create_directories(out_dir);
  json meta;
  meta["spec"] = io::spec_json(spec);
  meta["grid"] = io::grid_json(grid);
  meta["exclusion_radius"] = r_excl;
  if (spec.logarithmic())
    meta["note"] = "n = -2 dispatched to the logarithmic generator";

  const auto sv = single_valuedness(spec);
  meta["single_valuedness"] = io::single_valuedness_json(sv);

  auto emit = [&](Which w, const std::string& stem, bool multivalued) {
    const auto wf = DualWavefunction::make(spec, w);
    const auto sample = sample_grid(wf, grid);
    io::write_field_csv(sample, fs::path(out_dir) / (stem + ".csv"));
    json fj;
    fj["file"] = stem + ".csv";
    fj["which"] = stem;
    fj["multivalued"] = multivalued;
    meta["fields"].push_back(fj);
  };
  if (which == "u" || which == "both") emit(Which::U, "psi_u", false);
  if (which == "v" || which == "both")
    emit(Which::V, "psi_v", sv.multivalued_v);

  io::write_json(meta, fs::path(out_dir) / "construct_meta.json");
  std::cout << "wrote fields to " << out_dir << "\n";
  return 0;
}

int cmd_verify(const SpecFlags& sf, const std::optional<std::string>& grid_text,
               int resolution, const std::string& negative_control,
               const dualwave::VerifyOptions& base_opt,
               const std::string& out_dir) {
  using namespace dualwave;
  const PotentialSpec spec = sf.build();
  VerifyOptions opt = base_opt;

  if (!negative_control.empty()) {
    const auto colon = negative_control.find(':');
    if (colon == std::string::npos)
      throw ConfigError("--negative-control wants param:pct");
    const std::string param = negative_control.substr(0, colon);
    const double pct = std::stod(negative_control.substr(colon + 1));
    PotentialSpec perturbed = spec;
    if (param == "alpha")
      perturbed.alpha *= 1.0 + pct / 100.0;
    else if (param == "n")
      perturbed.n *= 1.0 + pct / 100.0;
    else if (param == "energy-shift")
      perturbed.energy_shift *= 1.0 + pct / 100.0;
    else
      throw ConfigError("unknown negative-control parameter '" + param + "'");
    opt.residual_spec = perturbed;
  }

  const Grid2D grid = grid_text ? parse_grid(*grid_text, spec)
                                : canonical_grid(spec, resolution);
  const auto results = run_identity_suite(spec, grid, opt);

  fs::create_directories(out_dir);
  json summary;
  summary["spec"] = io::spec_json(spec);
  summary["grid"] = io::grid_json(grid);
  summary["negative_control"] = negative_control;
  summary["tolerances"] = {{"order_lo", opt.order_lo},
                           {"order_hi", opt.order_hi},
                           {"amp_floor_rel", opt.amp_floor_rel},
                           {"roundoff_floor", opt.roundoff_floor}};
  bool all_pass = true;
  std::printf("%-18s %-3s %-12s %-12s %-8s %s\n", "identity", "psi", "l2(fine)",
              "linf(fine)", "order", "status");
  for (const auto& res : results) {
    const json doc = io::identity_result_json(res);
    const std::string stem =
        "identity_" + res.identity + "_" +
        (res.which == Which::U ? std::string("u") : std::string("v"));
    io::write_json(doc, fs::path(out_dir) / (stem + ".json"));
    summary["identities"].push_back(doc);
    all_pass = all_pass && res.pass;
    std::printf("%-18s %-3s %-12.4g %-12.4g %-8.3g %s\n", res.identity.c_str(),
                res.which == Which::U ? "u" : "v", res.fine.l2, res.fine.linf,
                res.fine.observed_order.value_or(
                    std::numeric_limits<double>::quiet_NaN()),
                res.pass ? "pass" : "FAIL");
  }
  summary["all_pass"] = all_pass;
  io::write_json(summary, fs::path(out_dir) / "summary.json");
  return all_pass ? 0 : 1;
}

int cmd_trace(const SpecFlags& sf, const std::string& profile,
              const std::string& impact_text, double step, double r_out,
              const std::string& out_dir) {
  using namespace dualwave;
  IndexMap map;
  if (profile == "eaton")
    map = IndexMap::eaton_exact(sf.a, r_out);
  else if (profile == "eaton-approx")
    map = IndexMap::eaton_approx(sf.a, sf.phi, r_out);
  else if (profile == "monomial")
    map = IndexMap::monomial(sf.alpha, sf.n, sf.m, r_out);
  else if (profile == "from-potential")
    map = IndexMap::from_potential(sf.build(), r_out);
  else
    throw ConfigError("unknown profile '" + profile + "'");

  const auto impact = parse_csv_list(impact_text);
  if (impact.empty()) throw ConfigError("--impact list is empty");

  fs::create_directories(out_dir);
  const auto rows = deflection_curve(map, impact, step);
  io::write_deflection_csv(rows, fs::path(out_dir) / "deflections.csv");

  std::size_t failed = 0;
  for (std::size_t i = 0; i < impact.size(); ++i) {
    if (!rows[i].error.empty()) {
      ++failed;
      continue;
    }
    const double boundary = std::min(map.entrance_radius(), map.r_out);
    RayState start;
    if (std::isfinite(map.entrance_radius()) && map.r_out > map.entrance_radius())
      start = {-map.r_out, impact[i], 1.0, 0.0, 0.0};
    else
      start = {-std::sqrt(std::max(boundary * boundary - impact[i] * impact[i],
                                   0.0)),
               impact[i], 1.0, 0.0, 0.0};
    const auto path = trace_ray(map, start, step);
    char name[64];
    std::snprintf(name, sizeof(name), "ray_%03zu.csv", i);
    io::write_ray_csv(path, map, fs::path(out_dir) / name);
  }
  std::cout << "traced " << (impact.size() - failed) << "/" << impact.size()
            << " rays into " << out_dir << "\n";
  return failed == impact.size() ? 3 : 0;
}

int cmd_report(const std::string& in_dir) {
  const fs::path summary_path = fs::path(in_dir) / "summary.json";
  std::ifstream in(summary_path);
  if (!in)
    throw dualwave::ConfigError("no summary.json under " + in_dir);
  json summary = json::parse(in);
  std::printf("%-18s %-3s %-12s %-12s %-8s %s\n", "identity", "psi", "l2",
              "linf", "order", "status");
  for (const auto& doc : summary.at("identities")) {
    const auto& fine = doc.at("fine");
    const double order = fine.at("observed_order").is_null()
                             ? std::numeric_limits<double>::quiet_NaN()
                             : fine.at("observed_order").get<double>();
    std::printf("%-18s %-3s %-12.4g %-12.4g %-8.3g %s\n",
                doc.at("identity").get<std::string>().c_str(),
                doc.at("which").get<std::string>().c_str(),
                fine.at("l2").get<double>(), fine.at("linf").get<double>(),
                order, doc.at("pass").get<bool>() ? "pass" : "FAIL");
  }
  const bool all_pass = summary.at("all_pass").get<bool>();
  std::printf("overall: %s\n", all_pass ? "pass" : "FAIL");
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dual-wavefunction construction, verification and ray tracing"};
  app.require_subcommand(1);

  SpecFlags sf;
  std::string grid_text = "cartesian:1,2,1,2,65,65";
  std::optional<std::string> verify_grid;
  std::string which = "both";
  std::string out_dir = "out";
  std::string in_dir = "out";
  std::string negative_control;
  std::string profile = "eaton";
  std::string impact_text = "0.5";
  double step = 1e-4;
  double r_out = 4.0;
  int resolution = 65;
  dualwave::VerifyOptions opt;

  auto* construct = app.add_subcommand("construct", "sample dual fields");
  sf.attach(construct);
  construct->add_option("--grid", grid_text);
  construct->add_option("--which", which)
      ->check(CLI::IsMember({"u", "v", "both"}));
  construct->add_option("--out", out_dir);

  auto* verify = app.add_subcommand("verify", "run the identity suite");
  sf.attach(verify);
  verify->add_option("--grid", verify_grid,
                     "override the canonical verification grid");
  verify->add_option("--resolution", resolution);
  verify->add_option("--negative-control", negative_control, "param:pct");
  verify->add_option("--order-lo", opt.order_lo);
  verify->add_option("--order-hi", opt.order_hi);
  verify->add_option("--amp-floor", opt.amp_floor_rel);
  verify->add_option("--roundoff-floor", opt.roundoff_floor);
  verify->add_option("--out", out_dir);

  auto* trace = app.add_subcommand("trace", "trace rays through an index map");
  sf.attach(trace);
  trace->add_option("--profile", profile)
      ->check(CLI::IsMember({"eaton", "eaton-approx", "monomial",
                             "from-potential"}));
  trace->add_option("--impact", impact_text, "comma-separated impact parameters");
  trace->add_option("--step", step);
  trace->add_option("--r-out", r_out);
  trace->add_option("--out", out_dir);

  auto* report = app.add_subcommand("report", "summarize a verify run");
  report->add_option("--in", in_dir);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    if (construct->parsed())
      return cmd_construct(sf, grid_text, which, out_dir);
    if (verify->parsed())
      return cmd_verify(sf, verify_grid, resolution, negative_control, opt,
                        out_dir);
    if (trace->parsed())
      return cmd_trace(sf, profile, impact_text, step, r_out, out_dir);
    if (report->parsed()) return cmd_report(in_dir);
  } catch (const dualwave::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const dualwave::StencilOutOfDomain& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const dualwave::Error& e) {
    std::cerr << "evaluation error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
