#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "dualwave/grid.hpp"
#include "dualwave/optics.hpp"
#include "dualwave/verifier.hpp"
#include "dualwave/wavefunction.hpp"

namespace dualwave::io {

// 17 significant digits, '.' separator; byte-stable across runs.
std::string fmt(double x);

void write_text(const std::filesystem::path& path, const std::string& content);

void write_field_csv(const FieldSample& sample, const std::filesystem::path& path);

nlohmann::json spec_json(const PotentialSpec& spec);
nlohmann::json grid_json(const Grid2D& grid);
nlohmann::json residual_report_json(const ResidualReport& rep);
nlohmann::json identity_result_json(const IdentityResult& res);
nlohmann::json single_valuedness_json(const SingleValuednessReport& rep);

void write_json(const nlohmann::json& doc, const std::filesystem::path& path);

void write_ray_csv(const RayPath& path, const IndexMap& map,
                   const std::filesystem::path& file);
void write_deflection_csv(const std::vector<DeflectionRow>& rows,
                          const std::filesystem::path& file);

}  // namespace dualwave::io
