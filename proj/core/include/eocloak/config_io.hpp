#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "eocloak/metrics.hpp"
#include "eocloak/optimizer.hpp"

namespace eocloak {

/// Geometry document: {"kind": "circle|ellipse|flower|kite|peanut|polygon",
/// parameters..., "N": int}. `default_n` applies when "N" is absent.
Curve curve_from_json(const nlohmann::json& j, int default_n);

/// Field document: {"family": str, "n": int, "phase": "cos|sin",
/// "amplitude": float, "focal": float}. "uniform-x" and "disk-multipole"
/// (n = 1, cos) name the same background.
HarmonicField field_from_json(const nlohmann::json& j);

struct RunConfig {
  CloakConfig cloak;
  std::optional<Interval> eps_interval;
  std::optional<Interval> zeta_interval;
  SlipSource slip_source = SlipSource::Exterior;
  int n_nodes = 256;
  nlohmann::json resolved; // config after defaults, as written to the manifest
};

/// Parses the full problem configuration:
/// {"epsilon_m", "epsilon_s", "zeta0", "H": {...}, "P": "auto"|{...},
///  "B": geom, "D": geom, "Omega": geom, "slip_source", intervals}.
/// "P": "auto" pairs the pressure background with H. `n_override` > 0
/// replaces every per-curve node count.
RunConfig parse_config(const nlohmann::json& j, int n_override = 0);
RunConfig load_config(const std::filesystem::path& path, int n_override = 0);

UnitSystem units_from_json(const nlohmann::json& j);
UnitSystem load_units(const std::filesystem::path& path);

/// FNV-1a 64-bit hash of the canonical (sorted-key) JSON dump, as hex.
std::string content_hash(const nlohmann::json& j);

/// Grid CSV with the exact header
/// x,y,region,phi,phi_err,p,p_err,ux,uy and %.12g cells; absent fields stay
/// empty.
void write_grid_csv(std::ostream& out, const GridExport& grid);

/// Sweep CSV: parameter,e_max_phi,l2_phi,e_max_p,l2_p,e_max_u.
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

nlohmann::json to_json(const CloakErrorSummary& s);
nlohmann::json to_json(const OptimizationReport& r);

struct RunManifest {
  std::string subcommand;
  nlohmann::json resolved_config;
  int n_nodes = 0;
  std::vector<std::string> outputs;
  double wall_seconds = 0.0;
  std::string version;
  std::string config_hash;
};

nlohmann::json to_json(const RunManifest& m);

} // namespace eocloak
