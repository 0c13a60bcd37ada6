#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eocloak/field_model.hpp"
#include "eocloak/layerpot.hpp"

namespace eocloak {

/// Solution of the electric transmission problem: phi = H + S_{Gamma_o}[phi_o]
/// + S_{Gamma_i}[phi_i] outside the core.
struct ElectricSolution {
  Eigen::VectorXd phi_o; // density on Gamma_o
  Eigen::VectorXd phi_i; // density on Gamma_i
  // Cached normal-derivative traces of the full phi:
  Eigen::VectorXd dphi_dnu_i_outer; // on Gamma_i, exterior side
  Eigen::VectorXd dphi_dnu_i_inner; // on Gamma_i, shell side
  Eigen::VectorXd dphi_dnu_e;       // on Gamma_e (smooth there)
};

ElectricSolution solve_electric(const CloakConfig& cfg);

/// Pressure problem: p = P + S_{Gamma_i}[psi_i] + S_{Gamma_e}[psi_e] outside D.
struct PressureSolution {
  Eigen::VectorXd psi_i;
  Eigen::VectorXd psi_e;
};

PressureSolution solve_pressure(const CloakConfig& cfg, const ElectricSolution& esol);

enum class Region { Core, Shell, CloakAnnulus, Exterior };
std::string to_string(Region r);

struct FieldSample {
  Vec2 point;
  Region region = Region::Exterior;
  bool near_boundary = false; // inside the exclusion band of some curve
  std::optional<double> phi;  // absent inside the core
  std::optional<Vec2> grad_phi;
  std::optional<double> p;    // absent inside D
  std::optional<Vec2> grad_p;
  std::optional<Vec2> u_aver; // absent inside D
};

std::vector<FieldSample> eval_fields(const CloakConfig& cfg, const ElectricSolution& esol,
                                     const PressureSolution& psol,
                                     const std::vector<Vec2>& points);

struct GridWindow {
  double x0, x1, y0, y1;
};

struct GridRow {
  double x, y;
  Region region;
  bool excluded; // near-boundary: field cells left empty on export
  std::optional<double> phi, phi_err, p, p_err, ux, uy;
};

struct GridExport {
  GridWindow window;
  int nx = 0, ny = 0;
  double exclusion_band = 0.0; // band factor in node spacings
  std::vector<GridRow> rows;
};

GridExport export_grid(const CloakConfig& cfg, const ElectricSolution& esol,
                       const PressureSolution& psol, const GridWindow& window,
                       int nx, int ny);

} // namespace eocloak
