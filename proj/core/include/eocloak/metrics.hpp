#pragma once

#include <string>
#include <vector>

#include "eocloak/exterior_solver.hpp"

namespace eocloak {

/// Laboratory scales. Defaults match the microchannel setup the model is
/// nondimensionalized against (100 um channel scale, 15 um gap).
struct UnitSystem {
  double gap = 15e-6;             // plate separation h (m)
  double length = 1e-4;           // characteristic length L_c (m)
  double viscosity = 1e-3;        // mu (Pa s)
  double permittivity = 7.08e-10; // medium permittivity (F/m)
  double field = 300.0;           // applied field E (V/m)
  double velocity = 51e-6;        // external velocity u_ext (m/s)

  /// Zeta scale mu*u_ext/(eps_m*E) in volts; derived, never stored.
  double zeta_scale() const;
  /// Pressure scale 12*mu*u_ext*L_c/h^2 in pascals.
  double pressure_scale() const;
  void validate() const;
};

enum class Quantity { Length, Velocity, Pressure, Zeta, Potential };

Quantity parse_quantity(const std::string& kind);

/// Dimensional value of a dimensionless model quantity. Zeta flips sign:
/// the model's zeta0 is the negated potential in units of the zeta scale.
double to_dimensional(double value, Quantity kind, const UnitSystem& units);
double from_dimensional(double value, Quantity kind, const UnitSystem& units);

/// Annular sampling set centered on a boundary curve.
struct SamplingAnnulus {
  Vec2 center;
  double r0 = 0.0;
  double r1 = 0.0;
  int n_radial = 8;
  int n_angular = 64;
};

/// Default set: radii between 1.05 and 3 boundary diameters from the
/// centroid, clear of the near-boundary exclusion band and of the far field.
SamplingAnnulus default_sampling(const Curve& boundary);

std::vector<Vec2> sampling_points(const SamplingAnnulus& set);

struct CloakErrorSummary {
  SamplingAnnulus electric_set; // outside D
  SamplingAnnulus hydro_set;    // outside Omega
  double max_phi_err = 0.0;
  double l2_phi_err = 0.0;
  double max_p_err = 0.0;
  double l2_p_err = 0.0;
  double max_u_err = 0.0; // |u_aver + grad P / 12|
};

CloakErrorSummary cloak_errors(const CloakConfig& cfg, const ElectricSolution& esol,
                               const PressureSolution& psol,
                               const SamplingAnnulus& electric_set,
                               const SamplingAnnulus& hydro_set);

/// Same with default sampling around D and Omega.
CloakErrorSummary cloak_errors(const CloakConfig& cfg, const ElectricSolution& esol,
                               const PressureSolution& psol);

enum class SweepParameter { EpsilonS, Zeta0 };

struct SweepRow {
  double value = 0.0;
  CloakErrorSummary errors;
};

/// One full coupled solve per grid value, in grid order.
std::vector<SweepRow> detuning_sweep(CloakConfig cfg, SweepParameter parameter,
                                     const std::vector<double>& grid);

} // namespace eocloak
