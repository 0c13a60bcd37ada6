#pragma once

#include "eocloak/geometry.hpp"

namespace eocloak {

enum class Orientation { X, Y }; // cosh-cos vs sinh-sin background

/// Perfect-cloak design for concentric disks of radii r_o < r_i < r_e.
struct AnnulusDesign {
  double r_o, r_i, r_e;
  int order;
  double eps_ratio; // eps_s / eps_m
  double zeta0;
};

AnnulusDesign annulus_condition(double r_o, double r_i, double r_e, int order);

/// Perfect-cloak design for confocal ellipses of elliptic radii
/// xi_o < xi_i < xi_e.
struct ConfocalDesign {
  double xi_o, xi_i, xi_e;
  int order;
  Orientation orientation;
  double eps_ratio;
  double zeta0;
};

ConfocalDesign confocal_condition(double xi_o, double xi_i, double xi_e, int order,
                                  Orientation orientation);

/// Exterior series solution for concentric disks; phi valid for r > r_i,
/// p for r > r_e. `lambda` is the contrast parameter, `phase` the real or
/// imaginary part of r^n e^{i n theta}.
struct AnnulusSeries {
  double r_o, r_i, r_e;
  int order;
  double lambda;
  double zeta0;
  Parity phase = Parity::Cos;

  /// Coefficient of r^{-n} in phi - H.
  double phi_scatter_coeff() const;
  /// Coefficient of r^{-n} in p - P.
  double p_scatter_coeff() const;
  double phi(Vec2 point) const;
  double p(Vec2 point) const;
};

/// Exterior series solution for confocal ellipses; phi valid for xi > xi_i,
/// p for xi > xi_e.
struct ConfocalSeries {
  double l;
  double xi_o, xi_i, xi_e;
  int order;
  Orientation orientation;
  double lambda;
  double zeta0;

  /// Coefficient of e^{n(xi_i - xi)} in phi - H.
  double phi_scatter_coeff() const;
  /// Coefficient of e^{n(xi_i - xi)} in p - P.
  double p_scatter_coeff() const;
  double phi(Vec2 point) const;
  double p(Vec2 point) const;
};

} // namespace eocloak
