#pragma once

#include <string>

#include "eocloak/geometry.hpp"

namespace eocloak {

enum class FieldFamily {
  UniformX,      // H = x (same as disk multipole n=1, cos phase)
  UniformY,      // H = y
  DiskMultipole, // Re/Im of (x + i y)^n
  EllipticCos,   // cosh(n xi) cos(n eta) = Re T_n(z/l)
  EllipticSin,   // sinh(n xi) sin(n eta) = Im T_n(z/l)
};

/// Entire harmonic background field (electric potential H or pressure P).
struct HarmonicField {
  FieldFamily family = FieldFamily::UniformX;
  int order = 1;              // n for multipole / elliptic families
  Parity phase = Parity::Cos; // for DiskMultipole
  double amplitude = 1.0;
  double focal = 1.0;         // l for elliptic families

  double value(Vec2 p) const;
  Vec2 gradient(Vec2 p) const;
};

/// The matched pressure background P = 12 H (same family, amplitude x 12).
HarmonicField pressure_partner(const HarmonicField& field);

/// Full problem configuration: nested boundaries B in D in Omega, material
/// scalars and background fields.
struct CloakConfig {
  Curve core;   // B, boundary Gamma_o
  Curve object; // D, boundary Gamma_i
  Curve region; // Omega, boundary Gamma_e
  double eps_m = 1.0;
  double eps_s = 2.0;
  double zeta0 = 0.0;
  HarmonicField H;
  HarmonicField P;

  /// Contrast parameter (eps_m + eps_s) / (2 (eps_m - eps_s)).
  double lambda() const;
};

/// Checks nesting, positivity and eps_s != eps_m; throws on violation.
const CloakConfig& validate_config(const CloakConfig& cfg);

} // namespace eocloak
