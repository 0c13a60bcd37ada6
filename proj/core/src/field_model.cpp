#include "eocloak/field_model.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace eocloak {

namespace {

using Complex = std::complex<double>;

// Chebyshev T_n(w) and its derivative, valid for complex w. cosh(n acosh w)
// equals T_n(w), so the elliptic harmonics are entire polynomials with no
// branch-cut trouble on the focal segment.
std::pair<Complex, Complex> chebyshev_t(int n, Complex w) {
  Complex tm1 = 1.0, t = w;     // T_0, T_1
  Complex dm1 = 0.0, d = 1.0;   // T_0', T_1'
  if (n == 0) return {tm1, dm1};
  for (int k = 2; k <= n; ++k) {
    const Complex tn = 2.0 * w * t - tm1;
    const Complex dn = 2.0 * t + 2.0 * w * d - dm1;
    tm1 = t;
    t = tn;
    dm1 = d;
    d = dn;
  }
  return {t, d};
}

std::pair<Complex, Complex> holomorphic_part(const HarmonicField& f, Vec2 p) {
  const Complex z(p.x, p.y);
  switch (f.family) {
    case FieldFamily::UniformX:
      return {z, 1.0};
    case FieldFamily::UniformY:
      return {Complex(0.0, -1.0) * z, Complex(0.0, -1.0)};
    case FieldFamily::DiskMultipole: {
      Complex zn = std::pow(z, f.order);
      Complex dz = (f.order == 0) ? Complex(0.0)
                                  : double(f.order) * std::pow(z, f.order - 1);
      if (f.phase == Parity::Sin) {
        // Im z^n = Re(-i z^n)
        zn *= Complex(0.0, -1.0);
        dz *= Complex(0.0, -1.0);
      }
      return {zn, dz};
    }
    case FieldFamily::EllipticCos: {
      auto [t, d] = chebyshev_t(f.order, z / f.focal);
      return {t, d / f.focal};
    }
    case FieldFamily::EllipticSin: {
      auto [t, d] = chebyshev_t(f.order, z / f.focal);
      return {Complex(0.0, -1.0) * t, Complex(0.0, -1.0) * d / f.focal};
    }
  }
  throw std::logic_error("unreachable");
}

} // namespace

double HarmonicField::value(Vec2 p) const {
  return amplitude * holomorphic_part(*this, p).first.real();
}

Vec2 HarmonicField::gradient(Vec2 p) const {
  // For F = Re f with f holomorphic: grad F = (Re f', -Im f').
  const Complex d = holomorphic_part(*this, p).second;
  return {amplitude * d.real(), -amplitude * d.imag()};
}

HarmonicField pressure_partner(const HarmonicField& field) {
  HarmonicField p = field;
  p.amplitude *= 12.0;
  return p;
}

double CloakConfig::lambda() const {
  return (eps_m + eps_s) / (2.0 * (eps_m - eps_s));
}

const CloakConfig& validate_config(const CloakConfig& cfg) {
  if (cfg.eps_m <= 0.0 || cfg.eps_s <= 0.0)
    throw std::invalid_argument("permittivities must be positive");
  if (cfg.eps_s == cfg.eps_m)
    throw std::invalid_argument("eps_s must differ from eps_m (lambda is singular)");
  for (int j = 0; j < cfg.core.n(); ++j)
    if (!cfg.object.contains(cfg.core.node(j)))
      throw std::invalid_argument("core boundary B must lie strictly inside D");
  for (int j = 0; j < cfg.object.n(); ++j)
    if (!cfg.region.contains(cfg.object.node(j)))
      throw std::invalid_argument("object boundary D must lie strictly inside Omega");
  return cfg;
}

} // namespace eocloak
