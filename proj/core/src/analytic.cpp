#include "eocloak/analytic.hpp"

#include <cmath>
#include <stdexcept>

namespace eocloak {

namespace {

void check_radii(double a, double b, double c, int order) {
  if (!(0.0 < a && a < b && b < c))
    throw std::invalid_argument("radii must satisfy 0 < inner < middle < outer");
  if (order < 1) throw std::invalid_argument("harmonic order must be >= 1");
}

} // namespace

AnnulusDesign annulus_condition(double r_o, double r_i, double r_e, int order) {
  check_radii(r_o, r_i, r_e, order);
  const double po = std::pow(r_o, 2 * order);
  const double pi_ = std::pow(r_i, 2 * order);
  const double pe = std::pow(r_e, 2 * order);
  return {r_o, r_i, r_e, order, (pi_ + po) / (pi_ - po), 2.0 * pi_ / (pe - pi_)};
}

ConfocalDesign confocal_condition(double xi_o, double xi_i, double xi_e, int order,
                                  Orientation orientation) {
  check_radii(xi_o, xi_i, xi_e, order);
  const double a = order * xi_o, b = order * xi_i, c = order * xi_e;
  double eps, zeta;
  if (orientation == Orientation::X) {
    eps = std::tanh(b) / std::tanh(b - a);
    zeta = std::sinh(b) / (std::sinh(c) * std::cosh(c - b) - std::sinh(b));
  } else {
    eps = 1.0 / (std::tanh(b) * std::tanh(b - a));
    zeta = std::cosh(b) / (std::cosh(c) * std::cosh(c - b) - std::cosh(b));
  }
  return {xi_o, xi_i, xi_e, order, orientation, eps, zeta};
}

double AnnulusSeries::phi_scatter_coeff() const {
  const double po = std::pow(r_o, 2 * order);
  const double pi_ = std::pow(r_i, 2 * order);
  return (2.0 * lambda * po + pi_) * pi_ / (2.0 * lambda * pi_ + po);
}

double AnnulusSeries::p_scatter_coeff() const {
  const double u = std::pow(r_i, 2 * order);
  const double v = std::pow(r_e, 2 * order);
  // The slip carries the detuned electric scattering on both boundaries:
  // d(phi)/dr is proportional to 1 - c / r^{2n} with c the phi coefficient.
  const double c = phi_scatter_coeff();
  const double slip_i = 1.0 - c / u;
  const double slip_e = 1.0 - c / v;
  return 12.0 * u * (1.0 + zeta0 * slip_i) - 6.0 * (u + v) * zeta0 * slip_e;
}

double AnnulusSeries::phi(Vec2 point) const {
  const double r = norm(point);
  if (r <= r_i) throw std::invalid_argument("phi series valid only for r > r_i");
  const double th = std::atan2(point.y, point.x);
  const double trig = (phase == Parity::Cos) ? std::cos(order * th) : std::sin(order * th);
  return (std::pow(r, order) + phi_scatter_coeff() * std::pow(r, -order)) * trig;
}

double AnnulusSeries::p(Vec2 point) const {
  const double r = norm(point);
  if (r <= r_e) throw std::invalid_argument("p series valid only for r > r_e");
  const double th = std::atan2(point.y, point.x);
  const double trig = (phase == Parity::Cos) ? std::cos(order * th) : std::sin(order * th);
  return (12.0 * std::pow(r, order) + p_scatter_coeff() * std::pow(r, -order)) * trig;
}

double ConfocalSeries::phi_scatter_coeff() const {
  const double a = order * xi_o, b = order * xi_i;
  const double e2a = std::exp(2.0 * a), e2b = std::exp(2.0 * b);
  const double denom = 2.0 * lambda * e2b + e2a;
  if (orientation == Orientation::X) {
    return ((1.0 + 2.0 * lambda) * std::sinh(a) * std::exp(a + b) -
            std::cosh(b) * (e2a - e2b)) / denom;
  }
  return ((1.0 + 2.0 * lambda) * std::cosh(a) * std::exp(a + b) -
          std::sinh(b) * (e2a - e2b)) / denom;
}

double ConfocalSeries::p_scatter_coeff() const {
  const double b = order * xi_i, g = order * xi_e;
  const bool cosine = (orientation == Orientation::X);
  // Slip values d(phi)/dxi / n on the two boundaries, including the detuned
  // electric scattering term c e^{n(xi_i - xi)}.
  const double c = phi_scatter_coeff();
  const double slip_i = (cosine ? std::sinh(b) : std::cosh(b)) - c;
  const double slip_e = (cosine ? std::sinh(g) : std::cosh(g)) - c * std::exp(b - g);
  const double alpha = 6.0 - 6.0 * zeta0 * slip_e * std::exp(-g);
  const double beta = std::exp(b) * (alpha * std::exp(b) + 12.0 * zeta0 * slip_i);
  const double background = cosine ? -6.0 : 6.0; // e^{-n xi} part of 12 cosh / 12 sinh
  return std::exp(-b) * (beta + background - 6.0 * zeta0 * slip_e * std::exp(g));
}

double ConfocalSeries::phi(Vec2 point) const {
  const auto [xi, eta] = EllipticCoords{l}.from_cartesian(point);
  if (xi <= xi_i) throw std::invalid_argument("phi series valid only for xi > xi_i");
  const double nx = order * xi, ne = order * eta;
  const double decay = std::exp(order * xi_i - nx);
  if (orientation == Orientation::X)
    return (std::cosh(nx) + phi_scatter_coeff() * decay) * std::cos(ne);
  return (std::sinh(nx) + phi_scatter_coeff() * decay) * std::sin(ne);
}

double ConfocalSeries::p(Vec2 point) const {
  const auto [xi, eta] = EllipticCoords{l}.from_cartesian(point);
  if (xi <= xi_e) throw std::invalid_argument("p series valid only for xi > xi_e");
  const double nx = order * xi, ne = order * eta;
  const double decay = std::exp(order * xi_i - nx);
  if (orientation == Orientation::X)
    return (12.0 * std::cosh(nx) + p_scatter_coeff() * decay) * std::cos(ne);
  return (12.0 * std::sinh(nx) + p_scatter_coeff() * decay) * std::sin(ne);
}

} // namespace eocloak
