#include "eocloak/geometry.hpp"

#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>

#include "eocloak/fourier.hpp"

namespace eocloak {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

void check_node_count(int n_nodes) {
  if (n_nodes < 16 || n_nodes % 2 != 0)
    throw std::invalid_argument("node count must be even and >= 16");
}

using ParamFn = std::function<void(double t, Vec2& p, Vec2& d1, Vec2& d2)>;

Curve from_parametrization(int n_nodes, const ParamFn& f) {
  check_node_count(n_nodes);
  Curve c;
  c.h = kTwoPi / n_nodes;
  c.x.resize(n_nodes);
  c.y.resize(n_nodes);
  c.dx.resize(n_nodes);
  c.dy.resize(n_nodes);
  c.speed.resize(n_nodes);
  c.nx.resize(n_nodes);
  c.ny.resize(n_nodes);
  c.kappa.resize(n_nodes);
  for (int j = 0; j < n_nodes; ++j) {
    Vec2 p, d1, d2;
    f(c.h * j, p, d1, d2);
    const double sp = norm(d1);
    c.x[j] = p.x;
    c.y[j] = p.y;
    c.dx[j] = d1.x;
    c.dy[j] = d1.y;
    c.speed[j] = sp;
    c.nx[j] = d1.y / sp;
    c.ny[j] = -d1.x / sp;
    c.kappa[j] = (d1.x * d2.y - d1.y * d2.x) / (sp * sp * sp);
  }
  return c;
}

// Polar curves r(t)(cos t, sin t) with analytic r, r', r''.
Curve from_polar(int n_nodes, const std::function<void(double, double&, double&, double&)>& rf) {
  return from_parametrization(n_nodes, [&rf](double t, Vec2& p, Vec2& d1, Vec2& d2) {
    double r, r1, r2;
    rf(t, r, r1, r2);
    const double ct = std::cos(t), st = std::sin(t);
    p = {r * ct, r * st};
    d1 = {r1 * ct - r * st, r1 * st + r * ct};
    d2 = {(r2 - r) * ct - 2.0 * r1 * st, (r2 - r) * st + 2.0 * r1 * ct};
  });
}

double smootherstep(double u) {
  if (u <= 0.0) return 0.0;
  if (u >= 1.0) return 1.0;
  return u * u * u * (10.0 + u * (-15.0 + 6.0 * u));
}

double smootherstep_deriv(double u) {
  if (u <= 0.0 || u >= 1.0) return 0.0;
  return 30.0 * u * u * (1.0 - u) * (1.0 - u);
}

} // namespace

Vec2 EllipticCoords::to_cartesian(double xi, double eta) const {
  return {l * std::cosh(xi) * std::cos(eta), l * std::sinh(xi) * std::sin(eta)};
}

std::pair<double, double> EllipticCoords::from_cartesian(Vec2 p) const {
  const std::complex<double> w = std::acosh(std::complex<double>(p.x / l, p.y / l));
  double xi = w.real();
  double eta = w.imag();
  if (xi < 0.0) {
    xi = -xi;
    eta = -eta;
  }
  if (eta < 0.0) eta += kTwoPi;
  return {xi, eta};
}

double EllipticCoords::gamma(double xi, double eta) const {
  const double sh = std::sinh(xi), sn = std::sin(eta);
  return l * std::sqrt(sh * sh + sn * sn);
}

Vec2 Curve::centroid() const {
  // 2A*Cx = integral x^2 dy, 2A*Cy = -integral y^2 dx.
  const double a = area();
  const double cx = (x * x * dy).sum() * h / (2.0 * a);
  const double cy = -(y * y * dx).sum() * h / (2.0 * a);
  return {cx, cy};
}

double Curve::area() const {
  return 0.5 * (x * dy - y * dx).sum() * h;
}

double Curve::max_radius() const {
  const Vec2 c = centroid();
  return ((x - c.x).square() + (y - c.y).square()).sqrt().maxCoeff();
}

bool Curve::contains(Vec2 p) const {
  // Winding of the node polygon around p.
  double winding = 0.0;
  const int m = n();
  for (int j = 0; j < m; ++j) {
    const int k = (j + 1) % m;
    const double ax = x[j] - p.x, ay = y[j] - p.y;
    const double bx = x[k] - p.x, by = y[k] - p.y;
    winding += std::atan2(ax * by - ay * bx, ax * bx + ay * by);
  }
  return std::abs(winding) > M_PI;
}

double Curve::node_distance(Vec2 p) const {
  return (((x - p.x).square() + (y - p.y).square()).sqrt()).minCoeff();
}

bool Curve::in_exclusion_band(Vec2 p, double band_factor) const {
  const int m = n();
  for (int j = 0; j < m; ++j) {
    const double d = std::hypot(x[j] - p.x, y[j] - p.y);
    if (d < band_factor * h * speed[j]) return true;
  }
  return false;
}

Curve make_circle(Vec2 center, double radius, int n_nodes) {
  if (radius <= 0.0) throw std::invalid_argument("circle radius must be positive");
  return from_parametrization(n_nodes, [=](double t, Vec2& p, Vec2& d1, Vec2& d2) {
    const double ct = std::cos(t), st = std::sin(t);
    p = {center.x + radius * ct, center.y + radius * st};
    d1 = {-radius * st, radius * ct};
    d2 = {-radius * ct, -radius * st};
  });
}

Curve make_confocal_ellipse(double l, double xi, int n_nodes) {
  if (l <= 0.0 || xi <= 0.0)
    throw std::invalid_argument("focal half-distance and elliptic radius must be positive");
  const double a = l * std::cosh(xi);
  const double b = l * std::sinh(xi);
  Curve c = from_parametrization(n_nodes, [=](double t, Vec2& p, Vec2& d1, Vec2& d2) {
    const double ct = std::cos(t), st = std::sin(t);
    p = {a * ct, b * st};
    d1 = {-a * st, b * ct};
    d2 = {-a * ct, -b * st};
  });
  c.elliptic = EllipticMeta{l, xi};
  return c;
}

Curve make_named_shape(const std::string& name, double scale, int n_nodes) {
  if (scale <= 0.0) throw std::invalid_argument("shape scale must be positive");
  if (name == "flower") {
    return from_polar(n_nodes, [scale](double t, double& r, double& r1, double& r2) {
      r = scale * (1.0 - 0.1 * std::cos(5.0 * t));
      r1 = scale * 0.5 * std::sin(5.0 * t);
      r2 = scale * 2.5 * std::cos(5.0 * t);
    });
  }
  if (name == "kite") {
    return from_parametrization(n_nodes, [scale](double t, Vec2& p, Vec2& d1, Vec2& d2) {
      p = {scale * (0.6 * std::cos(t) + 0.39 * std::cos(2.0 * t) + 0.01),
           scale * 0.9 * std::sin(t)};
      d1 = {scale * (-0.6 * std::sin(t) - 0.78 * std::sin(2.0 * t)),
            scale * 0.9 * std::cos(t)};
      d2 = {scale * (-0.6 * std::cos(t) - 1.56 * std::cos(2.0 * t)),
            scale * -0.9 * std::sin(t)};
    });
  }
  if (name == "peanut") {
    return from_polar(n_nodes, [scale](double t, double& r, double& r1, double& r2) {
      const double g = std::cos(t) * std::cos(t) + 0.25 * std::sin(t) * std::sin(t);
      const double g1 = -0.75 * std::sin(2.0 * t);
      const double g2 = -1.5 * std::cos(2.0 * t);
      const double s = std::sqrt(g);
      r = scale * s;
      r1 = scale * g1 / (2.0 * s);
      r2 = scale * (g2 / (2.0 * s) - g1 * g1 / (4.0 * g * s));
    });
  }
  if (name.rfind("polygon", 0) == 0 && name.size() == 8) {
    return make_rounded_polygon(name[7] - '0', scale, n_nodes);
  }
  throw std::invalid_argument("unknown shape name: " + name);
}

Curve make_rounded_polygon(int k, double scale, int n_nodes) {
  if (k < 3 || k > 5) throw std::invalid_argument("polygon vertex count must be 3, 4 or 5");
  if (scale <= 0.0) throw std::invalid_argument("shape scale must be positive");
  check_node_count(n_nodes);

  // Tangent angle of a regular k-gon traversed counterclockwise at unit
  // parameter speed: k jumps of 2*pi/k, each replaced by a quintic blend so
  // the minimum corner curvature radius is rho.
  const double turn = kTwoPi / k;
  const double edge_len = 2.0 * std::sin(M_PI / k);
  const double total_len = k * edge_len; // nominal, pre-rescale
  const double rho = 0.08;
  double window = rho * turn * (15.0 / 8.0) * (kTwoPi / total_len);
  window = std::min(window, 0.9 * turn);

  const auto psi = [&](double t) {
    double a = M_PI / 2.0 + turn / 2.0; // direction of the first edge
    for (int m = 0; m < k; ++m) {
      const double center = turn * (m + 0.5);
      a += turn * smootherstep((t - center) / window + 0.5);
      // wrap-around window of the last corner
      a += turn * smootherstep((t - center - kTwoPi) / window + 0.5);
    }
    return a;
  };
  const auto psi_deriv = [&](double t) {
    double a = 0.0;
    for (int m = 0; m < k; ++m) {
      const double center = turn * (m + 0.5);
      a += turn * smootherstep_deriv((t - center) / window + 0.5) / window;
      a += turn * smootherstep_deriv((t - center - kTwoPi) / window + 0.5) / window;
    }
    return a;
  };

  const double sp = total_len / kTwoPi; // constant parameter speed
  Curve c = from_parametrization(n_nodes, [&](double t, Vec2& p, Vec2& d1, Vec2& d2) {
    const double a = psi(t), a1 = psi_deriv(t);
    p = {0.0, 0.0}; // filled below by spectral integration
    d1 = {sp * std::cos(a), sp * std::sin(a)};
    d2 = {-sp * a1 * std::sin(a), sp * a1 * std::cos(a)};
  });
  // Positions from the tangent field; closure holds by k-fold symmetry.
  c.x = detail::periodic_antiderivative(c.dx);
  c.y = detail::periodic_antiderivative(c.dy);

  // Inscribe in the circle of radius `scale`, centered at the centroid.
  Vec2 ctr = c.centroid();
  c.x -= ctr.x;
  c.y -= ctr.y;
  const double rmax = (c.x.square() + c.y.square()).sqrt().maxCoeff();
  const double s = scale / rmax;
  c.x *= s;
  c.y *= s;
  c.dx *= s;
  c.dy *= s;
  c.speed *= s;
  c.kappa /= s;
  return c;
}

Curve shrink_conformal(const Curve& curve, double factor) {
  if (!(factor > 0.0 && factor < 1.0))
    throw std::invalid_argument("shrink factor must lie in (0,1)");
  const Vec2 ctr = curve.centroid();
  Curve c = curve;
  c.elliptic.reset();
  c.x = ctr.x + factor * (curve.x - ctr.x);
  c.y = ctr.y + factor * (curve.y - ctr.y);
  c.dx = factor * curve.dx;
  c.dy = factor * curve.dy;
  c.speed = factor * curve.speed;
  c.kappa = curve.kappa / factor;
  return c;
}

Eigen::ArrayXd elliptic_basis_density(const Curve& curve, int order, Parity parity) {
  if (order < 1) throw std::invalid_argument("harmonic order must be >= 1");
  if (!curve.elliptic)
    throw std::invalid_argument("elliptic basis density requires a confocal ellipse curve");
  const EllipticCoords sys{curve.elliptic->l};
  const double xi = curve.elliptic->xi;
  const int m = curve.n();
  Eigen::ArrayXd out(m);
  for (int j = 0; j < m; ++j) {
    const double eta = curve.h * j;
    const double trig = (parity == Parity::Cos) ? std::cos(order * eta) : std::sin(order * eta);
    out[j] = trig / sys.gamma(xi, eta);
  }
  return out;
}

} // namespace eocloak
