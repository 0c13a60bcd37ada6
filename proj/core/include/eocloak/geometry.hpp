#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>

namespace eocloak {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }

/// Elliptic coordinate system with focal half-distance l:
///   x1 = l cosh(xi) cos(eta),  x2 = l sinh(xi) sin(eta).
struct EllipticCoords {
  double l = 1.0;

  Vec2 to_cartesian(double xi, double eta) const;
  /// Inverse map; returns (xi, eta) with xi >= 0, eta in [0, 2*pi).
  std::pair<double, double> from_cartesian(Vec2 p) const;
  /// Metric factor gamma(xi, eta) = l * sqrt(sinh^2 xi + sin^2 eta).
  double gamma(double xi, double eta) const;
};

/// Metadata attached to curves produced by make_confocal_ellipse.
struct EllipticMeta {
  double l = 1.0;
  double xi = 0.0;
};

/// Closed C^1 curve sampled on the uniform periodic grid t_j = 2*pi*j/N.
/// Orientation is counterclockwise; the normal points away from the
/// enclosed region.
class Curve {
 public:
  Eigen::ArrayXd x, y;     // positions
  Eigen::ArrayXd dx, dy;   // d/dt
  Eigen::ArrayXd speed;    // |x'(t)|
  Eigen::ArrayXd nx, ny;   // outward unit normal
  Eigen::ArrayXd kappa;    // curvature
  double h = 0.0;          // 2*pi/N
  std::optional<EllipticMeta> elliptic;

  int n() const { return static_cast<int>(x.size()); }
  Vec2 node(int j) const { return {x[j], y[j]}; }
  Vec2 normal(int j) const { return {nx[j], ny[j]}; }
  /// Arc-length quadrature weights (periodic trapezoid): w_j = |x'(t_j)| h.
  Eigen::ArrayXd weights() const { return speed * h; }
  double perimeter() const { return (speed * h).sum(); }
  Vec2 centroid() const;
  double area() const;
  /// Largest node distance from the centroid.
  double max_radius() const;

  bool contains(Vec2 p) const;
  /// Distance from p to the nearest node.
  double node_distance(Vec2 p) const;
  /// True when p lies within `band_factor` node spacings of the curve.
  bool in_exclusion_band(Vec2 p, double band_factor = 5.0) const;
};

Curve make_circle(Vec2 center, double radius, int n_nodes);
Curve make_confocal_ellipse(double l, double xi, int n_nodes);

/// Shape corpus: "flower", "kite", "peanut". Polygons go through
/// make_rounded_polygon; make_named_shape also accepts "polygon3".."polygon5".
Curve make_named_shape(const std::string& name, double scale, int n_nodes);

/// Regular k-gon (k in {3,4,5}) inscribed in the circle of radius `scale`,
/// with corners rounded to a minimum curvature radius of 0.08*scale via a
/// quintic (C^2) blend of the tangent angle.
Curve make_rounded_polygon(int k, double scale, int n_nodes);

/// Scale about the centroid by `factor` in (0,1); node count preserved.
Curve shrink_conformal(const Curve& curve, double factor);

enum class Parity { Cos, Sin };

/// beta_n^{c,a} = gamma^-1 cos(n eta) or beta_n^{s,a} = gamma^-1 sin(n eta),
/// sampled at the nodes of a confocal ellipse.
Eigen::ArrayXd elliptic_basis_density(const Curve& curve, int order, Parity parity);

} // namespace eocloak
