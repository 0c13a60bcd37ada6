#include <doctest.h>

#include <cmath>

#include "eocloak/geometry.hpp"

using namespace eocloak;

TEST_CASE("circle sampling reproduces perimeter, area and centroid") {
  const Curve c = make_circle({1.0, -2.0}, 1.5, 128);
  CHECK(c.n() == 128);
  CHECK(c.perimeter() == doctest::Approx(2.0 * M_PI * 1.5).epsilon(1e-12));
  CHECK(c.area() == doctest::Approx(M_PI * 1.5 * 1.5).epsilon(1e-12));
  CHECK(c.centroid().x == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(c.centroid().y == doctest::Approx(-2.0).epsilon(1e-12));
  CHECK(c.max_radius() == doctest::Approx(1.5).epsilon(1e-12));
}

TEST_CASE("circle normals are unit, outward, with curvature 1/r") {
  const Curve c = make_circle({0.0, 0.0}, 2.0, 64);
  for (int j = 0; j < c.n(); ++j) {
    CHECK(norm(c.normal(j)) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(dot(c.normal(j), c.node(j)) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(c.kappa[j] == doctest::Approx(0.5).epsilon(1e-10));
  }
}

TEST_CASE("containment and exclusion band") {
  const Curve c = make_circle({0.0, 0.0}, 1.0, 64);
  CHECK(c.contains({0.3, 0.4}));
  CHECK_FALSE(c.contains({1.2, 0.0}));
  CHECK(c.in_exclusion_band({1.01, 0.0}));
  CHECK_FALSE(c.in_exclusion_band({2.0, 0.0}));
}

TEST_CASE("named shapes hit their defining samples") {
  const Curve flower = make_named_shape("flower", 1.0, 256);
  // node 0 sits at parameter t = 0, polar radius 1 - 0.1 = 0.9
  CHECK(flower.x[0] == doctest::Approx(0.9).epsilon(1e-12));
  CHECK(flower.y[0] == doctest::Approx(0.0).epsilon(1e-12));

  const Curve kite = make_named_shape("kite", 1.0, 256);
  const int quarter = 256 / 4; // t = pi/2
  CHECK(kite.x[quarter] == doctest::Approx(0.01 - 0.39).epsilon(1e-12));
  CHECK(kite.y[quarter] == doctest::Approx(0.9).epsilon(1e-12));

  const Curve peanut = make_named_shape("peanut", 1.0, 256);
  CHECK(norm(peanut.node(quarter)) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("shape scale acts linearly") {
  const Curve one = make_named_shape("peanut", 1.0, 64);
  const Curve two = make_named_shape("peanut", 2.0, 64);
  for (int j = 0; j < 64; ++j) {
    CHECK(two.x[j] == doctest::Approx(2.0 * one.x[j]).epsilon(1e-13));
    CHECK(two.y[j] == doctest::Approx(2.0 * one.y[j]).epsilon(1e-13));
  }
}

TEST_CASE("conformal shrink keeps the kite strictly inside the original") {
  const Curve kite = make_named_shape("kite", 1.0, 256);
  const Curve core = shrink_conformal(kite, 0.5);
  CHECK(core.n() == kite.n());
  CHECK(core.area() == doctest::Approx(0.25 * kite.area()).epsilon(1e-10));
  for (int j = 0; j < core.n(); ++j) {
    CHECK(kite.contains(core.node(j)));
    CHECK(kite.node_distance(core.node(j)) > 0.0);
  }
}

TEST_CASE("rounded polygons are inscribed, smooth and convex") {
  for (int k : {3, 4, 5}) {
    const Curve poly = make_rounded_polygon(k, 1.0, 256);
    CHECK(poly.max_radius() <= 1.0 + 1e-9);
    CHECK(poly.max_radius() > 0.8);
    for (int j = 0; j < poly.n(); ++j) {
      CHECK(poly.speed[j] > 0.0);
      CHECK(poly.kappa[j] >= -1e-9);           // convex
      CHECK(poly.kappa[j] <= 1.0 / 0.08 + 1.0); // rounding radius floor 0.08
    }
  }
  CHECK_THROWS(make_rounded_polygon(7, 1.0, 64));
}

TEST_CASE("elliptic coordinates round-trip and the ellipse carries its meta") {
  const EllipticCoords ec{1.3};
  const Vec2 p = ec.to_cartesian(0.7, 2.1);
  const auto [xi, eta] = ec.from_cartesian(p);
  CHECK(xi == doctest::Approx(0.7).epsilon(1e-12));
  CHECK(eta == doctest::Approx(2.1).epsilon(1e-12));
  CHECK(ec.gamma(0.7, 2.1) > 0.0);

  const Curve ell = make_confocal_ellipse(1.3, 0.7, 128);
  REQUIRE(ell.elliptic.has_value());
  CHECK(ell.elliptic->l == 1.3);
  CHECK(ell.elliptic->xi == 0.7);
  // semi-axes: l cosh(xi), l sinh(xi)
  CHECK(ell.x.maxCoeff() == doctest::Approx(1.3 * std::cosh(0.7)).epsilon(1e-12));
  CHECK(ell.y.maxCoeff() == doctest::Approx(1.3 * std::sinh(0.7)).epsilon(1e-12));
}

TEST_CASE("elliptic basis densities are the metric-weighted harmonics") {
  const Curve ell = make_confocal_ellipse(1.0, 0.5, 64);
  const EllipticCoords ec{1.0};
  const Eigen::ArrayXd beta = elliptic_basis_density(ell, 3, Parity::Sin);
  for (int j = 0; j < ell.n(); ++j) {
    const double eta = ell.h * j;
    CHECK(beta[j] ==
          doctest::Approx(std::sin(3.0 * eta) / ec.gamma(0.5, eta)).epsilon(1e-12));
  }
}
