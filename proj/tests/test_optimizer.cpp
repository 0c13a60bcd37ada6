#include <doctest.h>

#include <cmath>

#include "eocloak/analytic.hpp"
#include "eocloak/optimizer.hpp"

using namespace eocloak;

namespace {

CloakConfig disks(int n) {
  CloakConfig cfg;
  cfg.core = make_circle({0.0, 0.0}, 0.5, n);
  cfg.object = make_circle({0.0, 0.0}, 1.0, n);
  cfg.region = make_circle({0.0, 0.0}, 2.0, n);
  cfg.H = HarmonicField{FieldFamily::UniformX};
  cfg.P = pressure_partner(cfg.H);
  return cfg;
}

Eigen::VectorXd normal_data(const HarmonicField& f, const Curve& c) {
  Eigen::VectorXd v(c.n());
  for (int j = 0; j < c.n(); ++j) v[j] = dot(f.gradient(c.node(j)), c.normal(j));
  return v;
}

double weighted_norm(const Eigen::VectorXd& v, const Curve& c) {
  return std::sqrt((v.array().square() * c.weights()).sum());
}

} // namespace

TEST_CASE("mixed shell problem reproduces the annulus series trace") {
  const CloakConfig cfg = disks(128);
  const InteriorMixedSolution ms = solve_interior_mixed(cfg.core, cfg.object, cfg.H);
  CHECK(ms.dirichlet_residual < 1e-9);
  CHECK(std::abs(ms.flux) < 1e-9);
  // phi = (r + r_o^2/r) cos(th) / (r_i + r_o^2/r_i):
  // d(phi)/dr at r_i = 1 is (1 - 0.25) / 1.25 = 0.6
  for (int j = 0; j < cfg.object.n(); ++j) {
    const double th = std::atan2(cfg.object.y[j], cfg.object.x[j]);
    CHECK(ms.dphi_dnu_i[j] == doctest::Approx(0.6 * std::cos(th)).epsilon(1e-11));
  }
}

TEST_CASE("vanishing core leaves the background flux unchanged") {
  CloakConfig cfg = disks(128);
  cfg.core = make_circle({0.0, 0.0}, 1e-3, 128);
  const InteriorMixedSolution ms = solve_interior_mixed(cfg.core, cfg.object, cfg.H);
  const Eigen::VectorXd h = normal_data(cfg.H, cfg.object);
  CHECK((ms.dphi_dnu_i - h).cwiseAbs().maxCoeff() < 1e-4);
}

TEST_CASE("permittivity fit recovers the closed forms on disks and ellipses") {
  {
    const CloakConfig cfg = disks(128);
    const PermittivityFit fit =
        optimize_permittivity(cfg.core, cfg.object, cfg.H, 1.0, 1.01, 1e3);
    CHECK(fit.eps_opt == doctest::Approx(5.0 / 3.0).epsilon(1e-10));
    CHECK(fit.objective < 1e-18);
    CHECK_FALSE(fit.clipped);
  }
  {
    const Curve core = make_confocal_ellipse(1.0, 0.25, 128);
    const Curve object = make_confocal_ellipse(1.0, 0.5, 128);
    HarmonicField H{FieldFamily::EllipticCos};
    const PermittivityFit fit = optimize_permittivity(core, object, H, 1.0, 1.01, 1e3);
    const ConfocalDesign d = confocal_condition(0.25, 0.5, 1.0, 1, Orientation::X);
    CHECK(fit.eps_opt == doctest::Approx(d.eps_ratio).epsilon(1e-10));
    CHECK(fit.objective < 1e-14);
  }
}

TEST_CASE("permittivity objective is an exact strictly convex quadratic") {
  CloakConfig cfg;
  cfg.object = make_named_shape("kite", 1.0, 128);
  cfg.core = shrink_conformal(cfg.object, 0.5);
  cfg.H = HarmonicField{FieldFamily::UniformX};
  const PermittivityFit fit =
      optimize_permittivity(cfg.core, cfg.object, cfg.H, 1.0, 1.01, 1e3);
  const Eigen::VectorXd h = normal_data(cfg.H, cfg.object);
  auto G = [&](double eps) {
    const Eigen::VectorXd r = eps * fit.dphi_dnu_i - h;
    return (r.array().square() * cfg.object.weights()).sum();
  };
  // three samples determine the quadratic exactly; a fourth must agree
  const double e0 = 1.1, e1 = 2.0, e2 = 3.7, e3 = 5.3;
  const double a = (G(e2) - G(e0) - (G(e1) - G(e0)) * (e2 - e0) / (e1 - e0)) /
                   ((e2 - e0) * (e2 - e1));
  CHECK(a > 0.0); // strict convexity
  const double b = (G(e1) - G(e0)) / (e1 - e0) - a * (e0 + e1);
  const double c = G(e0) - a * e0 * e0 - b * e0;
  CHECK(G(e3) == doctest::Approx(a * e3 * e3 + b * e3 + c).epsilon(1e-12));
  // first-order condition at the interior optimum
  CHECK(2.0 * a * fit.eps_opt + b == doctest::Approx(0.0).epsilon(1e-10));
  // golden section agrees with the closed form
  CHECK(golden_section_check(G, 1.01, 10.0, 1e-8) ==
        doctest::Approx(fit.eps_opt).epsilon(1e-6));
}

TEST_CASE("optimum is stable under small background perturbations") {
  // the shell solve is linear in H, so the perturbed flux is a superposition
  const Curve object = make_named_shape("kite", 1.0, 128);
  const Curve core = shrink_conformal(object, 0.5);
  const HarmonicField H1{FieldFamily::UniformX};
  HarmonicField H2{FieldFamily::DiskMultipole};
  H2.order = 2;
  const InteriorMixedSolution m1 = solve_interior_mixed(core, object, H1);
  const InteriorMixedSolution m2 = solve_interior_mixed(core, object, H2);
  const Eigen::VectorXd h1 = normal_data(H1, object);
  const Eigen::VectorXd h2 = normal_data(H2, object);

  const double delta = 1e-3 * weighted_norm(h1, object) / weighted_norm(h2, object);
  const Eigen::VectorXd g = m1.dphi_dnu_i + delta * m2.dphi_dnu_i;
  const Eigen::VectorXd h = h1 + delta * h2;
  const double base = (m1.dphi_dnu_i.array() * h1.array() * object.weights()).sum() /
                      (m1.dphi_dnu_i.array().square() * object.weights()).sum();
  const double pert = (g.array() * h.array() * object.weights()).sum() /
                      (g.array().square() * object.weights()).sum();
  CHECK(std::abs(pert - base) / base <= 10.0 * 1e-3);
}

TEST_CASE("pressure decomposition components carry the annulus series values") {
  const CloakConfig cfg = disks(128);
  // perfect electric stage: slip is the background flux on both boundaries
  const SlipData slip{normal_data(cfg.H, cfg.object), normal_data(cfg.H, cfg.region)};
  const PressureDecomposition decomp =
      solve_pressure_decomposition(cfg.object, cfg.region, slip, cfg.P);
  // p1 = 16 (r + 1/r) cos(th): trace 40 cos(th) on r = 2 (zero mean)
  // p2 = -12 r cos(th): trace -24 cos(th)
  for (int j = 0; j < cfg.region.n(); ++j) {
    const double th = std::atan2(cfg.region.y[j], cfg.region.x[j]);
    CHECK(decomp.p1.trace_e[j] == doctest::Approx(40.0 * std::cos(th)).epsilon(1e-10));
    CHECK(decomp.p2.trace_e[j] == doctest::Approx(-24.0 * std::cos(th)).epsilon(1e-10));
  }
  CHECK(decomp.p1.compat_fraction < 1e-12);

  const ZetaFit fit = optimize_zeta(decomp, cfg.region, cfg.P, 0.0, 1e2);
  CHECK(fit.zeta_opt == doctest::Approx(2.0 / 3.0).epsilon(1e-10));
  CHECK(fit.objective < 1e-16);
  CHECK_FALSE(fit.clipped);

  // clipping semantics: a cap below the optimum binds and costs accuracy
  const ZetaFit capped = optimize_zeta(decomp, cfg.region, cfg.P, 0.0, 0.1);
  CHECK(capped.zeta_opt == doctest::Approx(0.1));
  CHECK(capped.clipped);
  CHECK(capped.objective > 1e-3);
}

TEST_CASE("zero slip produces a vanishing second component") {
  const CloakConfig cfg = disks(96);
  const SlipData slip{Eigen::VectorXd::Zero(cfg.object.n()),
                      Eigen::VectorXd::Zero(cfg.region.n())};
  const PressureDecomposition decomp =
      solve_pressure_decomposition(cfg.object, cfg.region, slip, cfg.P);
  CHECK(decomp.p2.trace_e.cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("direct interior solve matches the affine reconstruction") {
  const CloakConfig cfg = disks(96);
  const ElectricSolution esol = solve_electric([&] {
    CloakConfig c = cfg;
    c.eps_s = 5.0 / 3.0;
    return c;
  }());
  const SlipData slip{esol.dphi_dnu_i_outer, esol.dphi_dnu_e};
  const PressureDecomposition decomp =
      solve_pressure_decomposition(cfg.object, cfg.region, slip, cfg.P);
  const Eigen::VectorXd dP = normal_data(cfg.P, cfg.region);
  for (double z : {0.1, 1.0, 10.0}) {
    const NeumannComponent direct =
        solve_interior_neumann(cfg.object, cfg.region, (-12.0 * z) * slip.dphi_dnu_i,
                               dP - (12.0 * z) * slip.dphi_dnu_e);
    const Eigen::VectorXd recon = decomp.p1.trace_e + z * decomp.p2.trace_e;
    CHECK((direct.trace_e - recon).cwiseAbs().maxCoeff() < 1e-9);
  }
}

TEST_CASE("incompatible Neumann data is rejected") {
  const CloakConfig cfg = disks(64);
  Eigen::VectorXd g_i = Eigen::VectorXd::Zero(cfg.object.n());
  Eigen::VectorXd g_e = Eigen::VectorXd::Ones(cfg.region.n()); // net flux in
  CHECK_THROWS(solve_interior_neumann(cfg.object, cfg.region, g_i, g_e));
}

TEST_CASE("full pipeline agrees with the closed forms") {
  {
    const OptimizationReport rep = optimize_cloak(disks(128));
    const AnnulusDesign d = annulus_condition(0.5, 1.0, 2.0, 1);
    CHECK(rep.eps_opt == doctest::Approx(d.eps_ratio).epsilon(1e-9));
    CHECK(rep.zeta_opt == doctest::Approx(d.zeta0).epsilon(1e-9));
    CHECK(rep.G < 1e-14);
    CHECK(rep.F < 1e-14);
    CHECK_FALSE(rep.certificate.C_e.has_value()); // residual at rounding noise
    CHECK_FALSE(rep.certificate.C_h.has_value());
    CHECK(rep.certificate.max_phi_err < 1e-8);
    CHECK(rep.certificate.max_p_err < 1e-8);
  }
  {
    CloakConfig cfg;
    cfg.core = make_confocal_ellipse(1.0, 0.25, 128);
    cfg.object = make_confocal_ellipse(1.0, 0.5, 128);
    cfg.region = make_confocal_ellipse(1.0, 1.0, 128);
    cfg.H = HarmonicField{FieldFamily::EllipticSin};
    cfg.P = pressure_partner(cfg.H);
    const OptimizationReport rep = optimize_cloak(cfg);
    const ConfocalDesign d = confocal_condition(0.25, 0.5, 1.0, 1, Orientation::Y);
    CHECK(rep.eps_opt == doctest::Approx(d.eps_ratio).epsilon(1e-9));
    CHECK(rep.zeta_opt == doctest::Approx(d.zeta0).epsilon(1e-9));
  }
}

TEST_CASE("background slip source approximates the exterior one") {
  CloakConfig cfg;
  cfg.object = make_named_shape("flower", 1.0, 128);
  cfg.core = shrink_conformal(cfg.object, 0.5);
  cfg.region = make_circle({0.0, 0.0}, 2.0, 128);
  cfg.H = HarmonicField{FieldFamily::UniformX};
  cfg.P = pressure_partner(cfg.H);
  const OptimizationReport ext = optimize_cloak(cfg, SlipSource::Exterior);
  const OptimizationReport bg = optimize_cloak(cfg, SlipSource::Background);
  CHECK(ext.eps_opt == doctest::Approx(bg.eps_opt).epsilon(1e-12)); // same stage 1
  CHECK(bg.zeta_opt == doctest::Approx(ext.zeta_opt).epsilon(0.05));
  CHECK(to_string(SlipSource::Exterior) == "exterior");
  CHECK(parse_slip_source("background") == SlipSource::Background);
  CHECK_THROWS(parse_slip_source("interior"));
}

TEST_CASE("near-touching core trips the condition-number guard") {
  const Curve object = make_circle({0.0, 0.0}, 1.0, 64);
  const Curve core = make_circle({0.0, 0.0}, 1.0 - 1e-9, 64);
  CHECK_THROWS(solve_interior_mixed(core, object, HarmonicField{FieldFamily::UniformX}));
}

TEST_CASE("golden section on a plain quadratic") {
  CHECK(golden_section_check([](double x) { return (x - 3.0) * (x - 3.0); }, 0.0, 10.0,
                             1e-9) == doctest::Approx(3.0).epsilon(1e-7));
  CHECK_THROWS(golden_section_check([](double x) { return x * x; }, 0.0, 1.0, -1.0));
}

TEST_CASE("degenerate fits are rejected") {
  const CloakConfig cfg = disks(64);
  HarmonicField constant{FieldFamily::DiskMultipole};
  constant.order = 0; // H identically one
  CHECK_THROWS(optimize_permittivity(cfg.core, cfg.object, constant, 1.0, 1.01, 1e3));
  CHECK_THROWS(optimize_permittivity(cfg.core, cfg.object, cfg.H, 1.0, 2.0, 1.0));
  CHECK_THROWS(optimize_permittivity(cfg.core, cfg.object, cfg.H, -1.0, 1.01, 1e3));
}
