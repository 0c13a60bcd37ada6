#include <doctest.h>

#include <cmath>

#include "eocloak/analytic.hpp"
#include "eocloak/metrics.hpp"

using namespace eocloak;

namespace {

CloakConfig disks(double eps_s, double zeta0, int n) {
  CloakConfig cfg;
  cfg.core = make_circle({0.0, 0.0}, 0.5, n);
  cfg.object = make_circle({0.0, 0.0}, 1.0, n);
  cfg.region = make_circle({0.0, 0.0}, 2.0, n);
  cfg.eps_s = eps_s;
  cfg.zeta0 = zeta0;
  cfg.H = HarmonicField{FieldFamily::UniformX};
  cfg.P = pressure_partner(cfg.H);
  return cfg;
}

} // namespace

TEST_CASE("laboratory scales from the default microchannel setup") {
  const UnitSystem u;
  // mu u_ext / (eps_m E) = 1e-3 * 51e-6 / (7.08e-10 * 300)
  CHECK(u.zeta_scale() == doctest::Approx(0.2401129944).epsilon(1e-9));
  // 12 mu u_ext L_c / h^2
  CHECK(u.pressure_scale() == doctest::Approx(0.272).epsilon(1e-12));
  CHECK_NOTHROW(u.validate());

  UnitSystem bad = u;
  bad.viscosity = -1.0;
  CHECK_THROWS(bad.validate());
}

TEST_CASE("dimensional conversions round-trip and zeta flips sign") {
  const UnitSystem u;
  for (Quantity q : {Quantity::Length, Quantity::Velocity, Quantity::Pressure,
                     Quantity::Zeta, Quantity::Potential}) {
    const double v = 0.731;
    CHECK(from_dimensional(to_dimensional(v, q, u), q, u) ==
          doctest::Approx(v).epsilon(1e-12));
  }
  // the model zeta0 of the perfect disks cloak corresponds to -0.16 V
  CHECK(to_dimensional(2.0 / 3.0, Quantity::Zeta, u) ==
        doctest::Approx(-0.1600753296).epsilon(1e-8));
  CHECK(to_dimensional(1.0, Quantity::Potential, u) == doctest::Approx(0.03));
  CHECK(to_dimensional(1.0, Quantity::Length, u) == doctest::Approx(1e-4));
  CHECK(parse_quantity("zeta") == Quantity::Zeta);
  CHECK_THROWS(parse_quantity("charge"));
}

TEST_CASE("sampling annuli generate the requested point count") {
  SamplingAnnulus set;
  set.center = {0.5, 0.0};
  set.r0 = 2.0;
  set.r1 = 3.0;
  set.n_radial = 4;
  set.n_angular = 16;
  const std::vector<Vec2> pts = sampling_points(set);
  CHECK(pts.size() == 64u);
  for (const Vec2 p : pts) {
    const double r = norm(p - set.center);
    CHECK(r >= 2.0 - 1e-12);
    CHECK(r <= 3.0 + 1e-12);
  }

  const Curve object = make_circle({0.0, 0.0}, 1.0, 64);
  const SamplingAnnulus dflt = default_sampling(object);
  CHECK(dflt.r0 == doctest::Approx(1.05 * 2.0));
  CHECK(dflt.r1 == doctest::Approx(3.0 * 2.0));
}

TEST_CASE("cloak errors vanish at the perfect design and reject bad sets") {
  const AnnulusDesign d = annulus_condition(0.5, 1.0, 2.0, 1);
  const CloakConfig cfg = disks(d.eps_ratio, d.zeta0, 128);
  const ElectricSolution esol = solve_electric(cfg);
  const PressureSolution psol = solve_pressure(cfg, esol);
  const CloakErrorSummary s = cloak_errors(cfg, esol, psol);
  CHECK(s.max_phi_err < 1e-8);
  CHECK(s.max_p_err < 1e-8);
  CHECK(s.max_u_err < 1e-8);
  CHECK(s.l2_phi_err <= s.max_phi_err);

  SamplingAnnulus inside;
  inside.r0 = 0.5;
  inside.r1 = 3.0;
  CHECK_THROWS(cloak_errors(cfg, esol, psol, inside, default_sampling(cfg.region)));
}

TEST_CASE("detuning sweeps grow away from the optimum and guard the contrast") {
  const AnnulusDesign d = annulus_condition(0.5, 1.0, 2.0, 1);
  CloakConfig cfg = disks(d.eps_ratio, d.zeta0, 96);
  const std::vector<double> grid = {d.zeta0, d.zeta0 * 1.2, d.zeta0 * 1.4};
  const std::vector<SweepRow> rows = detuning_sweep(cfg, SweepParameter::Zeta0, grid);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].value == doctest::Approx(d.zeta0));
  CHECK(rows[1].errors.max_p_err > rows[0].errors.max_p_err);
  CHECK(rows[2].errors.max_p_err > rows[1].errors.max_p_err);
  // electric stage untouched by zeta detuning
  CHECK(rows[2].errors.max_phi_err == doctest::Approx(rows[0].errors.max_phi_err));

  CHECK_THROWS(detuning_sweep(cfg, SweepParameter::EpsilonS, {0.5, 1.5}));
}
