#include <doctest.h>

#include <cmath>
#include <sstream>

#include "eocloak/analytic.hpp"
#include "eocloak/config_io.hpp"
#include "eocloak/exterior_solver.hpp"

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

TEST_CASE("detuned disks match the separation-of-variables series") {
  const CloakConfig cfg = disks(3.0, 0.3, 192);
  const ElectricSolution esol = solve_electric(cfg);
  const PressureSolution psol = solve_pressure(cfg, esol);
  const AnnulusSeries series{0.5, 1.0, 2.0, 1, cfg.lambda(), cfg.zeta0, Parity::Cos};

  const std::vector<Vec2> phi_pts = {{1.4, 0.3}, {-2.2, 1.1}, {0.2, 3.0}};
  const std::vector<Vec2> p_pts = {{2.6, 0.4}, {-3.0, 1.5}};
  for (const FieldSample& f : eval_fields(cfg, esol, psol, phi_pts))
    CHECK(*f.phi == doctest::Approx(series.phi(f.point)).epsilon(1e-10));
  for (const FieldSample& f : eval_fields(cfg, esol, psol, p_pts))
    CHECK(*f.p == doctest::Approx(series.p(f.point)).epsilon(1e-9));
}

TEST_CASE("detuned confocal ellipses match the elliptic series") {
  const int n = 192;
  CloakConfig cfg;
  cfg.core = make_confocal_ellipse(1.0, 0.25, n);
  cfg.object = make_confocal_ellipse(1.0, 0.5, n);
  cfg.region = make_confocal_ellipse(1.0, 1.0, n);
  cfg.eps_s = 3.0;
  cfg.zeta0 = 0.4;
  cfg.H = HarmonicField{FieldFamily::EllipticSin};
  cfg.P = pressure_partner(cfg.H);
  const ElectricSolution esol = solve_electric(cfg);
  const PressureSolution psol = solve_pressure(cfg, esol);
  const ConfocalSeries series{1.0, 0.25, 0.5, 1.0, 1, Orientation::Y, cfg.lambda(),
                              cfg.zeta0};

  const EllipticCoords ec{1.0};
  const std::vector<Vec2> phi_pts = {ec.to_cartesian(0.8, 0.9), ec.to_cartesian(1.3, 4.0)};
  const std::vector<Vec2> p_pts = {ec.to_cartesian(1.4, 2.0), ec.to_cartesian(1.8, 5.2)};
  for (const FieldSample& f : eval_fields(cfg, esol, psol, phi_pts))
    CHECK(*f.phi == doctest::Approx(series.phi(f.point)).epsilon(1e-9));
  for (const FieldSample& f : eval_fields(cfg, esol, psol, p_pts))
    CHECK(*f.p == doctest::Approx(series.p(f.point)).epsilon(1e-8));
}

TEST_CASE("field samples carry regions and omit undefined quantities") {
  const CloakConfig cfg = disks(5.0 / 3.0, 2.0 / 3.0, 128);
  const ElectricSolution esol = solve_electric(cfg);
  const PressureSolution psol = solve_pressure(cfg, esol);
  const std::vector<Vec2> pts = {
      {0.1, 0.1},  // core
      {0.7, 0.0},  // shell
      {1.5, 0.0},  // cloak annulus
      {2.5, 0.0},  // exterior
  };
  const std::vector<FieldSample> fs = eval_fields(cfg, esol, psol, pts);
  REQUIRE(fs.size() == 4);
  CHECK(fs[0].region == Region::Core);
  CHECK(fs[1].region == Region::Shell);
  CHECK(fs[2].region == Region::CloakAnnulus);
  CHECK(fs[3].region == Region::Exterior);
  CHECK_FALSE(fs[0].phi.has_value()); // insulated core: no potential defined
  CHECK(fs[1].phi.has_value());
  CHECK_FALSE(fs[1].p.has_value()); // pressure lives outside the object
  CHECK(fs[2].p.has_value());
  CHECK(fs[3].u_aver.has_value());

  CHECK(to_string(Region::Core) == "core");
  CHECK(to_string(Region::Shell) == "shell");
  CHECK(to_string(Region::CloakAnnulus) == "cloak-annulus");
  CHECK(to_string(Region::Exterior) == "exterior");
}

TEST_CASE("depth-averaged velocity composes pressure drive and slip") {
  const CloakConfig cfg = disks(3.0, 0.7, 128);
  const ElectricSolution esol = solve_electric(cfg);
  const PressureSolution psol = solve_pressure(cfg, esol);
  const std::vector<Vec2> pts = {{1.5, 0.4}, {2.7, -0.6}};
  for (const FieldSample& f : eval_fields(cfg, esol, psol, pts)) {
    const double zeta = (f.region == Region::CloakAnnulus) ? cfg.zeta0 : 0.0;
    const Vec2 expected = -1.0 / 12.0 * *f.grad_p - zeta * *f.grad_phi;
    CHECK(f.u_aver->x == doctest::Approx(expected.x).epsilon(1e-12));
    CHECK(f.u_aver->y == doctest::Approx(expected.y).epsilon(1e-12));
  }
}

TEST_CASE("grid export is row-major with empty cells near boundaries") {
  const CloakConfig cfg = disks(5.0 / 3.0, 2.0 / 3.0, 64);
  const ElectricSolution esol = solve_electric(cfg);
  const PressureSolution psol = solve_pressure(cfg, esol);
  const GridExport grid = export_grid(cfg, esol, psol, {-3.0, 3.0, -3.0, 3.0}, 13, 11);
  CHECK(grid.nx == 13);
  CHECK(grid.ny == 11);
  REQUIRE(grid.rows.size() == 13u * 11u);
  // iy-major ordering: first row of 13 entries shares y
  for (int i = 1; i < 13; ++i) {
    CHECK(grid.rows[i].y == grid.rows[0].y);
    CHECK(grid.rows[i].x > grid.rows[i - 1].x);
  }
  bool any_excluded = false, any_field = false;
  for (const GridRow& r : grid.rows) {
    if (r.excluded) {
      any_excluded = true;
      CHECK_FALSE(r.phi.has_value());
      CHECK_FALSE(r.p.has_value());
    }
    if (r.phi && r.phi_err) any_field = true;
  }
  CHECK(any_excluded);
  CHECK(any_field);
}

TEST_CASE("identical configs export byte-identical CSV") {
  const CloakConfig cfg = disks(2.2, 0.5, 64);
  auto dump = [&] {
    const ElectricSolution esol = solve_electric(cfg);
    const PressureSolution psol = solve_pressure(cfg, esol);
    std::ostringstream os;
    write_grid_csv(os, export_grid(cfg, esol, psol, {-3.0, 3.0, -3.0, 3.0}, 15, 15));
    return os.str();
  };
  CHECK(dump() == dump());
}
