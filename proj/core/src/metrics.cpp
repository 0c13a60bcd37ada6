#include "eocloak/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace eocloak {

double UnitSystem::zeta_scale() const {
  return viscosity * velocity / (permittivity * field);
}

double UnitSystem::pressure_scale() const {
  return 12.0 * viscosity * velocity * length / (gap * gap);
}

void UnitSystem::validate() const {
  if (gap <= 0 || length <= 0 || viscosity <= 0 || permittivity <= 0 || field <= 0 ||
      velocity <= 0)
    throw std::invalid_argument("unit system scales must be positive");
}

Quantity parse_quantity(const std::string& kind) {
  if (kind == "length") return Quantity::Length;
  if (kind == "velocity") return Quantity::Velocity;
  if (kind == "pressure") return Quantity::Pressure;
  if (kind == "zeta") return Quantity::Zeta;
  if (kind == "potential") return Quantity::Potential;
  throw std::invalid_argument("unknown quantity kind: " + kind);
}

namespace {

double scale_of(Quantity kind, const UnitSystem& u) {
  switch (kind) {
    case Quantity::Length: return u.length;
    case Quantity::Velocity: return u.velocity;
    case Quantity::Pressure: return u.pressure_scale();
    case Quantity::Zeta: return -u.zeta_scale(); // sign convention: zeta0 = -zeta/zeta_scale
    case Quantity::Potential: return u.field * u.length;
  }
  throw std::logic_error("unreachable");
}

} // namespace

double to_dimensional(double value, Quantity kind, const UnitSystem& units) {
  units.validate();
  return value * scale_of(kind, units);
}

double from_dimensional(double value, Quantity kind, const UnitSystem& units) {
  units.validate();
  return value / scale_of(kind, units);
}

SamplingAnnulus default_sampling(const Curve& boundary) {
  const double diameter = 2.0 * boundary.max_radius();
  SamplingAnnulus set;
  set.center = boundary.centroid();
  set.r0 = 1.05 * diameter;
  set.r1 = 3.0 * diameter;
  return set;
}

std::vector<Vec2> sampling_points(const SamplingAnnulus& set) {
  if (!(set.r1 > set.r0) || set.r0 <= 0.0)
    throw std::invalid_argument("sampling annulus needs 0 < r0 < r1");
  if (set.n_radial < 1 || set.n_angular < 1)
    throw std::invalid_argument("sampling annulus needs positive resolution");
  std::vector<Vec2> pts;
  pts.reserve(size_t(set.n_radial) * set.n_angular);
  for (int i = 0; i < set.n_radial; ++i) {
    const double r = set.r0 + (set.r1 - set.r0) * (set.n_radial == 1 ? 0.0 : double(i) / (set.n_radial - 1));
    for (int j = 0; j < set.n_angular; ++j) {
      const double th = 2.0 * M_PI * j / set.n_angular;
      pts.push_back({set.center.x + r * std::cos(th), set.center.y + r * std::sin(th)});
    }
  }
  return pts;
}

CloakErrorSummary cloak_errors(const CloakConfig& cfg, const ElectricSolution& esol,
                               const PressureSolution& psol,
                               const SamplingAnnulus& electric_set,
                               const SamplingAnnulus& hydro_set) {
  CloakErrorSummary s;
  s.electric_set = electric_set;
  s.hydro_set = hydro_set;

  const auto epts = sampling_points(electric_set);
  const auto hpts = sampling_points(hydro_set);
  auto esamples = eval_fields(cfg, esol, psol, epts);
  auto hsamples = eval_fields(cfg, esol, psol, hpts);

  double sum_phi = 0.0;
  int n_phi = 0;
  for (const FieldSample& f : esamples) {
    if (f.region == Region::Core || f.region == Region::Shell)
      throw std::invalid_argument("electric sampling set intersects the object");
    const double err = std::abs(*f.phi - cfg.H.value(f.point));
    s.max_phi_err = std::max(s.max_phi_err, err);
    sum_phi += err * err;
    ++n_phi;
  }
  double sum_p = 0.0;
  int n_p = 0;
  for (const FieldSample& f : hsamples) {
    if (f.region != Region::Exterior)
      throw std::invalid_argument("hydrodynamic sampling set must lie outside the region boundary");
    const double perr = std::abs(*f.p - cfg.P.value(f.point));
    s.max_p_err = std::max(s.max_p_err, perr);
    sum_p += perr * perr;
    ++n_p;
    const Vec2 gp = cfg.P.gradient(f.point);
    const Vec2 uerr{f.u_aver->x + gp.x / 12.0, f.u_aver->y + gp.y / 12.0};
    s.max_u_err = std::max(s.max_u_err, norm(uerr));
  }
  if (n_phi == 0 || n_p == 0) throw std::invalid_argument("empty sampling set");
  s.l2_phi_err = std::sqrt(sum_phi / n_phi);
  s.l2_p_err = std::sqrt(sum_p / n_p);
  return s;
}

CloakErrorSummary cloak_errors(const CloakConfig& cfg, const ElectricSolution& esol,
                               const PressureSolution& psol) {
  return cloak_errors(cfg, esol, psol, default_sampling(cfg.object),
                      default_sampling(cfg.region));
}

std::vector<SweepRow> detuning_sweep(CloakConfig cfg, SweepParameter parameter,
                                     const std::vector<double>& grid) {
  if (parameter == SweepParameter::EpsilonS && !grid.empty()) {
    // the contrast parameter blows up at eps_s = eps_m; reject grids that
    // touch or straddle it
    const auto [lo, hi] = std::minmax_element(grid.begin(), grid.end());
    if (*lo <= cfg.eps_m && cfg.eps_m <= *hi)
      throw std::invalid_argument("sweep grid crosses eps_s = eps_m");
  }

  std::vector<SweepRow> rows;
  rows.reserve(grid.size());
  for (double v : grid) {
    if (parameter == SweepParameter::EpsilonS)
      cfg.eps_s = v;
    else
      cfg.zeta0 = v;
    const ElectricSolution esol = solve_electric(cfg);
    const PressureSolution psol = solve_pressure(cfg, esol);
    rows.push_back({v, cloak_errors(cfg, esol, psol)});
  }
  return rows;
}

} // namespace eocloak
