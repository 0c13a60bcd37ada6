#include "eocloak/optimizer.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

namespace eocloak {

namespace {

Eigen::VectorXd normal_data(const HarmonicField& f, const Curve& c) {
  Eigen::VectorXd v(c.n());
  for (int j = 0; j < c.n(); ++j) v[j] = dot(f.gradient(c.node(j)), c.normal(j));
  return v;
}

/// Removes the weighted mean; returns |removed mass| / data norm.
// Removes the weighted mean and returns the removed mass relative to the data
// size. `scale` is a floor on the reference L2 norm so that data which is
// numerically zero (a perfectly cancelled right-hand side) is not flagged as
// incompatible by its own rounding noise.
double project_mean_zero(Eigen::VectorXd& v, const Curve& c, double scale = 0.0) {
  const Eigen::ArrayXd w = c.weights();
  const double mass = (v.array() * w).sum();
  v.array() -= mass / w.sum();
  const double nrm = std::max(std::sqrt((v.array().square() * w).sum()), scale);
  // Cauchy-Schwarz: |mass| <= nrm * sqrt(perimeter), so the fraction is <= 1.
  return (nrm > 0.0) ? std::abs(mass) / (nrm * std::sqrt(c.perimeter())) : std::abs(mass);
}

double weighted_dot(const Eigen::VectorXd& a, const Eigen::VectorXd& b, const Curve& c) {
  return (a.array() * b.array() * c.weights()).sum();
}

double clip(double v, double lo, double hi) { return std::min(std::max(v, lo), hi); }

} // namespace

InteriorMixedSolution solve_interior_mixed(const Curve& core, const Curve& object,
                                           const HarmonicField& H) {
  for (int j = 0; j < core.n(); ++j)
    if (!object.contains(core.node(j)))
      throw std::invalid_argument("core must lie strictly inside the object");
  const int no = core.n(), ni = object.n();

  // Unknowns: [sigma_o; sigma_i; constant]. The constant and the mean
  // constraint on sigma_i keep the system regular when the object boundary
  // sits at unit logarithmic capacity.
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(no + ni + 1, no + ni + 1);
  a.block(0, 0, no, no) = normal_derivative_trace(core, core, TraceSide::Outer);
  a.block(0, no, no, ni) = normal_derivative_trace(object, core, TraceSide::Transmission);
  a.block(no, 0, ni, no) = potential_trace(core, object);
  a.block(no, no, ni, ni) = assemble_slp(object);
  a.block(no, no + ni, ni, 1).setOnes();
  a.block(no + ni, no, 1, ni) = object.weights().matrix().transpose();

  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(no + ni + 1);
  for (int j = 0; j < ni; ++j) rhs[no + j] = H.value(object.node(j));

  const Eigen::FullPivLU<Eigen::MatrixXd> lu(a);
  if (!lu.isInvertible() || 1.0 / lu.rcond() > 1e12)
    throw std::runtime_error("interior mixed system is near-singular (core too close to object?)");
  const Eigen::VectorXd sol = lu.solve(rhs);

  InteriorMixedSolution ms;
  ms.sigma_o = sol.head(no);
  ms.sigma_i = sol.segment(no, ni);
  ms.constant = sol[no + ni];
  ms.dphi_dnu_i = normal_derivative_trace(core, object, TraceSide::Transmission) * ms.sigma_o +
                  normal_derivative_trace(object, object, TraceSide::Inner) * ms.sigma_i;

  const Eigen::VectorXd trace =
      a.block(no, 0, ni, no + ni + 1) * sol - rhs.segment(no, ni);
  ms.dirichlet_residual = trace.cwiseAbs().maxCoeff();
  ms.flux = (ms.dphi_dnu_i.array() * object.weights()).sum();
  return ms;
}

PermittivityFit optimize_permittivity(const Curve& core, const Curve& object,
                                      const HarmonicField& H, double eps_m, double lo,
                                      double hi) {
  if (!(0.0 < lo && lo < hi)) throw std::invalid_argument("interval must satisfy 0 < lo < hi");
  if (eps_m <= 0.0) throw std::invalid_argument("eps_m must be positive");

  const InteriorMixedSolution ms = solve_interior_mixed(core, object, H);
  const Eigen::VectorXd h = normal_data(H, object);
  const double gg = weighted_dot(ms.dphi_dnu_i, ms.dphi_dnu_i, object);
  const double hh = weighted_dot(h, h, object);
  // A constant background leaves only rounding noise in both fluxes.
  if (gg <= 1e-24 * std::max(1.0, hh))
    throw std::runtime_error("dphi/dnu vanishes on the object boundary (constant background?)");

  PermittivityFit fit;
  fit.dphi_dnu_i = ms.dphi_dnu_i;
  fit.eps_unclipped = eps_m * weighted_dot(ms.dphi_dnu_i, h, object) / gg;
  fit.eps_opt = clip(fit.eps_unclipped, lo, hi);
  fit.clipped = (fit.eps_opt != fit.eps_unclipped);
  const Eigen::VectorXd res = fit.eps_opt * ms.dphi_dnu_i - eps_m * h;
  fit.objective = weighted_dot(res, res, object);
  return fit;
}

NeumannComponent solve_interior_neumann(const Curve& object, const Curve& region,
                                        const Eigen::VectorXd& g_i,
                                        const Eigen::VectorXd& g_e) {
  const int ni = object.n(), ne = region.n();
  if (g_i.size() != ni || g_e.size() != ne)
    throw std::invalid_argument("Neumann data does not match curve node counts");

  Eigen::VectorXd gi = g_i, ge = g_e;
  NeumannComponent nc;
  // Both data pieces share one magnitude scale: the mixed RMS over the two
  // curves. A piece that cancels to rounding noise is compatible by fiat.
  const double rms =
      std::sqrt((weighted_dot(gi, gi, object) + weighted_dot(ge, ge, region)) /
                (object.perimeter() + region.perimeter()));
  const double scale_i = rms * std::sqrt(object.perimeter());
  const double scale_e = rms * std::sqrt(region.perimeter());
  nc.compat_fraction =
      std::max(project_mean_zero(gi, object, scale_i), project_mean_zero(ge, region, scale_e));
  if (nc.compat_fraction > 1e-8)
    throw std::runtime_error("Neumann data violates flux compatibility beyond 1e-8");

  // Annulus domain between the two curves: exterior trace on the object
  // boundary, interior trace on the region boundary. The continuous operator
  // has null vector (0, equilibrium density); the weighted gauge row picks a
  // unique least-squares solution.
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(ni + ne + 1, ni + ne);
  a.block(0, 0, ni, ni) = normal_derivative_trace(object, object, TraceSide::Outer);
  a.block(0, ni, ni, ne) = normal_derivative_trace(region, object, TraceSide::Transmission);
  a.block(ni, 0, ne, ni) = normal_derivative_trace(object, region, TraceSide::Transmission);
  a.block(ni, ni, ne, ne) = normal_derivative_trace(region, region, TraceSide::Inner);
  a.block(ni + ne, ni, 1, ne) = region.weights().matrix().transpose();

  Eigen::VectorXd rhs(ni + ne + 1);
  rhs << gi, ge, 0.0;

  const Eigen::VectorXd sol = a.colPivHouseholderQr().solve(rhs);
  if ((a * sol - rhs).norm() > 1e-8 * (1.0 + rhs.norm()))
    throw std::runtime_error("interior Neumann system inconsistent beyond gauge freedom");

  nc.psi_i = sol.head(ni);
  nc.psi_e = sol.tail(ne);
  nc.trace_e = potential_trace(object, region) * nc.psi_i + assemble_slp(region) * nc.psi_e;
  project_mean_zero(nc.trace_e, region);
  return nc;
}

PressureDecomposition solve_pressure_decomposition(const Curve& object, const Curve& region,
                                                   const SlipData& slip,
                                                   const HarmonicField& P) {
  if (slip.dphi_dnu_i.size() != object.n() || slip.dphi_dnu_e.size() != region.n())
    throw std::invalid_argument("slip data does not match curve node counts");

  PressureDecomposition d;
  d.p1 = solve_interior_neumann(object, region, Eigen::VectorXd::Zero(object.n()),
                                normal_data(P, region));
  d.p2 = solve_interior_neumann(object, region, -12.0 * slip.dphi_dnu_i,
                                -12.0 * slip.dphi_dnu_e);
  return d;
}

ZetaFit optimize_zeta(const PressureDecomposition& decomp, const Curve& region,
                      const HarmonicField& P, double lo, double hi) {
  if (!(lo < hi)) throw std::invalid_argument("interval must satisfy lo < hi");
  const int ne = region.n();
  if (decomp.p1.trace_e.size() != ne || decomp.p2.trace_e.size() != ne)
    throw std::invalid_argument("decomposition does not match region boundary");

  const Eigen::ArrayXd w = region.weights();
  Eigen::VectorXd pvals(ne);
  for (int j = 0; j < ne; ++j) pvals[j] = P.value(region.node(j));

  const Eigen::VectorXd& t1 = decomp.p1.trace_e;
  const Eigen::VectorXd& t2 = decomp.p2.trace_e;
  const double t22 = weighted_dot(t2, t2, region);
  if (t22 <= 1e-28 * region.perimeter())
    throw std::runtime_error("slip component has no effect on the region boundary");

  // t1, t2 are zero-mean on the boundary, so the 2x2 normal equations over
  // (zeta0, constant) decouple.
  const Eigen::VectorXd q = pvals - t1;
  ZetaFit fit;
  fit.zeta_unclipped = weighted_dot(t2, q, region) / t22;
  fit.zeta_opt = clip(fit.zeta_unclipped, lo, hi);
  fit.clipped = (fit.zeta_opt != fit.zeta_unclipped);
  fit.constant = (q.array() * w).sum() / w.sum();
  const Eigen::VectorXd res =
      t1 + fit.zeta_opt * t2 + Eigen::VectorXd::Constant(ne, fit.constant) - pvals;
  fit.objective = weighted_dot(res, res, region);
  return fit;
}

double golden_section_check(const std::function<double(double)>& cost, double lo, double hi,
                            double tol) {
  if (tol <= 0.0) throw std::invalid_argument("tolerance must be positive");
  if (!(lo < hi)) throw std::invalid_argument("interval must satisfy lo < hi");
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = cost(c), fd = cost(d);
  while (b - a > tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = cost(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = cost(d);
    }
  }
  return 0.5 * (a + b);
}

std::string to_string(SlipSource s) {
  return s == SlipSource::Exterior ? "exterior" : "background";
}

SlipSource parse_slip_source(const std::string& s) {
  if (s == "exterior") return SlipSource::Exterior;
  if (s == "background") return SlipSource::Background;
  throw std::invalid_argument("slip source must be 'exterior' or 'background'");
}

Certificate certify(const CloakConfig& optimized_cfg, double G, double F) {
  const ElectricSolution esol = solve_electric(optimized_cfg);
  const PressureSolution psol = solve_pressure(optimized_cfg, esol);
  const CloakErrorSummary errs = cloak_errors(optimized_cfg, esol, psol);

  Certificate cert;
  cert.sqrt_G = std::sqrt(std::max(G, 0.0));
  cert.sqrt_F = std::sqrt(std::max(F, 0.0));
  cert.max_phi_err = errs.max_phi_err;
  cert.max_p_err = errs.max_p_err;
  if (cert.sqrt_G > 1e-12) cert.C_e = cert.max_phi_err / cert.sqrt_G;
  if (cert.sqrt_F > 1e-12) cert.C_h = cert.max_p_err / cert.sqrt_F;
  return cert;
}

OptimizationReport optimize_cloak(const CloakConfig& cfg, SlipSource slip,
                                  std::optional<Interval> eps_interval,
                                  std::optional<Interval> zeta_interval) {
  OptimizationReport rep;
  rep.eps_m = cfg.eps_m;
  rep.eps_interval = eps_interval.value_or(Interval{1.01 * cfg.eps_m, 1e3 * cfg.eps_m});
  rep.zeta_interval = zeta_interval.value_or(Interval{0.0, 1e2});
  rep.slip_source = slip;

  const PermittivityFit pf = optimize_permittivity(cfg.core, cfg.object, cfg.H, cfg.eps_m,
                                                   rep.eps_interval.lo, rep.eps_interval.hi);
  rep.eps_opt = pf.eps_opt;
  rep.G = pf.objective;
  rep.eps_clipped = pf.clipped;

  CloakConfig tuned = cfg;
  tuned.eps_s = rep.eps_opt;

  SlipData sd;
  if (slip == SlipSource::Exterior) {
    const ElectricSolution esol = solve_electric(tuned);
    sd.dphi_dnu_i = esol.dphi_dnu_i_outer;
    sd.dphi_dnu_e = esol.dphi_dnu_e;
  } else {
    sd.dphi_dnu_i = normal_data(cfg.H, cfg.object);
    sd.dphi_dnu_e = normal_data(cfg.H, cfg.region);
  }

  const PressureDecomposition decomp =
      solve_pressure_decomposition(cfg.object, cfg.region, sd, cfg.P);
  const ZetaFit zf =
      optimize_zeta(decomp, cfg.region, cfg.P, rep.zeta_interval.lo, rep.zeta_interval.hi);
  rep.zeta_opt = zf.zeta_opt;
  rep.F = zf.objective;
  rep.zeta_clipped = zf.clipped;
  rep.gauge_constant = zf.constant;

  tuned.zeta0 = rep.zeta_opt;
  rep.certificate = certify(tuned, rep.G, rep.F);
  return rep;
}

} // namespace eocloak
