#include "eocloak/exterior_solver.hpp"

#include <Eigen/LU>
#include <stdexcept>

namespace eocloak {

namespace {

Eigen::VectorXd normal_data(const HarmonicField& f, const Curve& c, double sign = 1.0) {
  Eigen::VectorXd v(c.n());
  for (int j = 0; j < c.n(); ++j) v[j] = sign * dot(f.gradient(c.node(j)), c.normal(j));
  return v;
}

void project_mean_zero(Eigen::VectorXd& v, const Curve& c) {
  const Eigen::ArrayXd w = c.weights();
  v.array() -= (v.array() * w).sum() / w.sum();
}

} // namespace

ElectricSolution solve_electric(const CloakConfig& cfg) {
  validate_config(cfg);
  const Curve& go = cfg.core;
  const Curve& gi = cfg.object;
  const int no = go.n(), ni = gi.n();
  const double lambda = cfg.lambda();

  Eigen::MatrixXd a(no + ni, no + ni);
  a.topLeftCorner(no, no) = normal_derivative_trace(go, go, TraceSide::Outer);
  a.topRightCorner(no, ni) = normal_derivative_trace(gi, go, TraceSide::Transmission);
  a.bottomLeftCorner(ni, no) = normal_derivative_trace(go, gi, TraceSide::Transmission);
  a.bottomRightCorner(ni, ni) = assemble_np_adjoint(gi);
  a.bottomRightCorner(ni, ni).diagonal().array() += lambda;

  Eigen::VectorXd rhs(no + ni);
  Eigen::VectorXd rhs_o = normal_data(cfg.H, go, -1.0);
  Eigen::VectorXd rhs_i = normal_data(cfg.H, gi, -1.0);
  project_mean_zero(rhs_o, go);
  project_mean_zero(rhs_i, gi);
  rhs << rhs_o, rhs_i;

  Eigen::PartialPivLU<Eigen::MatrixXd> lu(a);
  const Eigen::VectorXd sol = lu.solve(rhs);
  if ((a * sol - rhs).norm() > 1e-8 * (1.0 + rhs.norm()))
    throw std::runtime_error("electric transmission system is singular or ill-conditioned");

  ElectricSolution es;
  es.phi_o = sol.head(no);
  es.phi_i = sol.tail(ni);
  project_mean_zero(es.phi_o, go);
  project_mean_zero(es.phi_i, gi);

  const Curve& ge = cfg.region;
  es.dphi_dnu_i_outer = normal_data(cfg.H, gi) +
                        normal_derivative_trace(go, gi, TraceSide::Transmission) * es.phi_o +
                        normal_derivative_trace(gi, gi, TraceSide::Outer) * es.phi_i;
  es.dphi_dnu_i_inner = normal_data(cfg.H, gi) +
                        normal_derivative_trace(go, gi, TraceSide::Transmission) * es.phi_o +
                        normal_derivative_trace(gi, gi, TraceSide::Inner) * es.phi_i;
  es.dphi_dnu_e = normal_data(cfg.H, ge) +
                  normal_derivative_trace(go, ge, TraceSide::Transmission) * es.phi_o +
                  normal_derivative_trace(gi, ge, TraceSide::Transmission) * es.phi_i;
  return es;
}

PressureSolution solve_pressure(const CloakConfig& cfg, const ElectricSolution& esol) {
  const Curve& gi = cfg.object;
  const Curve& ge = cfg.region;
  if (esol.dphi_dnu_i_outer.size() != gi.n() || esol.dphi_dnu_e.size() != ge.n())
    throw std::invalid_argument("electric solution does not match config curves");

  PressureSolution ps;
  // psi_e is assigned, not solved (slip jump on Gamma_e).
  ps.psi_e = 12.0 * cfg.zeta0 * esol.dphi_dnu_e;
  project_mean_zero(ps.psi_e, ge);

  Eigen::VectorXd rhs = -normal_data(cfg.P, gi) - 12.0 * cfg.zeta0 * esol.dphi_dnu_i_outer -
                        normal_derivative_trace(ge, gi, TraceSide::Transmission) * ps.psi_e;
  project_mean_zero(rhs, gi);

  Eigen::MatrixXd a = normal_derivative_trace(gi, gi, TraceSide::Outer);
  ps.psi_i = Eigen::PartialPivLU<Eigen::MatrixXd>(a).solve(rhs);
  project_mean_zero(ps.psi_i, gi);
  return ps;
}

std::string to_string(Region r) {
  switch (r) {
    case Region::Core: return "core";
    case Region::Shell: return "shell";
    case Region::CloakAnnulus: return "cloak-annulus";
    case Region::Exterior: return "exterior";
  }
  return "?";
}

std::vector<FieldSample> eval_fields(const CloakConfig& cfg, const ElectricSolution& esol,
                                     const PressureSolution& psol,
                                     const std::vector<Vec2>& points) {
  const EvalOperator so = build_eval_operator(cfg.core, points);
  const EvalOperator si = build_eval_operator(cfg.object, points);
  const EvalOperator se = build_eval_operator(cfg.region, points);

  const Eigen::VectorXd phi_val = so.value * esol.phi_o + si.value * esol.phi_i;
  const Eigen::VectorXd phi_gx = so.grad_x * esol.phi_o + si.grad_x * esol.phi_i;
  const Eigen::VectorXd phi_gy = so.grad_y * esol.phi_o + si.grad_y * esol.phi_i;
  const Eigen::VectorXd p_val = si.value * psol.psi_i + se.value * psol.psi_e;
  const Eigen::VectorXd p_gx = si.grad_x * psol.psi_i + se.grad_x * psol.psi_e;
  const Eigen::VectorXd p_gy = si.grad_y * psol.psi_i + se.grad_y * psol.psi_e;

  std::vector<FieldSample> out(points.size());
  for (size_t k = 0; k < points.size(); ++k) {
    FieldSample& s = out[k];
    s.point = points[k];
    s.near_boundary = so.near_boundary[k] || si.near_boundary[k] || se.near_boundary[k];
    if (cfg.core.contains(s.point))
      s.region = Region::Core;
    else if (cfg.object.contains(s.point))
      s.region = Region::Shell;
    else if (cfg.region.contains(s.point))
      s.region = Region::CloakAnnulus;
    else
      s.region = Region::Exterior;

    if (s.region != Region::Core) {
      s.phi = cfg.H.value(s.point) + phi_val[k];
      const Vec2 gh = cfg.H.gradient(s.point);
      s.grad_phi = Vec2{gh.x + phi_gx[k], gh.y + phi_gy[k]};
    }
    if (s.region == Region::CloakAnnulus || s.region == Region::Exterior) {
      s.p = cfg.P.value(s.point) + p_val[k];
      const Vec2 gp = cfg.P.gradient(s.point);
      s.grad_p = Vec2{gp.x + p_gx[k], gp.y + p_gy[k]};
      const double zeta = (s.region == Region::CloakAnnulus) ? cfg.zeta0 : 0.0;
      s.u_aver = Vec2{-s.grad_p->x / 12.0 - zeta * s.grad_phi->x,
                      -s.grad_p->y / 12.0 - zeta * s.grad_phi->y};
    }
  }
  return out;
}

GridExport export_grid(const CloakConfig& cfg, const ElectricSolution& esol,
                       const PressureSolution& psol, const GridWindow& window,
                       int nx, int ny) {
  if (nx < 2 || ny < 2) throw std::invalid_argument("grid resolution must be >= 2 per axis");
  if (!(window.x1 > window.x0) || !(window.y1 > window.y0))
    throw std::invalid_argument("empty grid window");

  std::vector<Vec2> pts;
  pts.reserve(size_t(nx) * ny);
  for (int iy = 0; iy < ny; ++iy) {
    const double yv = window.y0 + (window.y1 - window.y0) * iy / (ny - 1);
    for (int ix = 0; ix < nx; ++ix) {
      const double xv = window.x0 + (window.x1 - window.x0) * ix / (nx - 1);
      pts.push_back({xv, yv});
    }
  }
  const auto samples = eval_fields(cfg, esol, psol, pts);

  GridExport g;
  g.window = window;
  g.nx = nx;
  g.ny = ny;
  g.exclusion_band = 5.0;
  g.rows.reserve(samples.size());
  for (const FieldSample& s : samples) {
    GridRow row;
    row.x = s.point.x;
    row.y = s.point.y;
    row.region = s.region;
    row.excluded = s.near_boundary;
    if (!row.excluded) {
      if (s.phi) {
        row.phi = *s.phi;
        row.phi_err = *s.phi - cfg.H.value(s.point);
      }
      if (s.p) {
        row.p = *s.p;
        row.p_err = *s.p - cfg.P.value(s.point);
      }
      if (s.u_aver) {
        row.ux = s.u_aver->x;
        row.uy = s.u_aver->y;
      }
    }
    g.rows.push_back(row);
  }
  return g;
}

} // namespace eocloak
