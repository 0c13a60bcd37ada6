#pragma once

#include <functional>
#include <optional>

#include "eocloak/exterior_solver.hpp"
#include "eocloak/metrics.hpp"

namespace eocloak {

/// Mixed boundary value problem in the shell D \ B: harmonic, insulated on
/// the core boundary, matching H on the object boundary. Represented as
/// S_B[sigma_o] + S_D[sigma_i] + constant with mean-zero sigma_i.
struct InteriorMixedSolution {
  Eigen::VectorXd sigma_o;
  Eigen::VectorXd sigma_i;
  double constant = 0.0;
  Eigen::VectorXd dphi_dnu_i;       // shell-side normal derivative on the object boundary
  double dirichlet_residual = 0.0;  // max |phi - H| on the object boundary
  double flux = 0.0;                // integral of dphi/dnu over the object boundary
};

InteriorMixedSolution solve_interior_mixed(const Curve& core, const Curve& object,
                                           const HarmonicField& H);

struct PermittivityFit {
  double eps_opt = 0.0;
  double objective = 0.0; // G at eps_opt
  double eps_unclipped = 0.0;
  bool clipped = false;
  Eigen::VectorXd dphi_dnu_i;
};

/// Closed-form minimizer of the exact quadratic
/// G(eps_s) = ||eps_s dphi/dnu - eps_m dH/dnu||^2 on the object boundary.
PermittivityFit optimize_permittivity(const Curve& core, const Curve& object,
                                      const HarmonicField& H, double eps_m, double lo,
                                      double hi);

/// One interior Neumann solution in the annulus Omega \ D, gauge-fixed to a
/// zero-mean trace on the region boundary.
struct NeumannComponent {
  Eigen::VectorXd psi_i;
  Eigen::VectorXd psi_e;
  Eigen::VectorXd trace_e;        // zero-mean boundary values on the region boundary
  double compat_fraction = 0.0;   // mass removed by projection, relative to data norm
};

/// Neumann data g_i, g_e are d/dnu values with the usual outward normals of
/// each curve; each piece must be (numerically) mean-free per curve.
NeumannComponent solve_interior_neumann(const Curve& object, const Curve& region,
                                        const Eigen::VectorXd& g_i,
                                        const Eigen::VectorXd& g_e);

/// Slip data dphi/dnu on the two boundaries of the pressure annulus.
struct SlipData {
  Eigen::VectorXd dphi_dnu_i;
  Eigen::VectorXd dphi_dnu_e;
};

/// p = p1 + zeta0 * p2 up to a constant: p1 carries the background pressure
/// flux on the region boundary, p2 the per-unit-zeta slip on both boundaries.
struct PressureDecomposition {
  NeumannComponent p1;
  NeumannComponent p2;
};

PressureDecomposition solve_pressure_decomposition(const Curve& object, const Curve& region,
                                                   const SlipData& slip,
                                                   const HarmonicField& P);

struct ZetaFit {
  double zeta_opt = 0.0;
  double objective = 0.0; // F at (zeta_opt, constant)
  double zeta_unclipped = 0.0;
  bool clipped = false;
  double constant = 0.0; // optimal additive gauge constant
};

/// Joint least squares over (zeta0, constant) of
/// ||p1 + zeta0 p2 + c - P||^2 on the region boundary; zeta0 clipped to
/// [lo, hi] with the constant re-optimized after clipping.
ZetaFit optimize_zeta(const PressureDecomposition& decomp, const Curve& region,
                      const HarmonicField& P, double lo, double hi);

/// Scalar golden-section search; independent cross-check of the closed-form
/// quadratic optima (the objectives are strictly convex).
double golden_section_check(const std::function<double(double)>& cost, double lo, double hi,
                            double tol);

enum class SlipSource { Exterior, Background };

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

/// Empirical error-bound record: boundary residuals next to measured
/// exterior sup-errors, and their ratios where defined.
struct Certificate {
  double sqrt_G = 0.0;
  double sqrt_F = 0.0;
  double max_phi_err = 0.0; // sampling annulus outside D
  double max_p_err = 0.0;   // sampling annulus outside Omega
  std::optional<double> C_e; // max_phi_err / sqrt_G, absent when residual ~ 0
  std::optional<double> C_h; // max_p_err / sqrt_F, absent when residual ~ 0
};

/// Solves the full coupled exterior problem at the given material values and
/// relates the boundary residuals to measured exterior errors.
Certificate certify(const CloakConfig& optimized_cfg, double G, double F);

struct OptimizationReport {
  double eps_m = 1.0;
  double eps_opt = 0.0;
  double G = 0.0;
  double zeta_opt = 0.0;
  double F = 0.0;
  Interval eps_interval;
  Interval zeta_interval;
  bool eps_clipped = false;
  bool zeta_clipped = false;
  double gauge_constant = 0.0;
  SlipSource slip_source = SlipSource::Exterior;
  Certificate certificate;
};

std::string to_string(SlipSource s);
SlipSource parse_slip_source(const std::string& s);

/// Full two-stage pipeline: permittivity fit on the shell, then zeta fit on
/// the pressure annulus with slip taken either from the exterior transmission
/// solve at eps_opt or from the background field. Material scalars in `cfg`
/// are ignored apart from eps_m.
OptimizationReport optimize_cloak(const CloakConfig& cfg,
                                  SlipSource slip = SlipSource::Exterior,
                                  std::optional<Interval> eps_interval = std::nullopt,
                                  std::optional<Interval> zeta_interval = std::nullopt);

} // namespace eocloak
