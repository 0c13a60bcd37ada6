#pragma once

#include <Eigen/Dense>
#include <vector>

#include "eocloak/geometry.hpp"

namespace eocloak {

/// Boundary trace of the single-layer potential S_Gamma: dense N x N matrix
/// acting on node-sampled densities. The log singularity is handled with the
/// spectrally accurate Kress splitting (even N required).
Eigen::MatrixXd assemble_slp(const Curve& curve);

/// Neumann-Poincare operator K*_Gamma. The diagonal carries the continuous
/// limit kappa/(4*pi) of the kernel.
Eigen::MatrixXd assemble_np_adjoint(const Curve& curve);

struct KernelMatrixSet {
  Eigen::MatrixXd slp;
  Eigen::MatrixXd np_adjoint;
};

KernelMatrixSet assemble_kernel_matrices(const Curve& curve);

enum class TraceSide { Inner, Outer, Transmission };

/// Matrix mapping a density on `source` to d/dnu of its single-layer
/// potential on `target`. For source == target this is the jump formula
/// (+-1/2 I + K*); Transmission selects the average (plain K*). For distinct
/// curves the kernel is smooth and `side` is ignored.
Eigen::MatrixXd normal_derivative_trace(const Curve& source, const Curve& target,
                                        TraceSide side);

/// Boundary value of S_source on the nodes of a distinct target curve.
Eigen::MatrixXd potential_trace(const Curve& source, const Curve& target);

struct EvalOperator {
  Eigen::MatrixXd value;
  Eigen::MatrixXd grad_x;
  Eigen::MatrixXd grad_y;
  std::vector<bool> near_boundary; // inside the 5h exclusion band
};

EvalOperator build_eval_operator(const Curve& source, const std::vector<Vec2>& points);

struct PotentialValues {
  Eigen::VectorXd value;
  Eigen::VectorXd grad_x;
  Eigen::VectorXd grad_y;
  std::vector<bool> near_boundary;
};

PotentialValues eval_potential(const Curve& source, const Eigen::VectorXd& density,
                               const std::vector<Vec2>& points);

} // namespace eocloak
