#include "eocloak/layerpot.hpp"

#include <cmath>
#include <stdexcept>

namespace eocloak {

namespace {

constexpr double kInvTwoPi = 1.0 / (2.0 * M_PI);

// Kress weights R_k for the integral of f(s) * ln(4 sin^2((t-s)/2)) over
// [0, 2*pi) with N = 2n equispaced nodes.
Eigen::ArrayXd kress_log_weights(int n_nodes) {
  const int half = n_nodes / 2;
  Eigen::ArrayXd r(n_nodes);
  for (int k = 0; k < n_nodes; ++k) {
    double acc = 0.0;
    for (int m = 1; m < half; ++m)
      acc += std::cos(m * k * M_PI / half) / m;
    r[k] = -(2.0 * M_PI / half) * acc - (M_PI / (half * half)) * ((k % 2 == 0) ? 1.0 : -1.0);
  }
  return r;
}

} // namespace

Eigen::MatrixXd assemble_slp(const Curve& curve) {
  const int m = curve.n();
  if (m % 2 != 0) throw std::invalid_argument("single-layer assembly requires even N");
  const Eigen::ArrayXd r = kress_log_weights(m);
  Eigen::MatrixXd a(m, m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      double smooth;
      if (i == j) {
        smooth = std::log(curve.speed[i]);
      } else {
        const double dxy = std::hypot(curve.x[i] - curve.x[j], curve.y[i] - curve.y[j]);
        const double s = 2.0 * std::abs(std::sin(0.5 * curve.h * (i - j)));
        smooth = std::log(dxy / s);
      }
      a(i, j) = (0.25 / M_PI * r[std::abs(i - j)] + curve.h * kInvTwoPi * smooth) * curve.speed[j];
    }
  }
  return a;
}

Eigen::MatrixXd assemble_np_adjoint(const Curve& curve) {
  const int m = curve.n();
  Eigen::MatrixXd a(m, m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      double kernel;
      if (i == j) {
        kernel = curve.kappa[i] * (0.25 / M_PI);
      } else {
        const double rx = curve.x[i] - curve.x[j];
        const double ry = curve.y[i] - curve.y[j];
        const double r2 = rx * rx + ry * ry;
        kernel = kInvTwoPi * (rx * curve.nx[i] + ry * curve.ny[i]) / r2;
      }
      a(i, j) = kernel * curve.speed[j] * curve.h;
    }
  }
  return a;
}

KernelMatrixSet assemble_kernel_matrices(const Curve& curve) {
  return {assemble_slp(curve), assemble_np_adjoint(curve)};
}

Eigen::MatrixXd normal_derivative_trace(const Curve& source, const Curve& target,
                                        TraceSide side) {
  // Same discretization grid and nodes => self-interaction.
  const bool self = (&source == &target) ||
                    (source.n() == target.n() && source.x.isApprox(target.x) &&
                     source.y.isApprox(target.y));
  if (self) {
    Eigen::MatrixXd a = assemble_np_adjoint(source);
    const double jump = (side == TraceSide::Outer)   ? 0.5
                        : (side == TraceSide::Inner) ? -0.5
                                                     : 0.0;
    a.diagonal().array() += jump;
    return a;
  }
  const int rows = target.n(), cols = source.n();
  Eigen::MatrixXd a(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      const double rx = target.x[i] - source.x[j];
      const double ry = target.y[i] - source.y[j];
      const double r2 = rx * rx + ry * ry;
      if (r2 == 0.0)
        throw std::invalid_argument("target node coincides with a source node");
      a(i, j) = kInvTwoPi * (rx * target.nx[i] + ry * target.ny[i]) / r2 *
                source.speed[j] * source.h;
    }
  }
  return a;
}

Eigen::MatrixXd potential_trace(const Curve& source, const Curve& target) {
  const int rows = target.n(), cols = source.n();
  Eigen::MatrixXd a(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      const double d = std::hypot(target.x[i] - source.x[j], target.y[i] - source.y[j]);
      if (d == 0.0)
        throw std::invalid_argument("target node coincides with a source node");
      a(i, j) = kInvTwoPi * std::log(d) * source.speed[j] * source.h;
    }
  }
  return a;
}

EvalOperator build_eval_operator(const Curve& source, const std::vector<Vec2>& points) {
  const int rows = static_cast<int>(points.size());
  const int cols = source.n();
  EvalOperator op;
  op.value.resize(rows, cols);
  op.grad_x.resize(rows, cols);
  op.grad_y.resize(rows, cols);
  op.near_boundary.resize(rows);
  for (int i = 0; i < rows; ++i) {
    op.near_boundary[i] = source.in_exclusion_band(points[i]);
    for (int j = 0; j < cols; ++j) {
      const double rx = points[i].x - source.x[j];
      const double ry = points[i].y - source.y[j];
      const double r2 = rx * rx + ry * ry;
      const double w = source.speed[j] * source.h;
      op.value(i, j) = kInvTwoPi * 0.5 * std::log(r2) * w;
      op.grad_x(i, j) = kInvTwoPi * rx / r2 * w;
      op.grad_y(i, j) = kInvTwoPi * ry / r2 * w;
    }
  }
  return op;
}

PotentialValues eval_potential(const Curve& source, const Eigen::VectorXd& density,
                               const std::vector<Vec2>& points) {
  const EvalOperator op = build_eval_operator(source, points);
  return {op.value * density, op.grad_x * density, op.grad_y * density, op.near_boundary};
}

} // namespace eocloak
