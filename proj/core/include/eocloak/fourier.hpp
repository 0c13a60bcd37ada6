#pragma once

#include <Eigen/Dense>

namespace eocloak::detail {

/// Spectral derivative of equispaced periodic samples on [0, 2*pi).
Eigen::ArrayXd periodic_derivative(const Eigen::ArrayXd& f);

/// Periodic antiderivative (zero-mean input required; the Nyquist and
/// constant modes are dropped). Result has zero mean.
Eigen::ArrayXd periodic_antiderivative(const Eigen::ArrayXd& f);

} // namespace eocloak::detail
