#include "eocloak/fourier.hpp"

#include <complex>
#include <vector>

namespace eocloak::detail {

namespace {

// Naive DFT; N stays small (<= a few thousand) so O(N^2) is fine and keeps
// the core dependency-free.
std::vector<std::complex<double>> dft(const Eigen::ArrayXd& f) {
  const int n = static_cast<int>(f.size());
  std::vector<std::complex<double>> c(n);
  const double w = 2.0 * M_PI / n;
  for (int k = 0; k < n; ++k) {
    std::complex<double> acc = 0.0;
    for (int j = 0; j < n; ++j)
      acc += f[j] * std::polar(1.0, -w * double(k) * double(j));
    c[k] = acc / double(n);
  }
  return c;
}

Eigen::ArrayXd idft_real(const std::vector<std::complex<double>>& c) {
  const int n = static_cast<int>(c.size());
  Eigen::ArrayXd f(n);
  const double w = 2.0 * M_PI / n;
  for (int j = 0; j < n; ++j) {
    std::complex<double> acc = 0.0;
    for (int k = 0; k < n; ++k)
      acc += c[k] * std::polar(1.0, w * double(k) * double(j));
    f[j] = acc.real();
  }
  return f;
}

// Signed wavenumber of DFT bin k for even N; Nyquist treated separately.
int signed_mode(int k, int n) { return (k <= n / 2) ? k : k - n; }

} // namespace

Eigen::ArrayXd periodic_derivative(const Eigen::ArrayXd& f) {
  const int n = static_cast<int>(f.size());
  auto c = dft(f);
  for (int k = 0; k < n; ++k) {
    const int m = signed_mode(k, n);
    if (n % 2 == 0 && k == n / 2) {
      c[k] = 0.0; // Nyquist mode has no well-defined derivative sign
    } else {
      c[k] *= std::complex<double>(0.0, double(m));
    }
  }
  return idft_real(c);
}

Eigen::ArrayXd periodic_antiderivative(const Eigen::ArrayXd& f) {
  const int n = static_cast<int>(f.size());
  auto c = dft(f);
  for (int k = 0; k < n; ++k) {
    const int m = signed_mode(k, n);
    if (m == 0 || (n % 2 == 0 && k == n / 2)) {
      c[k] = 0.0;
    } else {
      c[k] /= std::complex<double>(0.0, double(m));
    }
  }
  return idft_real(c);
}

} // namespace eocloak::detail
