#pragma once

#include <complex>

#include <Eigen/Core>

namespace lrvp::detail {

using CVector = Eigen::VectorXcd;

// Real-to-complex transform, n/2+1 unnormalized coefficients.
CVector rfft(const Eigen::Ref<const Eigen::VectorXd>& in);

// Inverse of rfft including the 1/n normalization.
Eigen::VectorXd irfft(const CVector& in, Eigen::Index n);

// Effective wavenumber of bin m of an n-point real transform on a period
// of length L; the Nyquist bin maps to zero.
inline double bin_wavenumber(Eigen::Index m, Eigen::Index n, double L) {
  if (n % 2 == 0 && m == n / 2) return 0.0;
  return 2.0 * 3.14159265358979323846 * static_cast<double>(m) / L;
}

} // namespace lrvp::detail
