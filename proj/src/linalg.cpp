#include "lrvp/linalg.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/SVD>

namespace lrvp {

Matrix pseudo_inverse(const Matrix& A, double rcond) {
  if (A.size() == 0) return Matrix::Zero(A.cols(), A.rows());
  Eigen::JacobiSVD<Matrix> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Vector& s = svd.singularValues();
  const double cutoff = rcond * (s.size() > 0 ? s[0] : 0.0);
  Vector inv = Vector::Zero(s.size());
  for (Index i = 0; i < s.size(); ++i)
    if (s[i] > cutoff && s[i] > 0.0) inv[i] = 1.0 / s[i];
  return svd.matrixV() * inv.asDiagonal() * svd.matrixU().transpose();
}

LeastSquaresSolution min_norm_solve(const Matrix& A, const Vector& b, double rcond) {
  if (A.rows() != b.size()) throw std::invalid_argument("min_norm_solve: row/rhs size mismatch");
  LeastSquaresSolution out;
  if (A.size() == 0) {
    out.x = Vector::Zero(A.cols());
    out.residual = b.norm();
    out.rank_deficient = A.rows() > 0;
    return out;
  }
  Eigen::JacobiSVD<Matrix> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Vector& s = svd.singularValues();
  const double cutoff = rcond * s[0];
  Vector coeff = svd.matrixU().transpose() * b;
  for (Index i = 0; i < s.size(); ++i) {
    if (s[i] > cutoff && s[i] > 0.0) {
      coeff[i] /= s[i];
      ++out.rank;
    } else {
      coeff[i] = 0.0;
    }
  }
  out.x = svd.matrixV() * coeff;
  out.residual = (A * out.x - b).norm();
  out.rank_deficient = out.rank < A.rows();
  return out;
}

Vector fourier_mode(Index n, Index t) {
  if (t < 0 || t >= n) throw std::invalid_argument("fourier_mode: index out of range");
  Vector u(n);
  if (t == 0) return Vector::Ones(n);
  const Index k = (t + 1) / 2;
  const bool cosine = (t % 2 == 1);
  for (Index m = 0; m < n; ++m) {
    const double phase = 2.0 * std::numbers::pi * static_cast<double>(k * m) / static_cast<double>(n);
    u[m] = cosine ? std::cos(phase) : std::sin(phase);
  }
  return u;
}

} // namespace lrvp
