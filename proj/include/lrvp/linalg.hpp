#pragma once

#include "lrvp/grid.hpp"

namespace lrvp {

/// Singular values below this fraction of the largest are treated as zero
/// in every pseudo-inverse.
inline constexpr double pinv_rcond = 1e-12;

struct LeastSquaresSolution {
  Vector x;
  double residual = 0.0; // ||A x - b||_2
  Index rank = 0;
  bool rank_deficient = false; // numerical rank below the row count
};

/// Minimal-Euclidean-norm least-squares solution of A x = b via the SVD
/// pseudo-inverse.
LeastSquaresSolution min_norm_solve(const Matrix& A, const Vector& b, double rcond = pinv_rcond);

Matrix pseudo_inverse(const Matrix& A, double rcond = pinv_rcond);

/// Column t of the deterministic completion basis on n points:
/// 1, cos(2 pi m/n), sin(2 pi m/n), cos(4 pi m/n), ...
Vector fourier_mode(Index n, Index t);

} // namespace lrvp
