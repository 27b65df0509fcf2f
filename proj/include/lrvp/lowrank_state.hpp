#pragma once

#include <functional>
#include <numbers>
#include <vector>

#include "lrvp/grid.hpp"

namespace lrvp {

/// f(x, v) = sum_ij X_i(x) S_ij V_j(v) sampled on a tensor grid, with
/// dx * X^T X = I and dv * V^T V = I.
struct LowRankState {
  PeriodicGrid gx;
  PeriodicGrid gv;
  Matrix X; // n_x x r
  Matrix S; // r x r
  Matrix V; // n_v x r

  Index rank() const { return S.rows(); }
};

/// Two-stream instability setup. `amplitude` is the density perturbation,
/// not the velocity moment alpha.
struct Scenario {
  double amplitude = 1e-3;
  double wavenumber = 0.2;
  double beam_speed = 2.4;
  double x_min = 0.0;
  double x_max = 10.0 * std::numbers::pi;
  double v_min = -9.0;
  double v_max = 9.0;

  void validate() const;
  double initial_value(double x, double v) const;
};

using PhaseSpaceFunction = std::function<double(double x, double v)>;

/// Best rank-r approximation (in the grid-weighted Frobenius norm) of f0
/// sampled on gx x gv. Directions beyond the numerical rank of f0 are
/// filled with Fourier modes and carry zero coefficients.
LowRankState initialize_from_function(const PhaseSpaceFunction& f0, const PeriodicGrid& gx,
                                      const PeriodicGrid& gv, Index r);

struct Orthonormalization {
  Matrix Q;
  Matrix R;
  std::vector<Index> filled; // columns replaced by the deterministic fill
};

/// Weighted QR: columns = Q R with weight * Q^T Q = I and R upper triangular
/// with nonnegative diagonal. Numerically dependent columns are replaced by
/// Fourier modes orthogonalized against the preceding ones (R_jj = 0).
Orthonormalization orthonormalize(const Matrix& columns, double weight);

/// max |weight * Q^T Q - I|
double orthonormality_defect(const Matrix& Q, double weight);

/// rho(x) = sum_ij X_i(x) S_ij alpha_j
GridFunction density(const LowRankState& state, const Vector& alpha);

Matrix evaluate_full(const LowRankState& state);

} // namespace lrvp
