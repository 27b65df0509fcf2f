#pragma once

#include <string>

#include "lrvp/substep.hpp"

namespace lrvp {

struct CorrectionMode {
  enum class Kind { None, Local, Global, Combined };
  Kind kind = Kind::None;
  double weight = 1.0; // weight of the local rows, Combined only

  static CorrectionMode none() { return {Kind::None, 1.0}; }
  static CorrectionMode local() { return {Kind::Local, 1.0}; }
  static CorrectionMode global() { return {Kind::Global, 1.0}; }
  static CorrectionMode combined(double w);

  std::string name() const;
};

/// Right-hand sides of the per-row systems [alpha; beta] lambda_{i,.} = (b_i, d_i).
struct LocalRhs {
  Vector b; // projected continuity
  Vector d; // projected momentum balance
};

struct CorrectionSolution {
  Matrix lambda;          // r x r, lambda(i, j) couples X_i and V_j
  double residual = 0.0;  // residual of the solved (possibly least-squares) system
  bool degenerate = false;
};

/// Discrete right-hand side after a K substep (basis X0 = ctx.X, moments of V0).
LocalRhs local_rhs_step1(const SubstepResult& res, const SubstepContext& ctx, double tau);
/// After an S substep; carries the sign structure of the backward S flow.
LocalRhs local_rhs_step2(const SubstepResult& res, const SubstepContext& ctx, double tau);
/// After an L substep.
LocalRhs local_rhs_step3(const SubstepResult& res, const SubstepContext& ctx, double tau);
/// Dispatch on res.kind.
LocalRhs local_rhs(const SubstepResult& res, const SubstepContext& ctx, double tau);

/// 2 x r matrix with rows alpha and beta.
Matrix local_matrix(const VMoments& vm);

/// 2 x r^2 rows kappa (x) alpha and kappa (x) beta acting on the row-major
/// flattening of lambda.
Matrix global_rows(const Vector& kappa, const VMoments& vm);

/// Total mass and momentum represented by the substep unknowns `u`.
Eigen::Vector2d substep_invariants(SubstepKind kind, const Matrix& u, const SubstepContext& ctx);

/// Rates of change of total mass and momentum during the substep, with the
/// sign such that global_rows * vec(lambda) = global_rhs restores them.
Eigen::Vector2d global_rhs(const SubstepResult& res, const SubstepContext& ctx, double tau);

CorrectionSolution solve_local(const Matrix& A, const LocalRhs& rhs);
CorrectionSolution solve_global(const Matrix& rows, const Vector& rhs);
CorrectionSolution solve_combined(const Matrix& A, const LocalRhs& rhs, const Matrix& rows,
                                  const Vector& global, double w);

/// K: K1 = K* + tau X0 lambda;  S: S1 = S* - tau lambda;  L: L1 = L* + tau V0 lambda^T.
Matrix apply_correction(SubstepKind kind, const Matrix& star, const Matrix& basis,
                        const Matrix& lambda, double tau);

/// Solves the system selected by `mode` for one substep.
CorrectionSolution solve_correction(const CorrectionMode& mode, const SubstepResult& res,
                                    const SubstepContext& ctx, double tau);

} // namespace lrvp
