#include "lrvp/conservation.hpp"

#include <sstream>
#include <stdexcept>

#include <Eigen/SVD>

#include "lrvp/linalg.hpp"

namespace lrvp {

const char* to_string(SubstepKind kind) {
  switch (kind) {
    case SubstepKind::K: return "K";
    case SubstepKind::S: return "S";
    case SubstepKind::L: return "L";
  }
  return "?";
}

CorrectionMode CorrectionMode::combined(double w) {
  if (!(w >= 0.0)) throw std::invalid_argument("CorrectionMode: combined weight must be nonnegative");
  return {Kind::Combined, w};
}

std::string CorrectionMode::name() const {
  switch (kind) {
    case Kind::None: return "none";
    case Kind::Local: return "local";
    case Kind::Global: return "global";
    case Kind::Combined: {
      std::ostringstream os;
      os << "combined(w=" << weight << ")";
      return os.str();
    }
  }
  return "?";
}

namespace {

void check_tau(double tau) {
  if (!(tau > 0.0)) throw std::invalid_argument("correction right-hand side: tau must be positive");
}

void check_shapes(const SubstepResult& res) {
  if (res.star.rows() != res.start.rows() || res.star.cols() != res.start.cols())
    throw std::invalid_argument("SubstepResult: star and start shapes differ");
}

struct VelocityIntegrals {
  Vector m0; // int L_i dv
  Vector m1; // int v L_i dv
  Vector m2; // int v^2 L_i dv
};

VelocityIntegrals velocity_integrals(const Matrix& L, const PeriodicGrid& gv) {
  const double dv = gv.dx();
  const Vector v = gv.nodes();
  return {dv * L.colwise().sum().transpose(), dv * (L.transpose() * v),
          dv * (L.transpose() * v.cwiseAbs2())};
}

} // namespace

LocalRhs local_rhs_step1(const SubstepResult& res, const SubstepContext& ctx, double tau) {
  check_tau(tau);
  check_shapes(res);
  const double dx = ctx.gx.dx();
  const Matrix& X0 = ctx.X;
  const Matrix& K0 = res.start;
  const Matrix rate = dx * (X0.transpose() * (res.star - K0)) / tau;
  const Matrix flux = dx * (X0.transpose() * spectral_derivative_columns(ctx.gx, K0));
  const Matrix force = dx * (X0.transpose() * ctx.field.values.asDiagonal() * K0);
  const VMoments& vm = ctx.vm;
  return {-rate * vm.alpha - flux * vm.beta, -rate * vm.beta - flux * vm.gamma - force * vm.alpha};
}

LocalRhs local_rhs_step2(const SubstepResult& res, const SubstepContext& ctx, double tau) {
  check_tau(tau);
  check_shapes(res);
  const Matrix& S0 = res.start;
  const Matrix rate = (res.star - S0) / tau;
  const VMoments& vm = ctx.vm;
  const XMoments& xm = ctx.xm;
  const Matrix flux = xm.d2 * S0;
  return {rate * vm.alpha - flux * vm.beta, rate * vm.beta - flux * vm.gamma - xm.d1 * S0 * vm.alpha};
}

LocalRhs local_rhs_step3(const SubstepResult& res, const SubstepContext& ctx, double tau) {
  check_tau(tau);
  check_shapes(res);
  const VelocityIntegrals star = velocity_integrals(res.star, ctx.gv);
  const VelocityIntegrals start = velocity_integrals(res.start, ctx.gv);
  const XMoments& xm = ctx.xm;
  return {-(star.m0 - start.m0) / tau - xm.d2 * start.m1,
          -(star.m1 - start.m1) / tau - xm.d2 * start.m2 - xm.d1 * start.m0};
}

LocalRhs local_rhs(const SubstepResult& res, const SubstepContext& ctx, double tau) {
  switch (res.kind) {
    case SubstepKind::K: return local_rhs_step1(res, ctx, tau);
    case SubstepKind::S: return local_rhs_step2(res, ctx, tau);
    case SubstepKind::L: return local_rhs_step3(res, ctx, tau);
  }
  throw std::logic_error("local_rhs: unknown substep");
}

Matrix local_matrix(const VMoments& vm) {
  Matrix A(2, vm.alpha.size());
  A.row(0) = vm.alpha.transpose();
  A.row(1) = vm.beta.transpose();
  return A;
}

Matrix global_rows(const Vector& kappa, const VMoments& vm) {
  const Index r = kappa.size();
  if (vm.alpha.size() != r) throw std::invalid_argument("global_rows: rank mismatch");
  Matrix G(2, r * r);
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < r; ++j) {
      G(0, i * r + j) = kappa[i] * vm.alpha[j];
      G(1, i * r + j) = kappa[i] * vm.beta[j];
    }
  return G;
}

Eigen::Vector2d substep_invariants(SubstepKind kind, const Matrix& u, const SubstepContext& ctx) {
  const VMoments& vm = ctx.vm;
  switch (kind) {
    case SubstepKind::K: {
      const Vector k = ctx.gx.dx() * u.colwise().sum().transpose();
      return {k.dot(vm.alpha), k.dot(vm.beta)};
    }
    case SubstepKind::S: {
      const Vector ks = u.transpose() * ctx.xm.kappa;
      return {ks.dot(vm.alpha), ks.dot(vm.beta)};
    }
    case SubstepKind::L: {
      const VelocityIntegrals vi = velocity_integrals(u, ctx.gv);
      return {ctx.xm.kappa.dot(vi.m0), ctx.xm.kappa.dot(vi.m1)};
    }
  }
  throw std::logic_error("substep_invariants: unknown substep");
}

Eigen::Vector2d global_rhs(const SubstepResult& res, const SubstepContext& ctx, double tau) {
  check_tau(tau);
  check_shapes(res);
  const Eigen::Vector2d change =
      substep_invariants(res.kind, res.star, ctx) - substep_invariants(res.kind, res.start, ctx);
  // The S correction enters with a minus sign (S1 = S* - tau lambda).
  const double sign = res.kind == SubstepKind::S ? 1.0 : -1.0;
  return sign * change / tau;
}

CorrectionSolution solve_local(const Matrix& A, const LocalRhs& rhs) {
  const Index r = A.cols();
  if (rhs.b.size() != r || rhs.d.size() != r || A.rows() != 2)
    throw std::invalid_argument("solve_local: expected a 2 x r matrix and r right-hand sides");
  const Matrix pinv = pseudo_inverse(A);
  Matrix B(r, 2);
  B.col(0) = rhs.b;
  B.col(1) = rhs.d;
  CorrectionSolution out;
  out.lambda = B * pinv.transpose();
  const Matrix res = out.lambda * A.transpose() - B;
  out.residual = res.rowwise().norm().maxCoeff();
  Eigen::JacobiSVD<Matrix> svd(A);
  const Vector& s = svd.singularValues();
  out.degenerate = s.size() < 2 || !(s[1] > pinv_rcond * s[0]);
  return out;
}

CorrectionSolution solve_global(const Matrix& rows, const Vector& rhs) {
  const Index n = rows.cols();
  Index r = 0;
  while (r * r < n) ++r;
  if (r * r != n) throw std::invalid_argument("solve_global: column count is not a square");
  const LeastSquaresSolution ls = min_norm_solve(rows, rhs);
  CorrectionSolution out;
  out.lambda = Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>(
      ls.x.data(), r, r);
  out.residual = ls.residual;
  out.degenerate = ls.rank_deficient;
  return out;
}

CorrectionSolution solve_combined(const Matrix& A, const LocalRhs& rhs, const Matrix& rows,
                                  const Vector& global, double w) {
  if (!(w >= 0.0)) throw std::invalid_argument("solve_combined: weight must be nonnegative");
  if (w == 0.0) return solve_global(rows, global);
  const Index r = A.cols();
  const Index nl = A.rows();
  Matrix M = Matrix::Zero(nl * r + rows.rows(), r * r);
  Vector rhs_all(nl * r + rows.rows());
  for (Index i = 0; i < r; ++i) {
    for (Index q = 0; q < nl; ++q) {
      M.row(i * nl + q).segment(i * r, r) = w * A.row(q);
      rhs_all[i * nl + q] = w * (q == 0 ? rhs.b[i] : rhs.d[i]);
    }
  }
  M.bottomRows(rows.rows()) = rows;
  rhs_all.tail(rows.rows()) = global;
  return solve_global(M, rhs_all);
}

Matrix apply_correction(SubstepKind kind, const Matrix& star, const Matrix& basis,
                        const Matrix& lambda, double tau) {
  switch (kind) {
    case SubstepKind::K: return star + tau * basis * lambda;
    case SubstepKind::S: return star - tau * lambda;
    case SubstepKind::L: return star + tau * basis * lambda.transpose();
  }
  throw std::logic_error("apply_correction: unknown substep");
}

CorrectionSolution solve_correction(const CorrectionMode& mode, const SubstepResult& res,
                                    const SubstepContext& ctx, double tau) {
  const Index r = ctx.vm.alpha.size();
  switch (mode.kind) {
    case CorrectionMode::Kind::None: return {Matrix::Zero(r, r), 0.0, false};
    case CorrectionMode::Kind::Local:
      return solve_local(local_matrix(ctx.vm), local_rhs(res, ctx, tau));
    case CorrectionMode::Kind::Global:
      return solve_global(global_rows(ctx.xm.kappa, ctx.vm), global_rhs(res, ctx, tau));
    case CorrectionMode::Kind::Combined:
      return solve_combined(local_matrix(ctx.vm), local_rhs(res, ctx, tau),
                            global_rows(ctx.xm.kappa, ctx.vm), global_rhs(res, ctx, tau), mode.weight);
  }
  throw std::logic_error("solve_correction: unknown mode");
}

} // namespace lrvp
