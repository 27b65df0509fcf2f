#include "lrvp/integrator.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "lrvp/errors.hpp"

namespace lrvp {

double StepReport::max_local_residual() const {
  double m = 0.0;
  for (const auto& s : substeps) m = std::max(m, s.local_residual);
  return m;
}

Matrix rhs_K(const Matrix& K, const VMoments& vm, const ElectricField& E, const PeriodicGrid& gx) {
  return -spectral_derivative_columns(gx, K) * vm.c1.transpose() +
         E.values.asDiagonal() * K * vm.c2.transpose();
}

Matrix rhs_S(const Matrix& S, const VMoments& vm, const XMoments& xm) {
  return xm.d2 * S * vm.c1.transpose() - xm.d1 * S * vm.c2.transpose();
}

Matrix rhs_L(const Matrix& L, const XMoments& xm, const PeriodicGrid& gv) {
  return spectral_derivative_columns(gv, L) * xm.d1.transpose() -
         gv.nodes().asDiagonal() * L * xm.d2.transpose();
}

SubstepContext make_context(const LowRankState& state, const IntegratorParams& params) {
  VMoments vm = compute_v_moments(state.V, state.gv);
  ElectricField E = params.free_streaming ? ElectricField(state.gx, Vector::Zero(state.gx.n()))
                    : params.frozen_field ? *params.frozen_field
                                          : solve_field(state.gx, density(state, vm.alpha));
  XMoments xm = compute_x_moments(state.X, E, state.gx);
  return {state.gx, state.gv, state.X, state.V, std::move(vm), std::move(xm), std::move(E)};
}

namespace {

Matrix uncorrected_rhs(SubstepKind kind, const Matrix& u, const SubstepContext& ctx) {
  switch (kind) {
    case SubstepKind::K: return rhs_K(u, ctx.vm, ctx.field, ctx.gx);
    case SubstepKind::S: return rhs_S(u, ctx.vm, ctx.xm);
    case SubstepKind::L: return rhs_L(u, ctx.xm, ctx.gv);
  }
  throw std::logic_error("substep_solve: unknown substep");
}

template <class F>
Matrix rk4(SubstepKind kind, const Matrix& start, F&& f, double tau, int n_sub) {
  if (n_sub < 1) throw std::invalid_argument("substep_solve: n_sub must be at least 1");
  Matrix u = start;
  if (tau == 0.0) return u;
  const double h = tau / n_sub;
  for (int s = 0; s < n_sub; ++s) {
    const Matrix k1 = f(u);
    const Matrix k2 = f(u + 0.5 * h * k1);
    const Matrix k3 = f(u + 0.5 * h * k2);
    const Matrix k4 = f(u + h * k3);
    u += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (!u.allFinite())
      throw blowup_error(std::string("non-finite values in ") + to_string(kind) +
                         " substep at internal step " + std::to_string(s));
  }
  return u;
}

} // namespace

SubstepResult substep_solve(SubstepKind kind, const Matrix& start, const SubstepContext& ctx,
                            double tau, int n_sub) {
  Matrix u = rk4(kind, start, [&](const Matrix& w) { return uncorrected_rhs(kind, w, ctx); }, tau, n_sub);
  return {kind, start, std::move(u)};
}

SubstepResult corrected_substep_solve(SubstepKind kind, const Matrix& start, const SubstepContext& ctx,
                                      const CorrectionMode& mode, double tau, int n_sub,
                                      SubstepReport* report) {
  const Matrix& basis = kind == SubstepKind::L ? ctx.V : ctx.X;
  // A difference quotient over a unit step is the instantaneous rate.
  auto f = [&](const Matrix& u) -> Matrix {
    const Matrix g = uncorrected_rhs(kind, u, ctx);
    if (mode.kind == CorrectionMode::Kind::None) return g;
    const SubstepResult rate{kind, u, u + g};
    const CorrectionSolution sol = solve_correction(mode, rate, ctx, 1.0);
    if (report) {
      report->correction_norm = std::max(report->correction_norm, sol.lambda.norm());
      report->solve_residual = std::max(report->solve_residual, sol.residual);
      report->degenerate = report->degenerate || sol.degenerate;
    }
    return apply_correction(kind, g, basis, sol.lambda, 1.0);
  };
  Matrix u = rk4(kind, start, f, tau, n_sub);
  return {kind, start, std::move(u)};
}

LowRankState substep(SubstepKind kind, const LowRankState& state, double tau,
                     const CorrectionMode& mode, const IntegratorParams& params,
                     StepReport* report) {
  const SubstepContext ctx = make_context(state, params);

  Matrix start;
  switch (kind) {
    case SubstepKind::K: start = state.X * state.S; break;
    case SubstepKind::S: start = state.S; break;
    case SubstepKind::L: start = state.V * state.S.transpose(); break;
  }
  SubstepReport rep;
  rep.kind = kind;
  const bool stagewise = params.correction_form == CorrectionForm::Stagewise;
  SubstepResult res = stagewise ? corrected_substep_solve(kind, start, ctx, mode, tau, params.n_sub, &rep)
                                : substep_solve(kind, start, ctx, tau, params.n_sub);
  if (!stagewise && mode.kind != CorrectionMode::Kind::None && tau != 0.0) {
    const CorrectionSolution sol = solve_correction(mode, res, ctx, tau);
    const Matrix& basis = kind == SubstepKind::L ? ctx.V : ctx.X;
    res.star = apply_correction(kind, res.star, basis, sol.lambda, tau);
    rep.correction_norm = sol.lambda.norm();
    rep.solve_residual = sol.residual;
    rep.degenerate = sol.degenerate;
  }
  if (tau != 0.0) {
    const LocalRhs after = local_rhs(res, ctx, tau);
    const double scale = std::max(1.0, res.start.norm());
    rep.local_residual = std::max(after.b.cwiseAbs().maxCoeff(), after.d.cwiseAbs().maxCoeff()) / scale;
  }
  const Eigen::Vector2d change =
      substep_invariants(kind, res.star, ctx) - substep_invariants(kind, res.start, ctx);
  rep.mass_change = change[0];
  rep.momentum_change = change[1];

  LowRankState out = state;
  switch (kind) {
    case SubstepKind::K: {
      Orthonormalization qr = orthonormalize(res.star, state.gx.dx());
      out.X = std::move(qr.Q);
      out.S = std::move(qr.R);
      rep.filled = static_cast<Index>(qr.filled.size());
      break;
    }
    case SubstepKind::S: out.S = std::move(res.star); break;
    case SubstepKind::L: {
      Orthonormalization qr = orthonormalize(res.star, state.gv.dx());
      out.V = std::move(qr.Q);
      out.S = qr.R.transpose();
      rep.filled = static_cast<Index>(qr.filled.size());
      break;
    }
  }
  if (report) report->substeps.push_back(rep);
  return out;
}

LowRankState lie_step(const LowRankState& state, double tau, const CorrectionMode& mode,
                      const IntegratorParams& params, StepReport* report) {
  LowRankState s = substep(SubstepKind::K, state, tau, mode, params, report);
  s = substep(SubstepKind::S, s, tau, mode, params, report);
  return substep(SubstepKind::L, s, tau, mode, params, report);
}

LowRankState lie_adjoint_step(const LowRankState& state, double tau, const CorrectionMode& mode,
                              const IntegratorParams& params, StepReport* report) {
  LowRankState s = substep(SubstepKind::L, state, tau, mode, params, report);
  s = substep(SubstepKind::S, s, tau, mode, params, report);
  return substep(SubstepKind::K, s, tau, mode, params, report);
}

ElectricField midpoint_field(const LowRankState& state, double tau, const IntegratorParams& params) {
  IntegratorParams predictor = params;
  predictor.frozen_field.reset();
  const LowRankState half = lie_step(state, 0.5 * tau, CorrectionMode::none(), predictor);
  return solve_field(half.gx, density(half, compute_v_moments(half.V, half.gv).alpha));
}

LowRankState strang_step(const LowRankState& state, double tau, const CorrectionMode& mode,
                         const IntegratorParams& params, StepReport* report) {
  IntegratorParams p = params;
  if (p.strang_field == StrangField::Midpoint && !p.free_streaming && !p.frozen_field)
    p.frozen_field = midpoint_field(state, tau, params);
  const LowRankState half = lie_step(state, 0.5 * tau, mode, p, report);
  return lie_adjoint_step(half, 0.5 * tau, mode, p, report);
}

} // namespace lrvp
