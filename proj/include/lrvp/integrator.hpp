#pragma once

#include <optional>
#include <vector>

#include "lrvp/conservation.hpp"
#include "lrvp/lowrank_state.hpp"

namespace lrvp {

// Field used by the substeps of a Strang step.
enum class StrangField {
  Midpoint,    // field of an uncorrected Lie predictor at tau/2, frozen for all six substeps
  SubstepStart // refreshed from the current density at every substep start
};

// Where the correction enters a substep.
enum class CorrectionForm {
  PostStep, // one difference-quotient system after the uncorrected substep
  Stagewise // the same systems on the instantaneous rates, inside every RK4 stage
};

struct IntegratorParams {
  int n_sub = 2;               // RK4 steps per substep
  bool free_streaming = false; // force E = 0
  // When set, every substep uses this field instead of solving for the
  // field of its starting density.
  std::optional<ElectricField> frozen_field;
  StrangField strang_field = StrangField::Midpoint;
  CorrectionForm correction_form = CorrectionForm::PostStep;
};

struct SubstepReport {
  SubstepKind kind = SubstepKind::K;
  double correction_norm = 0.0; // ||lambda||_F (largest over the stages for Stagewise)
  double local_residual = 0.0;  // max_i |(b_i, d_i)| after correction / max(1, ||start||_F)
  double solve_residual = 0.0;  // residual of the solved linear system
  double mass_change = 0.0;     // total mass after minus before the substep
  double momentum_change = 0.0;
  Index filled = 0;             // QR columns completed by the deterministic fill
  bool degenerate = false;
};

struct StepReport {
  std::vector<SubstepReport> substeps;

  double max_local_residual() const;
};

// Right-hand sides of the K, S and L equations with frozen coefficients.
Matrix rhs_K(const Matrix& K, const VMoments& vm, const ElectricField& E, const PeriodicGrid& gx);
Matrix rhs_S(const Matrix& S, const VMoments& vm, const XMoments& xm);
Matrix rhs_L(const Matrix& L, const XMoments& xm, const PeriodicGrid& gv);

/// Frozen data for a substep starting from `state`: moments of the current
/// bases and the field of the current density.
SubstepContext make_context(const LowRankState& state, const IntegratorParams& params);

/// Classical RK4 with n_sub equal steps over [0, tau]. Throws blowup_error
/// on non-finite values.
SubstepResult substep_solve(SubstepKind kind, const Matrix& start, const SubstepContext& ctx,
                            double tau, int n_sub);

/// RK4 of the corrected equations: the correction system of `mode` is solved
/// for the instantaneous rates at every stage. report may be null.
SubstepResult corrected_substep_solve(SubstepKind kind, const Matrix& start, const SubstepContext& ctx,
                                      const CorrectionMode& mode, double tau, int n_sub,
                                      SubstepReport* report);

/// One corrected substep applied to `state` (including the QR for K and L).
LowRankState substep(SubstepKind kind, const LowRankState& state, double tau,
                     const CorrectionMode& mode, const IntegratorParams& params,
                     StepReport* report = nullptr);

/// K, S, L with step tau.
LowRankState lie_step(const LowRankState& state, double tau, const CorrectionMode& mode,
                      const IntegratorParams& params, StepReport* report = nullptr);

/// L, S, K with step tau (adjoint ordering of lie_step).
LowRankState lie_adjoint_step(const LowRankState& state, double tau, const CorrectionMode& mode,
                              const IntegratorParams& params, StepReport* report = nullptr);

/// lie_step(tau/2) followed by lie_adjoint_step(tau/2). With
/// StrangField::Midpoint both halves run with the predicted midpoint field,
/// which keeps the composition second order for the nonlinear problem.
/// Field of the state reached by an uncorrected lie_step over tau/2.
ElectricField midpoint_field(const LowRankState& state, double tau, const IntegratorParams& params);

LowRankState strang_step(const LowRankState& state, double tau, const CorrectionMode& mode,
                         const IntegratorParams& params, StepReport* report = nullptr);

} // namespace lrvp
