#pragma once

#include "lrvp/lowrank_state.hpp"
#include "lrvp/poisson.hpp"

namespace lrvp {

/// f sampled on the full n_x x n_v tensor grid (row i: x_i, column j: v_j).
struct FullGridState {
  PeriodicGrid gx;
  PeriodicGrid gv;
  Matrix f;
};

FullGridState fullgrid_from_function(const PhaseSpaceFunction& f0, const PeriodicGrid& gx,
                                     const PeriodicGrid& gv);

/// rho(x) = int f dv
GridFunction fullgrid_density(const FullGridState& state);

ElectricField fullgrid_field(const FullGridState& state);

/// x-advection tau/2, field solve, v-advection tau, x-advection tau/2, all
/// by exact Fourier shifts.
FullGridState fullgrid_strang_step(const FullGridState& state, double tau,
                                   bool free_streaming = false);

/// Full-grid counterpart of the low-rank K, S, L sequence: the complete
/// Vlasov operator is integrated forward, backward and forward over tau
/// with RK4 (n_sub steps each) and the field refreshed at every substep
/// start. At full rank the low-rank Lie step reduces to exactly this.
FullGridState fullgrid_splitting_lie_step(const FullGridState& state, double tau, int n_sub);

} // namespace lrvp
