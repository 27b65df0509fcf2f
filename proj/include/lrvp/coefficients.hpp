#pragma once

#include "lrvp/grid.hpp"

namespace lrvp {

// Velocity-side moments of the V basis (d = 1, so vector quantities are scalars).
struct VMoments {
  Vector alpha; // int V_j dv
  Vector beta;  // int v V_j dv
  Vector gamma; // int v^2 V_j dv
  Matrix c1;    // int v V_j V_l dv        (symmetric)
  Matrix c2;    // int V_j dV_l/dv dv      (antisymmetric)
};

// Space-side moments of the X basis for a given field E.
struct XMoments {
  Vector kappa; // int X_i dx
  Matrix d1;    // int X_i E X_k dx        (symmetric)
  Matrix d2;    // int X_i dX_k/dx dx      (antisymmetric)
};

VMoments compute_v_moments(const Matrix& V, const PeriodicGrid& gv);

XMoments compute_x_moments(const Matrix& X, const GridFunction& E, const PeriodicGrid& gx);

} // namespace lrvp
