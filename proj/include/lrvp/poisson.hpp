#pragma once

#include "lrvp/grid.hpp"

namespace lrvp {

/// Self-consistent field with zero mean.
struct ElectricField : GridFunction {
  using GridFunction::GridFunction;
};

/// Solves dE/dx = 1 - rho on the periodic grid. The mean of 1 - rho is
/// discarded, so slightly non-neutral densities are accepted.
ElectricField solve_field(const PeriodicGrid& gx, const GridFunction& rho);

/// 1/2 int E^2 dx
double electric_energy(const ElectricField& E);

} // namespace lrvp
