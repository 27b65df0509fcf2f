#pragma once

#include "lrvp/coefficients.hpp"
#include "lrvp/poisson.hpp"

namespace lrvp {

// K: X moves (V frozen), S: coefficients only, L: V moves (X frozen).
enum class SubstepKind { K, S, L };

const char* to_string(SubstepKind kind);

/// Everything held fixed during one substep.
struct SubstepContext {
  PeriodicGrid gx;
  PeriodicGrid gv;
  Matrix X;            // frozen space basis (K: initial X, S/L: current X)
  Matrix V;            // frozen velocity basis
  VMoments vm;
  XMoments xm;         // evaluated with `field`
  ElectricField field; // frozen at the substep start
};

/// Uncorrected outcome of a substep. K: n_x x r, S: r x r, L: n_v x r
/// (column i holds L_i).
struct SubstepResult {
  SubstepKind kind;
  Matrix start;
  Matrix star;
};

} // namespace lrvp
