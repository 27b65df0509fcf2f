#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "lrvp/fullgrid.hpp"
#include "lrvp/lowrank_state.hpp"
#include "lrvp/poisson.hpp"

namespace lrvp {

struct DiagnosticsRecord {
  double t = 0.0;
  double electric_energy = 0.0;
  double mass = 0.0;
  double momentum = 0.0;
  double energy = 0.0; // kinetic + electric
  double l2 = 0.0;
  // Absolute drifts from the initial record.
  double mass_err = 0.0;
  double momentum_err = 0.0;
  double energy_err = 0.0;
  double l2_err = 0.0;

  /// Copy with the drift fields filled in relative to `initial`.
  DiagnosticsRecord with_drifts(const DiagnosticsRecord& initial) const;
  bool finite() const;
};

/// Integrals via the moments of the factors; l2 = ||S||_F.
DiagnosticsRecord diagnose_lowrank(const LowRankState& state, const ElectricField& E, double t);

/// Integrals by the tensor rectangle rule.
DiagnosticsRecord diagnose_fullgrid(const FullGridState& state, const ElectricField& E, double t);

/// Exponential rate of a growing series: least-squares slope of log(y)
/// against t over the window where y has risen to 10 y(0) and not yet
/// passed 0.1 of its maximum. Throws std::invalid_argument if the window
/// holds fewer than three points.
double fit_growth_rate(const std::vector<double>& t, const std::vector<double>& y);

extern const char* const diagnostics_csv_header;

void write_csv_header(std::ostream& os);
void write_csv_row(std::ostream& os, const DiagnosticsRecord& r);

} // namespace lrvp
