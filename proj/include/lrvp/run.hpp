#pragma once

#include <iosfwd>
#include <string>

#include "lrvp/config.hpp"
#include "lrvp/diagnostics.hpp"
#include "lrvp/integrator.hpp"

namespace lrvp {

/// Receives the output of a simulation as it is produced.
class RunObserver {
public:
  virtual ~RunObserver() = default;
  virtual void on_record(const DiagnosticsRecord&) {}
  virtual void on_step(Index /*step*/, double /*t*/, const StepReport&) {}
  virtual void on_snapshot(double /*t*/, const Matrix& /*f*/) {}
};

struct RunOutcome {
  Index steps_completed = 0;
  bool blew_up = false;
  std::string message;
};

/// Advances the configured solver for step_count() steps. Records are
/// emitted at step 0, every output_interval steps and at the last step.
/// A blow-up stops the run and is reported in the outcome.
RunOutcome simulate(const RunConfig& config, RunObserver& observer);

/// simulate() with CSV and snapshot output under config.output_dir:
/// <run_name>.csv, <run_name>_steps.csv and <run_name>_t<time>.bin.
/// Returns the process exit status (0 ok, 2 blow-up).
int run(const RunConfig& config, std::ostream& log);

} // namespace lrvp
