#pragma once

#include <map>
#include <string>
#include <vector>

#include "lrvp/conservation.hpp"
#include "lrvp/integrator.hpp"
#include "lrvp/lowrank_state.hpp"

namespace lrvp {

enum class Splitting { Lie, Strang };
enum class SolverKind { LowRank, FullGrid };

struct RunConfig {
  Scenario scenario;
  Index nx = 128;
  Index nv = 128;
  Index rank = 10;
  double tau = 0.025;
  double t_final = 100.0;
  Splitting splitting = Splitting::Strang;
  CorrectionMode mode;
  CorrectionForm correction_form = CorrectionForm::PostStep;
  int n_sub = 2;
  Index output_interval = 10; // steps between diagnostics rows
  std::string output_dir = ".";
  std::string run_name = "run";
  SolverKind solver = SolverKind::LowRank;
  std::vector<double> snapshot_times;

  /// Throws config_error naming the offending key.
  void validate() const;
  Index step_count() const;
};

/// Raw `key = value` entries; section headers only group keys.
using ConfigEntries = std::map<std::string, std::string>;

ConfigEntries parse_entries(const std::string& text, const std::string& source = "<config>");

/// Adds or replaces one `key=value` entry.
void apply_override(ConfigEntries& entries, const std::string& key_value);

/// Builds and validates a configuration. `mode` and `solver` are required.
RunConfig build_config(const ConfigEntries& entries);

RunConfig parse_config(const std::string& path, const std::vector<std::string>& overrides = {});

} // namespace lrvp
