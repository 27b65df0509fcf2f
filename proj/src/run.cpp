#include "lrvp/run.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "lrvp/errors.hpp"
#include "lrvp/snapshot.hpp"

namespace lrvp {

namespace {

class SnapshotSchedule {
public:
  explicit SnapshotSchedule(std::vector<double> times) : times_(std::move(times)) {
    std::sort(times_.begin(), times_.end());
  }
  // True once per requested time, at the first step reaching it.
  bool due(double t) {
    bool hit = false;
    while (next_ < times_.size() && times_[next_] <= t + 1e-9) {
      ++next_;
      hit = true;
    }
    return hit;
  }

private:
  std::vector<double> times_;
  size_t next_ = 0;
};

template <class State, class Step, class Diagnose, class Full>
RunOutcome drive(const RunConfig& config, State state, Step step, Diagnose diagnose, Full full,
                 RunObserver& observer) {
  const Index steps = config.step_count();
  SnapshotSchedule snapshots(config.snapshot_times);
  RunOutcome outcome;

  const DiagnosticsRecord initial = diagnose(state, 0.0);
  observer.on_record(initial.with_drifts(initial));
  if (snapshots.due(0.0)) observer.on_snapshot(0.0, full(state));

  for (Index n = 1; n <= steps; ++n) {
    const double t = static_cast<double>(n) * config.tau;
    StepReport report;
    try {
      state = step(state, report);
    } catch (const blowup_error& e) {
      outcome.blew_up = true;
      outcome.message = "step " + std::to_string(n) + ": " + e.what();
      return outcome;
    }
    outcome.steps_completed = n;
    observer.on_step(n, t, report);
    if (n % config.output_interval == 0 || n == steps) {
      const DiagnosticsRecord rec = diagnose(state, t).with_drifts(initial);
      if (!rec.finite()) {
        outcome.blew_up = true;
        outcome.message = "step " + std::to_string(n) + ": non-finite diagnostics";
        return outcome;
      }
      observer.on_record(rec);
    }
    if (snapshots.due(t)) observer.on_snapshot(t, full(state));
  }
  return outcome;
}

class FileObserver : public RunObserver {
public:
  explicit FileObserver(const RunConfig& c) : config_(c) {
    const std::filesystem::path dir(c.output_dir);
    std::filesystem::create_directories(dir);
    diag_.open(dir / (c.run_name + ".csv"));
    steps_.open(dir / (c.run_name + "_steps.csv"));
    if (!diag_ || !steps_) throw std::runtime_error("cannot create output files in " + c.output_dir);
    write_csv_header(diag_);
    steps_ << "step,t,substep,kind,correction_norm,local_residual,solve_residual,mass_change,"
              "momentum_change,filled,degenerate\n";
    steps_.precision(17);
  }

  void on_record(const DiagnosticsRecord& r) override {
    write_csv_row(diag_, r);
    diag_.flush();
  }

  void on_step(Index step, double t, const StepReport& report) override {
    for (size_t i = 0; i < report.substeps.size(); ++i) {
      const SubstepReport& s = report.substeps[i];
      steps_ << step << ',' << t << ',' << i << ',' << to_string(s.kind) << ',' << s.correction_norm << ','
             << s.local_residual << ',' << s.solve_residual << ',' << s.mass_change << ','
             << s.momentum_change << ',' << s.filled << ',' << (s.degenerate ? 1 : 0) << '\n';
    }
  }

  void on_snapshot(double t, const Matrix& f) override {
    std::ostringstream name;
    name << config_.run_name << "_t" << std::fixed << std::setprecision(3) << t << ".bin";
    write_snapshot((std::filesystem::path(config_.output_dir) / name.str()).string(), f);
  }

private:
  const RunConfig& config_;
  std::ofstream diag_;
  std::ofstream steps_;
};

} // namespace

RunOutcome simulate(const RunConfig& config, RunObserver& observer) {
  config.validate();
  const Scenario& sc = config.scenario;
  const PeriodicGrid gx(sc.x_min, sc.x_max, config.nx);
  const PeriodicGrid gv(sc.v_min, sc.v_max, config.nv);
  auto f0 = [&sc](double x, double v) { return sc.initial_value(x, v); };

  if (config.solver == SolverKind::FullGrid) {
    return drive(
        config, fullgrid_from_function(f0, gx, gv),
        [&](const FullGridState& s, StepReport&) { return fullgrid_strang_step(s, config.tau); },
        [](const FullGridState& s, double t) { return diagnose_fullgrid(s, fullgrid_field(s), t); },
        [](const FullGridState& s) { return s.f; }, observer);
  }

  IntegratorParams params;
  params.n_sub = config.n_sub;
  params.correction_form = config.correction_form;
  return drive(
      config, initialize_from_function(f0, gx, gv, config.rank),
      [&](const LowRankState& s, StepReport& report) {
        return config.splitting == Splitting::Strang ? strang_step(s, config.tau, config.mode, params, &report)
                                                     : lie_step(s, config.tau, config.mode, params, &report);
      },
      [](const LowRankState& s, double t) {
        const VMoments vm = compute_v_moments(s.V, s.gv);
        return diagnose_lowrank(s, solve_field(s.gx, density(s, vm.alpha)), t);
      },
      [](const LowRankState& s) { return evaluate_full(s); }, observer);
}

int run(const RunConfig& config, std::ostream& log) {
  FileObserver files(config);
  const RunOutcome outcome = simulate(config, files);
  if (outcome.blew_up) {
    log << "numerical blow-up: " << outcome.message << '\n';
    return 2;
  }
  log << config.run_name << ": " << outcome.steps_completed << " steps written to " << config.output_dir << '\n';
  return 0;
}

} // namespace lrvp
