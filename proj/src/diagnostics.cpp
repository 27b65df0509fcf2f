#include "lrvp/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <ostream>

#include "lrvp/coefficients.hpp"

namespace lrvp {

const char* const diagnostics_csv_header =
    "t,electric_energy,mass,momentum,energy,l2,mass_err,momentum_err,energy_err,l2_err";

DiagnosticsRecord DiagnosticsRecord::with_drifts(const DiagnosticsRecord& initial) const {
  DiagnosticsRecord r = *this;
  r.mass_err = std::abs(mass - initial.mass);
  r.momentum_err = std::abs(momentum - initial.momentum);
  r.energy_err = std::abs(energy - initial.energy);
  r.l2_err = std::abs(l2 - initial.l2);
  return r;
}

bool DiagnosticsRecord::finite() const {
  for (double v : {t, electric_energy, mass, momentum, energy, l2, mass_err, momentum_err, energy_err, l2_err})
    if (!std::isfinite(v)) return false;
  return true;
}

DiagnosticsRecord diagnose_lowrank(const LowRankState& state, const ElectricField& E, double t) {
  const VMoments vm = compute_v_moments(state.V, state.gv);
  const Vector kappa = state.gx.dx() * state.X.colwise().sum().transpose();
  const Vector ks = state.S.transpose() * kappa;
  DiagnosticsRecord r;
  r.t = t;
  r.electric_energy = electric_energy(E);
  r.mass = ks.dot(vm.alpha);
  r.momentum = ks.dot(vm.beta);
  r.energy = 0.5 * ks.dot(vm.gamma) + r.electric_energy;
  r.l2 = state.S.norm();
  return r;
}

DiagnosticsRecord diagnose_fullgrid(const FullGridState& state, const ElectricField& E, double t) {
  const double cell = state.gx.dx() * state.gv.dx();
  const Vector v = state.gv.nodes();
  const Vector column_sums = state.f.colwise().sum().transpose();
  DiagnosticsRecord r;
  r.t = t;
  r.electric_energy = electric_energy(E);
  r.mass = cell * column_sums.sum();
  r.momentum = cell * column_sums.dot(v);
  r.energy = 0.5 * cell * column_sums.dot(v.cwiseAbs2()) + r.electric_energy;
  r.l2 = std::sqrt(cell * state.f.squaredNorm());
  return r;
}

double fit_growth_rate(const std::vector<double>& t, const std::vector<double>& y) {
  if (t.size() != y.size() || y.empty()) throw std::invalid_argument("fit_growth_rate: size mismatch");
  const size_t peak = static_cast<size_t>(std::max_element(y.begin(), y.end()) - y.begin());
  size_t first = 0;
  while (first < peak && y[first] < 10.0 * y[0]) ++first;
  size_t last = peak;
  while (last > first && y[last] > 0.1 * y[peak]) --last;
  if (last < first + 2 || !(y[first] > 0.0))
    throw std::invalid_argument("fit_growth_rate: no linear window");
  double st = 0, sl = 0, stt = 0, stl = 0;
  const double n = static_cast<double>(last - first + 1);
  for (size_t i = first; i <= last; ++i) {
    const double l = std::log(y[i]);
    st += t[i];
    sl += l;
    stt += t[i] * t[i];
    stl += t[i] * l;
  }
  return (n * stl - st * sl) / (n * stt - st * st);
}

void write_csv_header(std::ostream& os) { os << diagnostics_csv_header << '\n'; }

void write_csv_row(std::ostream& os, const DiagnosticsRecord& r) {
  const auto old = os.precision(17);
  os << r.t << ',' << r.electric_energy << ',' << r.mass << ',' << r.momentum << ',' << r.energy << ','
     << r.l2 << ',' << r.mass_err << ',' << r.momentum_err << ',' << r.energy_err << ',' << r.l2_err
     << '\n';
  os.precision(old);
}

} // namespace lrvp
