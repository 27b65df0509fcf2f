#include "lrvp/fullgrid.hpp"

#include <string>

#include "lrvp/errors.hpp"

namespace lrvp {

namespace {

void check_finite(const Matrix& f, const char* where) {
  if (!f.allFinite()) throw blowup_error(std::string("non-finite values in full-grid ") + where);
}

Matrix advect_x(const FullGridState& s, double tau) {
  Matrix out(s.f.rows(), s.f.cols());
  for (Index j = 0; j < s.gv.n(); ++j) out.col(j) = fourier_advect(s.gx, s.f.col(j), s.gv.node(j), tau);
  return out;
}

Matrix advect_v(const FullGridState& s, const ElectricField& E, double tau) {
  Matrix out(s.f.rows(), s.f.cols());
  for (Index i = 0; i < s.gx.n(); ++i)
    out.row(i) = fourier_advect(s.gv, s.f.row(i).transpose(), -E.values[i], tau).transpose();
  return out;
}

// -v df/dx + E df/dv
Matrix vlasov_operator(const FullGridState& s, const Matrix& f, const ElectricField& E) {
  const Matrix fx = spectral_derivative_columns(s.gx, f);
  const Matrix fv = spectral_derivative_columns(s.gv, f.transpose()).transpose();
  return -fx * s.gv.nodes().asDiagonal() + E.values.asDiagonal() * fv;
}

Matrix rk4_vlasov(const FullGridState& s, double tau, int n_sub) {
  const ElectricField E = fullgrid_field(s);
  auto op = [&](const Matrix& f) { return vlasov_operator(s, f, E); };
  Matrix f = s.f;
  const double h = tau / n_sub;
  for (int k = 0; k < n_sub; ++k) {
    const Matrix k1 = op(f);
    const Matrix k2 = op(f + 0.5 * h * k1);
    const Matrix k3 = op(f + 0.5 * h * k2);
    const Matrix k4 = op(f + h * k3);
    f += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  check_finite(f, "splitting substep");
  return f;
}

} // namespace

FullGridState fullgrid_from_function(const PhaseSpaceFunction& f0, const PeriodicGrid& gx,
                                     const PeriodicGrid& gv) {
  FullGridState s{gx, gv, Matrix(gx.n(), gv.n())};
  for (Index i = 0; i < gx.n(); ++i)
    for (Index j = 0; j < gv.n(); ++j) s.f(i, j) = f0(gx.node(i), gv.node(j));
  if (!s.f.allFinite()) throw invalid_input("fullgrid_from_function: non-finite samples");
  return s;
}

GridFunction fullgrid_density(const FullGridState& state) {
  return GridFunction(state.gx, state.gv.dx() * state.f.rowwise().sum());
}

ElectricField fullgrid_field(const FullGridState& state) {
  return solve_field(state.gx, fullgrid_density(state));
}

FullGridState fullgrid_strang_step(const FullGridState& state, double tau, bool free_streaming) {
  FullGridState s = state;
  s.f = advect_x(s, 0.5 * tau);
  if (!free_streaming) s.f = advect_v(s, fullgrid_field(s), tau);
  s.f = advect_x(s, 0.5 * tau);
  check_finite(s.f, "Strang step");
  return s;
}

FullGridState fullgrid_splitting_lie_step(const FullGridState& state, double tau, int n_sub) {
  if (n_sub < 1) throw std::invalid_argument("fullgrid_splitting_lie_step: n_sub must be at least 1");
  FullGridState s = state;
  s.f = rk4_vlasov(s, tau, n_sub);
  s.f = rk4_vlasov(s, -tau, n_sub);
  s.f = rk4_vlasov(s, tau, n_sub);
  return s;
}

} // namespace lrvp
