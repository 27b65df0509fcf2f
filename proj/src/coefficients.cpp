#include "lrvp/coefficients.hpp"

#include <stdexcept>

namespace lrvp {

VMoments compute_v_moments(const Matrix& V, const PeriodicGrid& gv) {
  if (V.rows() != gv.n()) throw std::invalid_argument("compute_v_moments: V rows != n_v");
  const double dv = gv.dx();
  const Vector v = gv.nodes();
  VMoments m;
  m.alpha = dv * V.colwise().sum().transpose();
  m.beta = dv * (V.transpose() * v);
  m.gamma = dv * (V.transpose() * v.cwiseAbs2());
  m.c1 = dv * (V.transpose() * v.asDiagonal() * V);
  m.c2 = dv * (V.transpose() * spectral_derivative_columns(gv, V));
  return m;
}

XMoments compute_x_moments(const Matrix& X, const GridFunction& E, const PeriodicGrid& gx) {
  if (X.rows() != gx.n()) throw std::invalid_argument("compute_x_moments: X rows != n_x");
  if (E.values.size() != gx.n()) throw std::invalid_argument("compute_x_moments: field size != n_x");
  const double dx = gx.dx();
  XMoments m;
  m.kappa = dx * X.colwise().sum().transpose();
  m.d1 = dx * (X.transpose() * E.values.asDiagonal() * X);
  m.d2 = dx * (X.transpose() * spectral_derivative_columns(gx, X));
  return m;
}

} // namespace lrvp
