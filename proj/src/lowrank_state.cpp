#include "lrvp/lowrank_state.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/SVD>

#include "lrvp/errors.hpp"
#include "lrvp/linalg.hpp"

namespace lrvp {

namespace {

// Columns whose residual after orthogonalization falls below this fraction
// of the largest input column are treated as dependent.
constexpr double dependence_tol = 1e-12;

// Orthogonalize q against the first k columns of Q (weighted), repeating
// while a pass removes more than half of the norm. Accumulates the
// projection coefficients into h.
void project_out(const Matrix& Q, Index k, double weight, Vector& q, Vector* h) {
  if (k == 0) return;
  double prev = q.norm();
  for (int pass = 0; pass < 3; ++pass) {
    Vector c = weight * (Q.leftCols(k).transpose() * q);
    q.noalias() -= Q.leftCols(k) * c;
    if (h) h->head(k) += c;
    const double now = q.norm();
    if (now > 0.5 * prev) break;
    prev = now;
  }
}

} // namespace

void Scenario::validate() const {
  if (!(amplitude > 0.0)) throw std::invalid_argument("Scenario: amplitude must be positive");
  if (!(wavenumber > 0.0)) throw std::invalid_argument("Scenario: wavenumber must be positive");
  if (!(x_max > x_min) || !(v_max > v_min))
    throw std::invalid_argument("Scenario: empty domain");
}

double Scenario::initial_value(double x, double v) const {
  const double norm = 1.0 / (2.0 * std::sqrt(2.0 * std::numbers::pi));
  const double beams = std::exp(-0.5 * (v - beam_speed) * (v - beam_speed)) +
                       std::exp(-0.5 * (v + beam_speed) * (v + beam_speed));
  return norm * beams * (1.0 + amplitude * std::cos(wavenumber * x));
}

Orthonormalization orthonormalize(const Matrix& columns, double weight) {
  const Index n = columns.rows();
  const Index r = columns.cols();
  if (r > n) throw std::invalid_argument("orthonormalize: more columns than rows");
  if (!(weight > 0.0)) throw std::invalid_argument("orthonormalize: weight must be positive");

  const double sw = std::sqrt(weight);
  double scale = 0.0;
  for (Index j = 0; j < r; ++j) scale = std::max(scale, sw * columns.col(j).norm());

  Orthonormalization out{Matrix::Zero(n, r), Matrix::Zero(r, r), {}};
  Index next_mode = 0;
  for (Index j = 0; j < r; ++j) {
    Vector q = columns.col(j);
    Vector h = Vector::Zero(r);
    project_out(out.Q, j, weight, q, &h);
    out.R.col(j).head(j) = h.head(j);
    const double nrm = sw * q.norm();
    if (nrm > dependence_tol * scale && nrm > 0.0) {
      out.R(j, j) = nrm;
      out.Q.col(j) = q / nrm;
      continue;
    }
    // Dependent direction: pick the next Fourier mode that is not already
    // (nearly) in the span.
    out.filled.push_back(j);
    for (;; ++next_mode) {
      if (next_mode >= n) throw std::logic_error("orthonormalize: fill basis exhausted");
      Vector cand = fourier_mode(n, next_mode);
      cand /= sw * cand.norm();
      project_out(out.Q, j, weight, cand, nullptr);
      const double cn = sw * cand.norm();
      if (cn > 0.1) {
        out.Q.col(j) = cand / cn;
        ++next_mode;
        break;
      }
    }
  }
  return out;
}

double orthonormality_defect(const Matrix& Q, double weight) {
  const Matrix G = weight * (Q.transpose() * Q) - Matrix::Identity(Q.cols(), Q.cols());
  return G.cwiseAbs().maxCoeff();
}

LowRankState initialize_from_function(const PhaseSpaceFunction& f0, const PeriodicGrid& gx,
                                      const PeriodicGrid& gv, Index r) {
  const Index nx = gx.n();
  const Index nv = gv.n();
  if (r < 1 || r > std::min(nx, nv))
    throw std::invalid_argument("initialize_from_function: rank " + std::to_string(r) +
                                " outside [1, " + std::to_string(std::min(nx, nv)) + "]");

  Matrix F(nx, nv);
  for (Index i = 0; i < nx; ++i)
    for (Index j = 0; j < nv; ++j) {
      const double val = f0(gx.node(i), gv.node(j));
      if (!std::isfinite(val))
        throw invalid_input("initialize_from_function: non-finite sample at (" +
                            std::to_string(gx.node(i)) + ", " + std::to_string(gv.node(j)) + ")");
      F(i, j) = val;
    }

  const double dx = gx.dx();
  const double dv = gv.dx();
  const double w = std::sqrt(dx * dv);
  Eigen::JacobiSVD<Matrix> svd(w * F, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Vector& sigma = svd.singularValues();

  Index q = 0;
  while (q < r && sigma[q] > 0.0 && sigma[q] > 1e-13 * sigma[0]) ++q;

  Matrix Xq = Matrix::Zero(nx, r);
  Matrix Vq = Matrix::Zero(nv, r);
  Xq.leftCols(q) = svd.matrixU().leftCols(q) / std::sqrt(dx);
  Vq.leftCols(q) = svd.matrixV().leftCols(q) / std::sqrt(dv);

  LowRankState s{gx, gv, orthonormalize(Xq, dx).Q, Matrix::Zero(r, r), orthonormalize(Vq, dv).Q};
  for (Index i = 0; i < q; ++i) s.S(i, i) = sigma[i];
  return s;
}

GridFunction density(const LowRankState& state, const Vector& alpha) {
  if (alpha.size() != state.rank() || state.X.cols() != state.rank())
    throw std::invalid_argument("density: moment vector does not match the rank");
  return GridFunction(state.gx, state.X * (state.S * alpha));
}

Matrix evaluate_full(const LowRankState& state) {
  return state.X * state.S * state.V.transpose();
}

} // namespace lrvp
