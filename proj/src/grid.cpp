#include "lrvp/grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "fft.hpp"

namespace lrvp {

PeriodicGrid::PeriodicGrid(double a, double b, Index n) : a_(a), b_(b), n_(n) {
  if (n < 1) throw std::invalid_argument("PeriodicGrid: node count must be positive");
  if (!(b > a)) throw std::invalid_argument("PeriodicGrid: require b > a");
}

Vector PeriodicGrid::nodes() const {
  Vector x(n_);
  for (Index m = 0; m < n_; ++m) x[m] = node(m);
  return x;
}

Vector PeriodicGrid::wavenumbers() const {
  Vector k(n_);
  const double base = 2.0 * std::numbers::pi / length();
  for (Index m = 0; m < n_; ++m) {
    const Index f = (m < (n_ + 1) / 2) ? m : m - n_;
    k[m] = base * static_cast<double>(f);
  }
  return k;
}

GridFunction::GridFunction(PeriodicGrid g, Vector v) : grid(g), values(std::move(v)) {
  if (values.size() != grid.n())
    throw std::invalid_argument("GridFunction: expected " + std::to_string(grid.n()) +
                                " samples, got " + std::to_string(values.size()));
}

namespace {
void check_length(const PeriodicGrid& g, Index len, const char* what) {
  if (len != g.n())
    throw std::invalid_argument(std::string(what) + ": length " + std::to_string(len) +
                                " does not match grid size " + std::to_string(g.n()));
}
} // namespace

double integrate(const PeriodicGrid& g, const Eigen::Ref<const Vector>& values) {
  check_length(g, values.size(), "integrate");
  return g.dx() * values.sum();
}

Vector spectral_derivative(const PeriodicGrid& g, const Eigen::Ref<const Vector>& values) {
  check_length(g, values.size(), "spectral_derivative");
  const Index n = g.n();
  detail::CVector c = detail::rfft(values);
  for (Index m = 0; m < c.size(); ++m)
    c[m] *= std::complex<double>(0.0, detail::bin_wavenumber(m, n, g.length()));
  return detail::irfft(c, n);
}

Matrix spectral_derivative_columns(const PeriodicGrid& g, const Eigen::Ref<const Matrix>& columns) {
  check_length(g, columns.rows(), "spectral_derivative_columns");
  Matrix out(columns.rows(), columns.cols());
  for (Index j = 0; j < columns.cols(); ++j) out.col(j) = spectral_derivative(g, columns.col(j));
  return out;
}

Vector fourier_advect(const PeriodicGrid& g, const Eigen::Ref<const Vector>& values,
                      double speed, double tau) {
  check_length(g, values.size(), "fourier_advect");
  const double shift = speed * tau;
  if (shift == 0.0) return values;
  const Index n = g.n();
  detail::CVector c = detail::rfft(values);
  for (Index m = 1; m < c.size(); ++m) {
    const double k = detail::bin_wavenumber(m, n, g.length());
    c[m] *= std::polar(1.0, -k * shift);
  }
  return detail::irfft(c, n);
}

} // namespace lrvp
