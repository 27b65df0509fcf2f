#pragma once

#include <Eigen/Core>

namespace lrvp {

using Index = Eigen::Index;
using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Uniform periodic grid on [a, b) with n nodes; b is identified with a.
class PeriodicGrid {
public:
  PeriodicGrid(double a, double b, Index n);

  double a() const { return a_; }
  double b() const { return b_; }
  Index n() const { return n_; }
  double dx() const { return (b_ - a_) / static_cast<double>(n_); }
  double length() const { return b_ - a_; }

  double node(Index m) const { return a_ + static_cast<double>(m) * dx(); }
  Vector nodes() const;

  /// Angular frequencies 2*pi*m/(b-a) in FFT order (m = 0..n/2-1, -n/2..-1).
  Vector wavenumbers() const;

  bool operator==(const PeriodicGrid& o) const {
    return a_ == o.a_ && b_ == o.b_ && n_ == o.n_;
  }

private:
  double a_, b_;
  Index n_;
};

/// Samples of a function at the nodes of a grid.
struct GridFunction {
  PeriodicGrid grid;
  Vector values;

  GridFunction(PeriodicGrid g, Vector v);
};

// Rectangle rule: dx * sum(values).
double integrate(const PeriodicGrid& g, const Eigen::Ref<const Vector>& values);

// Fourier collocation derivative; the Nyquist coefficient is dropped.
Vector spectral_derivative(const PeriodicGrid& g, const Eigen::Ref<const Vector>& values);

// Column-wise spectral derivative of an n x r block.
Matrix spectral_derivative_columns(const PeriodicGrid& g, const Eigen::Ref<const Matrix>& columns);

/// Exact solution of u_t + speed * u_x = 0 after time tau, by a phase
/// shift of every resolved Fourier mode. The Nyquist mode is left in place.
Vector fourier_advect(const PeriodicGrid& g, const Eigen::Ref<const Vector>& values,
                      double speed, double tau);

} // namespace lrvp
