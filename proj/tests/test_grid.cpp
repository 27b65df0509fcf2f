#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "lrvp/grid.hpp"
#include "oracles.hpp"

using namespace lrvp;
using std::numbers::pi;

namespace {

Vector sample(const PeriodicGrid& g, double (*f)(double)) {
  Vector u(g.n());
  for (Index m = 0; m < g.n(); ++m) u[m] = f(g.node(m));
  return u;
}

} // namespace

TEST_SUITE("grid") {

TEST_CASE("nodes exclude the right endpoint") {
  PeriodicGrid g(-9.0, 9.0, 128);
  CHECK(g.node(0) == -9.0);
  CHECK(g.dx() * 128 == doctest::Approx(18.0).epsilon(1e-15));
  CHECK(g.nodes()[127] == doctest::Approx(9.0 - g.dx()));
  CHECK_THROWS_AS(PeriodicGrid(1.0, 1.0, 8), std::invalid_argument);
  CHECK_THROWS_AS(PeriodicGrid(0.0, 1.0, 0), std::invalid_argument);
}

TEST_CASE("wavenumbers in FFT order") {
  PeriodicGrid g(0.0, 10.0 * pi, 8);
  const Vector k = g.wavenumbers();
  const double k0 = 2.0 * pi / (10.0 * pi);
  const double expect[] = {0, 1, 2, 3, -4, -3, -2, -1};
  for (int m = 0; m < 8; ++m) CHECK(k[m] == doctest::Approx(expect[m] * k0));
}

TEST_CASE("GridFunction checks its length") {
  PeriodicGrid g(0.0, 1.0, 4);
  CHECK_THROWS_AS(GridFunction(g, Vector::Zero(3)), std::invalid_argument);
}

TEST_CASE("integrate") {
  PeriodicGrid g16(0.0, 2.0 * pi, 16), g32(0.0, 2.0 * pi, 32);
  CHECK(integrate(g16, Vector::Ones(16)) == doctest::Approx(2.0 * pi).epsilon(1e-15));
  CHECK(std::abs(integrate(g32, sample(g32, [](double x) { return std::sin(x); }))) < 1e-14);
  // (2 pi)^{1/4}: the normalized Gaussian of the incompatibility example
  PeriodicGrid gv(-9.0, 9.0, 128);
  Vector V1(128);
  for (Index m = 0; m < 128; ++m) V1[m] = std::exp(-gv.node(m) * gv.node(m)) / std::pow(pi / 2.0, 0.25);
  CHECK(std::abs(integrate(gv, V1) - std::pow(2.0 * pi, 0.25)) < 1e-10);
  CHECK_THROWS_AS(integrate(g16, Vector::Ones(15)), std::invalid_argument);
}

TEST_CASE("spectral derivative of trigonometric samples") {
  PeriodicGrid g(0.0, 2.0 * pi, 32);
  const Vector ds = spectral_derivative(g, sample(g, [](double x) { return std::sin(x); }));
  CHECK(oracle::max_abs(ds - sample(g, [](double x) { return std::cos(x); })) < 1e-12);
  CHECK(oracle::max_abs(spectral_derivative(g, Vector::Constant(32, 3.0))) < 1e-14);
  const Vector dc = spectral_derivative(g, sample(g, [](double x) { return std::cos(2.0 * x); }));
  CHECK(oracle::max_abs(dc - sample(g, [](double x) { return -2.0 * std::sin(2.0 * x); })) < 1e-12);
  // product of two resolved modes
  const Vector dp = spectral_derivative(g, sample(g, [](double x) { return std::sin(3.0 * x) * std::cos(5.0 * x); }));
  const Vector ex = sample(g, [](double x) { return 3.0 * std::cos(3.0 * x) * std::cos(5.0 * x) - 5.0 * std::sin(3.0 * x) * std::sin(5.0 * x); });
  CHECK(oracle::max_abs(dp - ex) < 1e-10);
}

TEST_CASE("spectral derivative matches the dense DFT matrix") {
  std::mt19937_64 rng(3);
  for (Index n : {16, 17, 32}) {
    PeriodicGrid g(-1.0, 2.5, n);
    const Matrix D = oracle::derivative_matrix(g);
    const Matrix U = oracle::random_matrix(n, 3, rng);
    CHECK(oracle::max_abs(spectral_derivative_columns(g, U) - D * U) < 1e-11 * n);
  }
}

TEST_CASE("Nyquist mode is dropped and derivatives integrate to zero") {
  PeriodicGrid g(0.0, 1.0, 16);
  Vector alt(16);
  for (Index m = 0; m < 16; ++m) alt[m] = (m % 2 == 0) ? 1.0 : -1.0;
  CHECK(oracle::max_abs(spectral_derivative(g, alt)) < 1e-13);
  std::mt19937_64 rng(5);
  const Vector u = oracle::random_matrix(16, 1, rng).col(0);
  CHECK(std::abs(integrate(g, spectral_derivative(g, u))) < 1e-13);
}

TEST_CASE("fourier advection") {
  PeriodicGrid g(0.0, 2.0 * pi, 32);
  const Vector s = sample(g, [](double x) { return std::sin(x); });
  const Vector shifted = fourier_advect(g, s, 1.0, pi / 2.0);
  CHECK(oracle::max_abs(shifted - sample(g, [](double x) { return std::sin(x - pi / 2.0); })) < 1e-12);
  std::mt19937_64 rng(7);
  const Vector u = oracle::random_matrix(32, 1, rng).col(0);
  CHECK(fourier_advect(g, u, 0.0, 1.0) == u);
  CHECK(oracle::max_abs(fourier_advect(g, Vector::Constant(32, 2.5), 3.7, 0.3) - Vector::Constant(32, 2.5)) < 1e-14);
  // mass is preserved
  const Vector w = oracle::smooth_random(g, rng);
  const Vector aw = fourier_advect(g, w, -2.3, 0.71);
  CHECK(std::abs(integrate(g, aw) - integrate(g, w)) < 1e-13 * std::abs(integrate(g, w)) + 1e-14);
  // a shift by a whole grid cell permutes the samples, except that the
  // Nyquist component keeps its sign
  const Vector cell = fourier_advect(g, u, 1.0, g.dx());
  Vector perm(32), nyq(32);
  for (Index m = 0; m < 32; ++m) {
    perm[m] = u[(m + 31) % 32];
    nyq[m] = (m % 2 == 0) ? 1.0 : -1.0;
  }
  const double c = u.dot(nyq) / 32.0;
  CHECK(oracle::max_abs(cell - (perm + 2.0 * c * nyq)) < 1e-12);
}

} // TEST_SUITE
