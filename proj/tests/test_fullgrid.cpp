#include <doctest.h>

#include <cmath>
#include <numbers>

#include "lrvp/diagnostics.hpp"
#include "lrvp/fullgrid.hpp"
#include "oracles.hpp"

using namespace lrvp;
using std::numbers::pi;

namespace {

FullGridState two_stream_grid(Index n) {
  Scenario sc;
  return fullgrid_from_function([&](double x, double v) { return sc.initial_value(x, v); },
                                PeriodicGrid(sc.x_min, sc.x_max, n), PeriodicGrid(sc.v_min, sc.v_max, n));
}

} // namespace

TEST_SUITE("fullgrid") {

TEST_CASE("sampling and density") {
  PeriodicGrid gx(0.0, 2.0 * pi, 12), gv(-3.0, 3.0, 10);
  const FullGridState s = fullgrid_from_function([](double x, double v) { return std::cos(x) + v * v; }, gx, gv);
  for (Index i = 0; i < 12; ++i)
    for (Index j = 0; j < 10; ++j) CHECK(s.f(i, j) == doctest::Approx(std::cos(gx.node(i)) + gv.node(j) * gv.node(j)));
  const GridFunction rho = fullgrid_density(s);
  for (Index i = 0; i < 12; ++i) {
    double want = 0.0;
    for (Index j = 0; j < 10; ++j) want += s.f(i, j) * gv.dx();
    CHECK(rho.values[i] == doctest::Approx(want).epsilon(1e-14));
  }
}

TEST_CASE("free streaming is an exact shift") {
  // f = g(x) h(v) with band-limited g: after tau, g(x - v tau) h(v).
  PeriodicGrid gx(0.0, 10.0 * pi, 32), gv(-6.0, 6.0, 24);
  auto g = [](double x) { return 1.0 + 0.3 * std::cos(0.2 * x) - 0.1 * std::sin(0.6 * x); };
  auto h = [](double v) { return std::exp(-v * v / 2); };
  const FullGridState s = fullgrid_from_function([&](double x, double v) { return g(x) * h(v); }, gx, gv);
  const double tau = 0.37;
  const FullGridState out = fullgrid_strang_step(s, tau, true);
  double err = 0.0;
  for (Index i = 0; i < 32; ++i)
    for (Index j = 0; j < 24; ++j)
      err = std::max(err, std::abs(out.f(i, j) - g(gx.node(i) - gv.node(j) * tau) * h(gv.node(j))));
  CHECK(err < 1e-12);
}

TEST_CASE("homogeneous equilibrium is stationary") {
  PeriodicGrid gx(0.0, 10.0 * pi, 32), gv(-9.0, 9.0, 64);
  const FullGridState s = fullgrid_from_function(
      [](double, double v) { return std::exp(-v * v / 2) / std::sqrt(2 * pi); }, gx, gv);
  FullGridState t = s;
  for (int k = 0; k < 10; ++k) t = fullgrid_strang_step(t, 0.1);
  CHECK(oracle::max_abs(t.f - s.f) < 1e-13);
}

TEST_CASE("mass and momentum per step") {
  // Linear phase of the instability. Once filaments reach the v-grid scale
  // the sum of v times a Fourier-shifted row no longer moves exactly with
  // the shift and the momentum change grows to ~1e-9 per step.
  FullGridState s = two_stream_grid(64);
  for (int k = 0; k < 100; ++k) {
    const DiagnosticsRecord a = diagnose_fullgrid(s, fullgrid_field(s), 0.0);
    s = fullgrid_strang_step(s, 0.1);
    const DiagnosticsRecord b = diagnose_fullgrid(s, fullgrid_field(s), 0.0);
    CHECK(std::abs(b.mass - a.mass) <= 1e-12 * a.mass);
    CHECK(std::abs(b.momentum - a.momentum) <= 1e-11 * a.mass);
  }
}

TEST_CASE("growth rate is converged in tau") {
  auto rate = [](double tau) {
    FullGridState s = two_stream_grid(128);
    std::vector<double> t, ee;
    const int steps = static_cast<int>(std::lround(40.0 / tau));
    for (int k = 0; k <= steps; ++k) {
      if (k > 0) s = fullgrid_strang_step(s, tau);
      t.push_back(k * tau);
      ee.push_back(electric_energy(fullgrid_field(s)));
    }
    return fit_growth_rate(t, ee);
  };
  const double a = rate(0.025), b = rate(0.0125);
  MESSAGE("electric energy growth rate ", a, " (tau = 0.025), ", b, " (tau = 0.0125)");
  CHECK(a == doctest::Approx(b).epsilon(0.01));
}

TEST_CASE("Strang step is second order") {
  // Self-convergence at t = 1 against a fine-step reference.
  const FullGridState s0 = two_stream_grid(32);
  auto run = [&](double tau) {
    FullGridState s = s0;
    const int steps = static_cast<int>(std::lround(1.0 / tau));
    for (int k = 0; k < steps; ++k) s = fullgrid_strang_step(s, tau);
    return s.f;
  };
  const Matrix ref = run(1.0 / 256);
  const double e1 = (run(0.25) - ref).norm(), e2 = (run(0.125) - ref).norm();
  CHECK(e1 > 0.0);
  CHECK(std::log2(e1 / e2) == doctest::Approx(2.0).epsilon(0.1));
}

TEST_CASE("splitting Lie step") {
  SUBCASE("n_sub must be positive") {
    CHECK_THROWS_AS(fullgrid_splitting_lie_step(two_stream_grid(16), 0.1, 0), std::invalid_argument);
  }
  SUBCASE("homogeneous equilibrium") {
    PeriodicGrid gx(0.0, 10.0 * pi, 16), gv(-9.0, 9.0, 32);
    const FullGridState s = fullgrid_from_function(
        [](double, double v) { return std::exp(-v * v / 2) / std::sqrt(2 * pi); }, gx, gv);
    CHECK(oracle::max_abs(fullgrid_splitting_lie_step(s, 0.1, 2).f - s.f) < 1e-13);
  }
  SUBCASE("one step is consistent with the Strang step") {
    // Both are consistent with the same equation: the one-step difference
    // is a local error, O(tau^2) or smaller.
    const FullGridState s = two_stream_grid(32);
    auto gap = [&](double tau) {
      return (fullgrid_splitting_lie_step(s, tau, 4).f - fullgrid_strang_step(s, tau).f).norm();
    };
    const double a = gap(0.1), b = gap(0.05);
    CHECK(a > 0.0);
    CHECK(std::log2(a / b) > 1.9);
  }
}

}
