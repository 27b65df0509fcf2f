#include "lrvp/poisson.hpp"

#include <stdexcept>

#include "fft.hpp"

namespace lrvp {

ElectricField solve_field(const PeriodicGrid& gx, const GridFunction& rho) {
  if (rho.values.size() != gx.n()) throw std::invalid_argument("solve_field: density size != n_x");
  const Index n = gx.n();
  const Vector source = Vector::Ones(n) - rho.values;
  detail::CVector c = detail::rfft(source);
  c[0] = 0.0;
  for (Index m = 1; m < c.size(); ++m) {
    const double k = detail::bin_wavenumber(m, n, gx.length());
    c[m] = (k == 0.0) ? std::complex<double>(0.0) : c[m] / std::complex<double>(0.0, k);
  }
  return ElectricField(gx, detail::irfft(c, n));
}

double electric_energy(const ElectricField& E) {
  return 0.5 * integrate(E.grid, E.values.cwiseAbs2());
}

} // namespace lrvp
