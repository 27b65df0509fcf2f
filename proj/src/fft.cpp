#include "fft.hpp"

#include <fftw3.h>

#include <map>
#include <memory>
#include <mutex>

namespace lrvp::detail {

namespace {

// fftw planning is not thread safe; execution on plan-owned buffers is.
std::mutex planner_mutex;

struct Plan {
  Eigen::Index n;
  double* real = nullptr;
  fftw_complex* spec = nullptr;
  fftw_plan fwd = nullptr;
  fftw_plan bwd = nullptr;

  explicit Plan(Eigen::Index n_) : n(n_) {
    std::lock_guard<std::mutex> lock(planner_mutex);
    real = fftw_alloc_real(static_cast<size_t>(n));
    spec = fftw_alloc_complex(static_cast<size_t>(n / 2 + 1));
    fwd = fftw_plan_dft_r2c_1d(static_cast<int>(n), real, spec, FFTW_ESTIMATE);
    bwd = fftw_plan_dft_c2r_1d(static_cast<int>(n), spec, real, FFTW_ESTIMATE);
  }
  ~Plan() {
    std::lock_guard<std::mutex> lock(planner_mutex);
    fftw_destroy_plan(fwd);
    fftw_destroy_plan(bwd);
    fftw_free(real);
    fftw_free(spec);
  }
  Plan(const Plan&) = delete;
  Plan& operator=(const Plan&) = delete;
};

Plan& plan_for(Eigen::Index n) {
  thread_local std::map<Eigen::Index, std::unique_ptr<Plan>> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, std::make_unique<Plan>(n)).first;
  return *it->second;
}

} // namespace

CVector rfft(const Eigen::Ref<const Eigen::VectorXd>& in) {
  const Eigen::Index n = in.size();
  Plan& p = plan_for(n);
  for (Eigen::Index i = 0; i < n; ++i) p.real[i] = in[i];
  fftw_execute(p.fwd);
  CVector out(n / 2 + 1);
  for (Eigen::Index k = 0; k <= n / 2; ++k) out[k] = {p.spec[k][0], p.spec[k][1]};
  return out;
}

Eigen::VectorXd irfft(const CVector& in, Eigen::Index n) {
  Plan& p = plan_for(n);
  for (Eigen::Index k = 0; k <= n / 2; ++k) {
    p.spec[k][0] = in[k].real();
    p.spec[k][1] = in[k].imag();
  }
  // c2r destroys its input; the buffer is rewritten on every call.
  fftw_execute(p.bwd);
  Eigen::VectorXd out(n);
  const double scale = 1.0 / static_cast<double>(n);
  for (Eigen::Index i = 0; i < n; ++i) out[i] = p.real[i] * scale;
  return out;
}

} // namespace lrvp::detail
