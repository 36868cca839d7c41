#include "swlab/fft.hpp"

#include <fftw3.h>

#include <cstring>
#include <memory>
#include <mutex>
#include <unordered_map>

namespace swlab::spectral {

namespace {
std::mutex& plan_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace

Workspace::Workspace(int n) : n_(n) {
  if (n < 2) fail(ErrorKind::Validation, "FFT size must be >= 2");
  std::lock_guard<std::mutex> lock(plan_mutex());
  real_buf_ = fftw_alloc_real(n);
  cplx_buf_ = fftw_alloc_complex(n / 2 + 1);
  fwd_ = fftw_plan_dft_r2c_1d(n, real_buf_, static_cast<fftw_complex*>(cplx_buf_), FFTW_ESTIMATE);
  inv_ = fftw_plan_dft_c2r_1d(n, static_cast<fftw_complex*>(cplx_buf_), real_buf_, FFTW_ESTIMATE);
}

Workspace::~Workspace() {
  std::lock_guard<std::mutex> lock(plan_mutex());
  fftw_destroy_plan(static_cast<fftw_plan>(fwd_));
  fftw_destroy_plan(static_cast<fftw_plan>(inv_));
  fftw_free(real_buf_);
  fftw_free(static_cast<fftw_complex*>(cplx_buf_));
}

void Workspace::forward(const double* in, std::complex<double>* out) const {
  std::memcpy(real_buf_, in, sizeof(double) * n_);
  fftw_execute(static_cast<fftw_plan>(fwd_));
  std::memcpy(out, cplx_buf_, sizeof(fftw_complex) * n_modes());
}

void Workspace::inverse(const std::complex<double>* in, double* out) const {
  std::memcpy(cplx_buf_, in, sizeof(fftw_complex) * n_modes());
  fftw_execute(static_cast<fftw_plan>(inv_));
  const double scale = 1.0 / n_;
  for (int i = 0; i < n_; ++i) out[i] = real_buf_[i] * scale;
}

Workspace& thread_workspace(int n) {
  thread_local std::unordered_map<int, std::unique_ptr<Workspace>> cache;
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<Workspace>(n);
  return *slot;
}

std::vector<double> wavenumbers(const Grid1D& grid) {
  const int nm = grid.n_cells / 2 + 1;
  std::vector<double> k(nm);
  const double base = 2.0 * 3.14159265358979323846 / grid.length;
  for (int m = 0; m < nm; ++m) k[m] = base * m;
  return k;
}

}  // namespace swlab::spectral
