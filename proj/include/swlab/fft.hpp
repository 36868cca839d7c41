#pragma once

#include <complex>
#include <vector>

#include "swlab/core.hpp"

namespace swlab::spectral {

// Real-to-halfcomplex FFT helper around FFTW. Each workspace owns its plans
// and buffers, so distinct instances can execute concurrently; plan creation
// itself is serialized internally (FFTW planning is not thread-safe).
class Workspace {
 public:
  explicit Workspace(int n);
  ~Workspace();
  Workspace(const Workspace&) = delete;
  Workspace& operator=(const Workspace&) = delete;

  int n() const { return n_; }
  int n_modes() const { return n_ / 2 + 1; }

  // Unnormalized forward transform; inverse divides by n.
  void forward(const double* in, std::complex<double>* out) const;
  void inverse(const std::complex<double>* in, double* out) const;

 private:
  int n_;
  double* real_buf_;
  void* cplx_buf_;  // fftw_complex*
  void* fwd_;       // fftw_plan
  void* inv_;       // fftw_plan
};

// k_m = 2*pi*m / L for m = 0..n/2.
std::vector<double> wavenumbers(const Grid1D& grid);

// Per-thread cached workspace for repeated same-size transforms (avoids
// re-planning in stepping loops). Use only from the thread that asked for it.
Workspace& thread_workspace(int n);

}  // namespace swlab::spectral
