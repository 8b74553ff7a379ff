// Copyright 2026 aeckit authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include "aec/fft.h"

#include <fftw3.h>

#include <cstring>
#include <mutex>
#include <stdexcept>

namespace aec {

namespace {
// FFTW plan creation/destruction is not thread-safe; executions are.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace

RealFft::RealFft(size_t n) : n_(n) {
  if (n < 2) throw std::invalid_argument("RealFft: size must be >= 2");
  real_buf_ = fftw_alloc_real(n_);
  fftw_complex* cbuf = fftw_alloc_complex(bins());
  cplx_buf_ = cbuf;
  std::lock_guard<std::mutex> lock(planner_mutex());
  // FFTW_ESTIMATE keeps planning deterministic and cheap.
  fwd_plan_ = fftw_plan_dft_r2c_1d(static_cast<int>(n_), real_buf_, cbuf,
                                   FFTW_ESTIMATE);
  inv_plan_ = fftw_plan_dft_c2r_1d(static_cast<int>(n_), cbuf, real_buf_,
                                   FFTW_ESTIMATE);
  if (fwd_plan_ == nullptr || inv_plan_ == nullptr)
    throw std::runtime_error("RealFft: planning failed");
}

RealFft::~RealFft() {
  std::lock_guard<std::mutex> lock(planner_mutex());
  fftw_destroy_plan(static_cast<fftw_plan>(fwd_plan_));
  fftw_destroy_plan(static_cast<fftw_plan>(inv_plan_));
  fftw_free(real_buf_);
  fftw_free(cplx_buf_);
}

void RealFft::forward(const double* in, std::complex<double>* out) {
  std::memcpy(real_buf_, in, n_ * sizeof(double));
  fftw_execute(static_cast<fftw_plan>(fwd_plan_));
  std::memcpy(out, cplx_buf_, bins() * sizeof(std::complex<double>));
}

void RealFft::inverse(const std::complex<double>* in, double* out) {
  std::memcpy(cplx_buf_, in, bins() * sizeof(std::complex<double>));
  fftw_execute(static_cast<fftw_plan>(inv_plan_));
  const double scale = 1.0 / static_cast<double>(n_);
  for (size_t i = 0; i < n_; ++i) out[i] = real_buf_[i] * scale;
}

}  // namespace aec
