// Copyright 2026 aeckit authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#ifndef AEC_FFT_H_
#define AEC_FFT_H_

#include <complex>
#include <cstddef>
#include <vector>

namespace aec {

// Real-input FFT of arbitrary length backed by FFTW. Each instance owns its
// own plans and buffers, so independent instances may run on different
// threads; plan creation itself is serialized internally.
class RealFft {
 public:
  explicit RealFft(size_t n);
  ~RealFft();

  RealFft(const RealFft&) = delete;
  RealFft& operator=(const RealFft&) = delete;

  size_t size() const { return n_; }
  size_t bins() const { return n_ / 2 + 1; }

  // in: n real samples -> out: n/2+1 complex bins (unscaled).
  void forward(const double* in, std::complex<double>* out);

  // in: n/2+1 complex bins -> out: n real samples, scaled by 1/n so that
  // inverse(forward(x)) == x.
  void inverse(const std::complex<double>* in, double* out);

 private:
  size_t n_;
  double* real_buf_;
  void* cplx_buf_;  // fftw_complex[bins]
  void* fwd_plan_;
  void* inv_plan_;
};

}  // namespace aec

#endif  // AEC_FFT_H_
