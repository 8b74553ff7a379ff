// Copyright 2026 aeckit authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#ifndef AEC_STFT_H_
#define AEC_STFT_H_

#include <complex>
#include <memory>
#include <vector>

#include "aec/types.h"

namespace aec {

// 40 ms frames with 20 ms hop at 16 kHz, periodic Hann on analysis and
// synthesis. hop must be frame_len/2 so the squared window overlap-adds to a
// strictly positive normalization in steady state.
struct StftConfig {
  int sample_rate_hz = kSampleRateHz;
  int frame_len = 640;
  int hop = 320;
  int fft_size = 640;

  int bins() const { return fft_size / 2 + 1; }
  void validate() const;
};

// One analysis frame: fft_size/2 + 1 complex bins (321 for the default).
struct SpectralFrame {
  std::vector<std::complex<double>> bins;

  SpectralFrame() = default;
  explicit SpectralFrame(size_t n) : bins(n) {}
  size_t size() const { return bins.size(); }
  std::complex<double>& operator[](size_t i) { return bins[i]; }
  const std::complex<double>& operator[](size_t i) const { return bins[i]; }
};

std::vector<double> periodic_hann(int n);

// Streaming analysis. Push arbitrary chunks; a frame is emitted for every
// completed hop. Output is invariant to how the input is chunked.
class StftAnalyzer {
 public:
  explicit StftAnalyzer(const StftConfig& config = {});
  ~StftAnalyzer();
  StftAnalyzer(StftAnalyzer&&) noexcept;
  StftAnalyzer& operator=(StftAnalyzer&&) noexcept;

  const StftConfig& config() const { return config_; }

  // Rejects non-finite samples without consuming them.
  std::vector<SpectralFrame> push(const double* samples, size_t n);
  std::vector<SpectralFrame> push(const SampleBuffer& samples) {
    return push(samples.data(), samples.size());
  }

  void reset();

 private:
  StftConfig config_;
  std::vector<double> window_;
  std::vector<double> fifo_;
  size_t fifo_fill_ = 0;
  std::unique_ptr<class RealFft> fft_;
};

// Streaming synthesis: overlap-add with per-sample normalization by the
// accumulated squared window. Each pushed frame yields hop output samples;
// flush() drains the remaining overlap tail.
class StftSynthesizer {
 public:
  explicit StftSynthesizer(const StftConfig& config = {});
  ~StftSynthesizer();
  StftSynthesizer(StftSynthesizer&&) noexcept;
  StftSynthesizer& operator=(StftSynthesizer&&) noexcept;

  const StftConfig& config() const { return config_; }

  SampleBuffer push(const SpectralFrame& frame);
  SampleBuffer flush();
  void reset();

 private:
  StftConfig config_;
  std::vector<double> window_;
  std::vector<double> ola_;      // pending overlap samples (frame_len - hop)
  std::vector<double> ola_win_;  // pending squared-window sum
  std::vector<double> time_buf_;
  std::unique_ptr<class RealFft> fft_;
};

// ln(max(|bin|, 1e-10)) per bin; the RES feature front-end.
std::vector<double> log_magnitude(const SpectralFrame& frame);

inline constexpr double kLogMagnitudeFloor = 1e-10;

}  // namespace aec

#endif  // AEC_STFT_H_
