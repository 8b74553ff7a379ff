// Copyright 2026 aeckit authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include "aec/stft.h"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <numbers>
#include <stdexcept>
#include <string>

#include "aec/fft.h"

namespace aec {

void StftConfig::validate() const {
  if (sample_rate_hz != kSampleRateHz)
    throw std::invalid_argument("StftConfig: sample rate must be 16000 Hz");
  if (frame_len <= 0 || hop <= 0)
    throw std::invalid_argument("StftConfig: frame_len and hop must be > 0");
  if (hop * 2 != frame_len)
    throw std::invalid_argument("StftConfig: hop must be frame_len/2");
  if (fft_size < frame_len)
    throw std::invalid_argument("StftConfig: fft_size must be >= frame_len");
}

std::vector<double> periodic_hann(int n) {
  std::vector<double> w(n);
  for (int i = 0; i < n; ++i) {
    w[i] = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * i / n);
  }
  return w;
}

StftAnalyzer::StftAnalyzer(const StftConfig& config) : config_(config) {
  config_.validate();
  window_ = periodic_hann(config_.frame_len);
  fifo_.resize(config_.frame_len);
  fft_ = std::make_unique<RealFft>(config_.fft_size);
}

StftAnalyzer::~StftAnalyzer() = default;
StftAnalyzer::StftAnalyzer(StftAnalyzer&&) noexcept = default;
StftAnalyzer& StftAnalyzer::operator=(StftAnalyzer&&) noexcept = default;

void StftAnalyzer::reset() { fifo_fill_ = 0; }

std::vector<SpectralFrame> StftAnalyzer::push(const double* samples,
                                              size_t n) {
  for (size_t i = 0; i < n; ++i) {
    if (!std::isfinite(samples[i]))
      throw std::invalid_argument("stft: non-finite input sample at offset " +
                                  std::to_string(i));
  }

  std::vector<SpectralFrame> out;
  const size_t frame_len = static_cast<size_t>(config_.frame_len);
  const size_t hop = static_cast<size_t>(config_.hop);
  std::vector<double> padded(config_.fft_size, 0.0);

  size_t consumed = 0;
  while (consumed < n) {
    const size_t take = std::min(n - consumed, frame_len - fifo_fill_);
    std::memcpy(fifo_.data() + fifo_fill_, samples + consumed,
                take * sizeof(double));
    fifo_fill_ += take;
    consumed += take;

    if (fifo_fill_ == frame_len) {
      for (size_t i = 0; i < frame_len; ++i) padded[i] = fifo_[i] * window_[i];
      SpectralFrame frame(fft_->bins());
      fft_->forward(padded.data(), frame.bins.data());
      out.push_back(std::move(frame));
      // Slide by one hop; the second half of the frame is kept for overlap.
      std::memmove(fifo_.data(), fifo_.data() + hop,
                   (frame_len - hop) * sizeof(double));
      fifo_fill_ = frame_len - hop;
    }
  }
  return out;
}

StftSynthesizer::StftSynthesizer(const StftConfig& config) : config_(config) {
  config_.validate();
  window_ = periodic_hann(config_.frame_len);
  ola_.assign(config_.frame_len - config_.hop, 0.0);
  ola_win_.assign(config_.frame_len - config_.hop, 0.0);
  time_buf_.resize(config_.fft_size);
  fft_ = std::make_unique<RealFft>(config_.fft_size);
}

StftSynthesizer::~StftSynthesizer() = default;
StftSynthesizer::StftSynthesizer(StftSynthesizer&&) noexcept = default;
StftSynthesizer& StftSynthesizer::operator=(StftSynthesizer&&) noexcept =
    default;

void StftSynthesizer::reset() {
  std::fill(ola_.begin(), ola_.end(), 0.0);
  std::fill(ola_win_.begin(), ola_win_.end(), 0.0);
}

SampleBuffer StftSynthesizer::push(const SpectralFrame& frame) {
  if (frame.size() != static_cast<size_t>(config_.bins()))
    throw std::invalid_argument(
        "istft: frame has " + std::to_string(frame.size()) +
        " bins, expected " + std::to_string(config_.bins()));

  fft_->inverse(frame.bins.data(), time_buf_.data());

  const size_t frame_len = static_cast<size_t>(config_.frame_len);
  const size_t hop = static_cast<size_t>(config_.hop);
  const size_t overlap = frame_len - hop;

  SampleBuffer out(hop);
  for (size_t i = 0; i < hop; ++i) {
    const double w = window_[i];
    const double num = ola_[i] + time_buf_[i] * w;
    const double den = ola_win_[i] + w * w;
    out[i] = den > 1e-12 ? num / den : 0.0;
  }
  // overlap == hop for 50% overlap; the tail of this frame becomes the
  // pending head of the next output hop.
  for (size_t i = 0; i < overlap; ++i) {
    const double w = window_[hop + i];
    ola_[i] = time_buf_[hop + i] * w;
    ola_win_[i] = w * w;
  }
  return out;
}

SampleBuffer StftSynthesizer::flush() {
  SampleBuffer out(ola_.size());
  for (size_t i = 0; i < ola_.size(); ++i) {
    out[i] = ola_win_[i] > 1e-12 ? ola_[i] / ola_win_[i] : 0.0;
  }
  reset();
  return out;
}

std::vector<double> log_magnitude(const SpectralFrame& frame) {
  std::vector<double> out(frame.size());
  for (size_t i = 0; i < frame.size(); ++i) {
    out[i] = std::log(std::max(std::abs(frame.bins[i]), kLogMagnitudeFloor));
  }
  return out;
}

}  // namespace aec
