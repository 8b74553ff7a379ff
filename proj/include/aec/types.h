// Copyright 2026 aeckit authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#ifndef AEC_TYPES_H_
#define AEC_TYPES_H_

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace aec {

// Mono PCM at 16 kHz, amplitudes nominally in [-1, 1].
using SampleBuffer = std::vector<double>;

inline constexpr int kSampleRateHz = 16000;

inline double energy(const SampleBuffer& x) {
  double e = 0.0;
  for (double v : x) e += v * v;
  return e;
}

inline double rms(const SampleBuffer& x) {
  return x.empty() ? 0.0 : std::sqrt(energy(x) / static_cast<double>(x.size()));
}

inline bool all_finite(const SampleBuffer& x) {
  for (double v : x) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

}  // namespace aec

#endif  // AEC_TYPES_H_
