// Copyright 2026 aeckit authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#ifndef AEC_TDE_H_
#define AEC_TDE_H_

#include <utility>

#include "aec/types.h"

namespace aec {

struct DelayEstimate {
  int delay_samples = 0;     // mic lags reference by this much
  double confidence = 0.0;   // peak-to-secondary-peak prominence, in [0, 1]
};

// GCC-PHAT over the non-negative lag range [0, max_delay_ms]. Blocks of 4096
// samples with 50% overlap; the PHAT-normalized cross spectra are averaged
// before the final inverse transform.
//
// Throws if either buffer is shorter than 1 s, max_delay_ms is out of
// (0, 1000], or the signals carry no correlation (e.g. all-zero input).
DelayEstimate estimate_delay(const SampleBuffer& reference,
                             const SampleBuffer& mic,
                             int max_delay_ms = 500);

// Shifts the reference forward by delay_samples (zero-padded head) and trims
// both signals to their common length.
std::pair<SampleBuffer, SampleBuffer> align(const SampleBuffer& reference,
                                            const SampleBuffer& mic,
                                            const DelayEstimate& delay);

}  // namespace aec

#endif  // AEC_TDE_H_
