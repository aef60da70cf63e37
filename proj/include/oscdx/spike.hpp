#pragma once

#include "oscdx/spectrum.hpp"

namespace oscdx {

inline constexpr std::size_t kMinSpikeBins = 64;

// Shape of the dominant spectral peak. When peak_present is false only
// peak_freq and peak_snr_db are meaningful.
struct SpikeMetrics {
  bool peak_present = false;
  double peak_freq = 0.0;     // Hz
  double peak_snr_db = 0.0;   // peak over spectral median
  double halfpower_bw = 0.0;  // Hz, full width at peak/2
  double bw_ratio = 0.0;      // halfpower_bw / resolution_bw
};

// Finds the global maximum over bins above 0 Hz. halfpower_bw is measured at
// half the peak value, interpolating linearly between bins.
SpikeMetrics spike_metrics(const SpectrumEstimate& spectrum, double peak_snr_min_db = 10.0);

}  // namespace oscdx
