#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "oscdx/time_series.hpp"

namespace oscdx {

inline constexpr std::size_t kMinKurtosisSamples = 100;

// Population (biased) excess kurtosis mu4 / var^2 - 3 about the sample mean.
// Throws InsufficientData below kMinKurtosisSamples, DegenerateInput on zero
// variance, InvalidInput on non-finite samples.
double excess_kurtosis(std::span<const double> samples);
double excess_kurtosis(const TimeSeries& series);

struct KurtosisTrace {
  std::vector<double> times;                 // timestamp of each window's last sample
  std::vector<std::optional<double>> values; // nullopt where the window variance is zero
  double window_len = 0.0;                   // s
  double hop = 0.0;                          // s
};

KurtosisTrace moving_kurtosis(const TimeSeries& series, double window_len, double hop);

}  // namespace oscdx
