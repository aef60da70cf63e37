#pragma once

#include <cstddef>
#include <cstdint>

#include "oscdx/time_series.hpp"

namespace oscdx {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool contains(double v) const noexcept { return lo <= v && v <= hi; }
  double width() const noexcept { return hi - lo; }
};

struct BootstrapResult {
  Interval interval;
  std::size_t block_len = 0;  // samples
  std::size_t reps = 0;
  double ci_level = 0.0;
};

// Moving-block bootstrap percentile interval for excess kurtosis. Block length
// is ten e-folding times of the autocorrelation, clamped to [10, N/4].
BootstrapResult bootstrap_kurtosis_ci(const TimeSeries& series, std::size_t reps, double ci_level,
                                      std::uint64_t seed = 1);

}  // namespace oscdx
