#pragma once

#include <cstddef>
#include <vector>

#include "oscdx/time_series.hpp"

namespace oscdx {

// Biased (1/N) autocovariance of the mean-removed series at lags 0..max_lag.
// Entry 0 is the sample variance.
std::vector<double> autocorrelation(const TimeSeries& series, std::size_t max_lag);

// First lag (in samples, >= 1) where the normalised autocorrelation drops
// below 1/e, searching up to max_lag. Returns max_lag when it never does.
std::size_t efold_lag(const TimeSeries& series, std::size_t max_lag);

}  // namespace oscdx
