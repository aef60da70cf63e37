#pragma once

#include <cstdint>

#include "oscdx/record.hpp"

namespace oscdx {

struct NoiseSpec {
  double std = 0.0;
  std::uint64_t seed = 1;
};

// Adds i.i.d. N(0, std^2) to every sample; channel i draws from stream i of
// spec.seed, so channels are independent and reproducible.
MultiChannelRecord add_measurement_noise(const MultiChannelRecord& record, const NoiseSpec& spec);
TimeSeries add_measurement_noise(const TimeSeries& series, const NoiseSpec& spec, std::uint64_t stream = 0);

}  // namespace oscdx
