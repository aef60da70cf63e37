#include "oscdx/noise.hpp"

#include <cmath>

#include "oscdx/errors.hpp"
#include "oscdx/rng.hpp"

namespace oscdx {

namespace {

// Measurement noise draws from its own stream range so that reusing a
// simulation seed does not correlate it with the process noise.
constexpr std::uint64_t kMeasurementStreamBase = 0x6e6f697365ULL << 24;

void check(const NoiseSpec& spec) {
  if (!(spec.std >= 0.0) || !std::isfinite(spec.std)) throw InvalidInput("noise std must be finite and >= 0");
}

}  // namespace

TimeSeries add_measurement_noise(const TimeSeries& series, const NoiseSpec& spec, std::uint64_t stream) {
  check(spec);
  if (spec.std == 0.0) return series;
  GaussianSource normal(make_stream(spec.seed, kMeasurementStreamBase + stream));
  std::vector<double> out = series.values();
  for (double& v : out) v += spec.std * normal();
  return series.with_samples(std::move(out));
}

MultiChannelRecord add_measurement_noise(const MultiChannelRecord& record, const NoiseSpec& spec) {
  check(spec);
  MultiChannelRecord out = record;
  for (std::size_t i = 0; i < out.channels.size(); ++i) {
    out.channels[i] = add_measurement_noise(record.channels[i], spec, i);
  }
  return out;
}

}  // namespace oscdx
