#include "oscdx/spike.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "oscdx/errors.hpp"

namespace oscdx {

SpikeMetrics spike_metrics(const SpectrumEstimate& spectrum, double peak_snr_min_db) {
  const auto& f = spectrum.freqs;
  const auto& p = spectrum.psd;
  if (f.size() < kMinSpikeBins || p.size() != f.size()) {
    std::ostringstream msg;
    msg << "spike metrics need at least " << kMinSpikeBins << " bins, got " << f.size();
    throw InsufficientData(msg.str());
  }
  if (!(spectrum.resolution_bw > 0.0)) throw InvalidInput("spectrum has no resolution bandwidth");

  std::size_t first = 0;
  while (first < f.size() && !(f[first] > 0.0)) ++first;
  std::size_t peak = first;
  for (std::size_t k = first; k < f.size(); ++k) {
    if (p[k] > p[peak]) peak = k;
  }
  if (!(p[peak] > 0.0)) throw DegenerateInput("spectrum is identically zero");

  std::vector<double> rest(p.begin() + static_cast<std::ptrdiff_t>(first), p.end());
  const auto mid = rest.begin() + static_cast<std::ptrdiff_t>(rest.size() / 2);
  std::nth_element(rest.begin(), mid, rest.end());
  const double floor = *mid;

  SpikeMetrics m;
  m.peak_freq = f[peak];
  m.peak_snr_db = floor > 0.0 ? 10.0 * std::log10(p[peak] / floor) : INFINITY;
  m.peak_present = m.peak_snr_db >= peak_snr_min_db;
  if (!m.peak_present) return m;

  const double half = p[peak] / 2.0;
  double left = f[first];
  for (std::size_t k = peak; k > first; --k) {
    if (p[k - 1] < half) {
      left = f[k - 1] + (half - p[k - 1]) / (p[k] - p[k - 1]) * (f[k] - f[k - 1]);
      break;
    }
  }
  double right = f.back();
  for (std::size_t k = peak; k + 1 < f.size(); ++k) {
    if (p[k + 1] < half) {
      right = f[k] + (p[k] - half) / (p[k] - p[k + 1]) * (f[k + 1] - f[k]);
      break;
    }
  }
  m.halfpower_bw = right - left;
  m.bw_ratio = m.halfpower_bw / spectrum.resolution_bw;
  return m;
}

}  // namespace oscdx
