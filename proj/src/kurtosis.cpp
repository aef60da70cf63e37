#include "oscdx/kurtosis.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "oscdx/errors.hpp"

namespace oscdx {

namespace {

// Returns nullopt on zero variance instead of throwing; the moving trace
// needs that distinction per window.
std::optional<double> kurtosis_or_none(std::span<const double> x) {
  const double n = static_cast<double>(x.size());
  double mean = 0.0;
  for (double v : x) mean += v;
  mean /= n;
  double m2 = 0.0;
  double m4 = 0.0;
  for (double v : x) {
    const double d = v - mean;
    const double d2 = d * d;
    m2 += d2;
    m4 += d2 * d2;
  }
  m2 /= n;
  m4 /= n;
  if (!(m2 > 0.0)) return std::nullopt;
  // Population excess kurtosis is bounded below by -2; rounding can dip past it.
  return std::max(-2.0, m4 / (m2 * m2) - 3.0);
}

void check_samples(std::span<const double> x) {
  if (x.size() < kMinKurtosisSamples) {
    std::ostringstream msg;
    msg << "kurtosis needs at least " << kMinKurtosisSamples << " samples, got " << x.size();
    throw InsufficientData(msg.str());
  }
  for (double v : x) {
    if (!std::isfinite(v)) throw InvalidInput("kurtosis: non-finite sample");
  }
}

}  // namespace

double excess_kurtosis(std::span<const double> samples) {
  check_samples(samples);
  auto k = kurtosis_or_none(samples);
  if (!k) throw DegenerateInput("kurtosis undefined for a zero-variance series");
  return *k;
}

double excess_kurtosis(const TimeSeries& series) { return excess_kurtosis(series.samples()); }

KurtosisTrace moving_kurtosis(const TimeSeries& series, double window_len, double hop) {
  if (!(window_len > 0.0) || !std::isfinite(window_len)) throw InvalidInput("window_len must be > 0");
  if (!(hop > 0.0) || !std::isfinite(hop)) throw InvalidInput("hop must be > 0");
  const auto w = static_cast<std::size_t>(std::llround(window_len / series.dt()));
  const auto h = std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(hop / series.dt())));
  if (w < kMinKurtosisSamples) {
    std::ostringstream msg;
    msg << "moving window of " << window_len << " s holds " << w << " samples; need "
        << kMinKurtosisSamples;
    throw InsufficientData(msg.str());
  }
  if (w > series.size()) throw InsufficientData("moving window longer than the series");
  check_samples(series.samples());

  KurtosisTrace trace;
  trace.window_len = static_cast<double>(w) * series.dt();
  trace.hop = static_cast<double>(h) * series.dt();
  const auto x = series.samples();
  for (std::size_t i = 0; i + w <= x.size(); i += h) {
    trace.times.push_back(series.time_at(i + w - 1));
    trace.values.push_back(kurtosis_or_none(x.subspan(i, w)));
  }
  return trace;
}

}  // namespace oscdx
