#include "oscdx/monte_carlo.hpp"

#include <algorithm>
#include <cmath>

#include "oscdx/errors.hpp"
#include "oscdx/kurtosis.hpp"
#include "oscdx/noise.hpp"
#include "oscdx/parallel.hpp"

namespace oscdx {

double quantile(std::vector<double> values, double q) {
  if (values.empty()) throw InsufficientData("quantile of an empty sample");
  if (!(q >= 0.0 && q <= 1.0)) throw InvalidInput("quantile level must be in [0, 1]");
  std::sort(values.begin(), values.end());
  const double h = q * static_cast<double>(values.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const std::size_t hi = std::min(lo + 1, values.size() - 1);
  return values[lo] + (h - static_cast<double>(lo)) * (values[hi] - values[lo]);
}

Interval empirical_interval(const std::vector<double>& values, double ci_level) {
  if (!(ci_level > 0.0 && ci_level < 1.0)) throw InvalidInput("ci_level must be in (0, 1)");
  const double tail = (1.0 - ci_level) / 2.0;
  return Interval{quantile(values, tail), quantile(values, 1.0 - tail)};
}

Histogram make_histogram(const std::vector<double>& values, double bin_width) {
  if (values.empty()) throw InsufficientData("histogram of an empty sample");
  if (!(bin_width > 0.0) || !std::isfinite(bin_width)) throw InvalidInput("bin_width must be > 0");
  const auto [mn, mx] = std::minmax_element(values.begin(), values.end());
  // Edges sit on multiples of bin_width so histograms of different runs align.
  const double lo = std::floor(*mn / bin_width) * bin_width;
  auto bins = static_cast<std::size_t>(std::floor((*mx - lo) / bin_width)) + 1;
  Histogram h;
  h.bin_width = bin_width;
  h.counts.assign(bins, 0);
  for (std::size_t i = 0; i <= bins; ++i) h.edges.push_back(lo + static_cast<double>(i) * bin_width);
  for (double v : values) {
    auto b = static_cast<std::size_t>(std::floor((v - lo) / bin_width));
    ++h.counts[std::min(b, bins - 1)];
  }
  return h;
}

MonteCarloResult monte_carlo_kurtosis(const ModelParams& model, const SimConfig& cfg, std::size_t runs,
                                      double ci_level, double bin_width, std::size_t threads, double noise_std) {
  if (runs < 30) throw InvalidInput("Monte Carlo needs at least 30 runs");
  validate(cfg);
  if (!(noise_std >= 0.0) || !std::isfinite(noise_std)) throw InvalidInput("noise_std must be >= 0");
  MonteCarloResult out;
  out.ci_level = ci_level;
  out.kurtosis.assign(runs, 0.0);
  parallel_for(
      runs,
      [&](std::size_t r) {
        SimConfig run_cfg = cfg;
        run_cfg.stream = r;
        const TimeSeries x = simulate(model, run_cfg).x;
        out.kurtosis[r] = excess_kurtosis(noise_std > 0.0 ? add_measurement_noise(x, {noise_std, cfg.seed}, r) : x);
      },
      threads);
  out.interval = empirical_interval(out.kurtosis, ci_level);
  out.histogram = make_histogram(out.kurtosis, bin_width);
  return out;
}

}  // namespace oscdx
