#include "oscdx/bootstrap.hpp"

#include <algorithm>
#include <random>

#include "oscdx/autocorrelation.hpp"
#include "oscdx/errors.hpp"
#include "oscdx/kurtosis.hpp"
#include "oscdx/monte_carlo.hpp"
#include "oscdx/rng.hpp"

namespace oscdx {

BootstrapResult bootstrap_kurtosis_ci(const TimeSeries& series, std::size_t reps, double ci_level,
                                      std::uint64_t seed) {
  if (reps < 2) throw InvalidInput("bootstrap needs at least 2 replicates");
  if (!(ci_level > 0.0 && ci_level < 1.0)) throw InvalidInput("ci_level must be in (0, 1)");
  const std::size_t n = series.size();
  if (n < 1000) throw InsufficientData("block bootstrap needs at least 1000 samples");
  // Validates length and variance before any resampling.
  (void)excess_kurtosis(series);

  const std::size_t max_block = std::max<std::size_t>(10, n / 4);
  const std::size_t lag = efold_lag(series, max_block);
  const std::size_t block = std::clamp<std::size_t>(10 * lag, 10, max_block);

  Rng rng = make_stream(seed, 0);
  std::uniform_int_distribution<std::size_t> start(0, n - block);
  const auto x = series.samples();
  std::vector<double> resample(n);
  std::vector<double> stats;
  stats.reserve(reps);
  for (std::size_t r = 0; r < reps; ++r) {
    std::size_t filled = 0;
    while (filled < n) {
      const std::size_t s = start(rng);
      const std::size_t take = std::min(block, n - filled);
      std::copy_n(x.begin() + static_cast<std::ptrdiff_t>(s), take, resample.begin() + static_cast<std::ptrdiff_t>(filled));
      filled += take;
    }
    try {
      stats.push_back(excess_kurtosis(resample));
    } catch (const DegenerateInput&) {
      // A replicate built entirely from constant blocks; it carries no information.
    }
  }
  if (stats.size() < 2) throw DegenerateInput("bootstrap replicates were all degenerate");

  BootstrapResult out;
  out.interval = empirical_interval(stats, ci_level);
  out.block_len = block;
  out.reps = reps;
  out.ci_level = ci_level;
  return out;
}

}  // namespace oscdx
