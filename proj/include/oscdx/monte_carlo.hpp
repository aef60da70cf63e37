#pragma once

#include <cstddef>
#include <vector>

#include "oscdx/bootstrap.hpp"
#include "oscdx/models.hpp"

namespace oscdx {

struct Histogram {
  double bin_width = 0.0;
  std::vector<double> edges;        // size = counts.size() + 1
  std::vector<std::size_t> counts;
};

struct MonteCarloResult {
  std::vector<double> kurtosis;  // indexed by run
  Histogram histogram;
  Interval interval;             // empirical quantiles at (1 -+ ci_level)/2
  double ci_level = 0.0;
};

// Linear-interpolation sample quantile (Hyndman-Fan type 7).
double quantile(std::vector<double> values, double q);

Interval empirical_interval(const std::vector<double>& values, double ci_level);

Histogram make_histogram(const std::vector<double>& values, double bin_width);

// Run r simulates with stream r of cfg.seed; runs are spread over worker
// threads and merged by index. noise_std > 0 adds measurement noise to x,
// seeded by (cfg.seed, r).
MonteCarloResult monte_carlo_kurtosis(const ModelParams& model, const SimConfig& cfg, std::size_t runs,
                                      double ci_level = 0.90, double bin_width = 0.05,
                                      std::size_t threads = 0, double noise_std = 0.0);

}  // namespace oscdx
