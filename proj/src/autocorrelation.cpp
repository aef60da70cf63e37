#include "oscdx/autocorrelation.hpp"

#include <algorithm>
#include <cmath>

#include "oscdx/errors.hpp"

namespace oscdx {

namespace {

std::vector<double> centred(const TimeSeries& series) {
  std::vector<double> x = series.values();
  double mean = 0.0;
  for (double v : x) mean += v;
  mean /= static_cast<double>(x.size());
  for (double& v : x) v -= mean;
  return x;
}

double lag_sum(const std::vector<double>& x, std::size_t lag) {
  double s = 0.0;
  for (std::size_t i = 0; i + lag < x.size(); ++i) s += x[i] * x[i + lag];
  return s / static_cast<double>(x.size());
}

}  // namespace

std::vector<double> autocorrelation(const TimeSeries& series, std::size_t max_lag) {
  if (max_lag >= series.size()) throw InvalidInput("max_lag must be smaller than the series length");
  const auto x = centred(series);
  std::vector<double> acf(max_lag + 1);
  for (std::size_t k = 0; k <= max_lag; ++k) acf[k] = lag_sum(x, k);
  return acf;
}

std::size_t efold_lag(const TimeSeries& series, std::size_t max_lag) {
  if (max_lag < 1) throw InvalidInput("max_lag must be >= 1");
  max_lag = std::min(max_lag, series.size() - 1);
  const auto x = centred(series);
  const double c0 = lag_sum(x, 0);
  if (!(c0 > 0.0)) throw DegenerateInput("autocorrelation undefined for a zero-variance series");
  const double target = c0 * std::exp(-1.0);
  for (std::size_t k = 1; k <= max_lag; ++k) {
    if (lag_sum(x, k) < target) return k;
  }
  return max_lag;
}

}  // namespace oscdx
