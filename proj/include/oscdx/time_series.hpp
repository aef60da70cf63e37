#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace oscdx {

// Uniformly sampled scalar channel. Sample i is taken at start_time + i*dt.
class TimeSeries {
 public:
  TimeSeries(std::string label, double dt, std::vector<double> samples, double start_time = 0.0);

  const std::string& label() const noexcept { return label_; }
  double dt() const noexcept { return dt_; }
  double start_time() const noexcept { return start_time_; }
  double end_time() const noexcept { return start_time_ + dt_ * static_cast<double>(samples_.size() - 1); }
  double sample_rate() const noexcept { return 1.0 / dt_; }
  std::size_t size() const noexcept { return samples_.size(); }
  double time_at(std::size_t i) const noexcept { return start_time_ + dt_ * static_cast<double>(i); }

  std::span<const double> samples() const noexcept { return samples_; }
  const std::vector<double>& values() const noexcept { return samples_; }

  TimeSeries with_label(std::string label) const;
  TimeSeries with_samples(std::vector<double> samples) const;

  // Samples whose timestamps fall in [t0, t1]; the window may overhang the
  // series by at most half a sample.
  // Throws InvalidInput when the window is empty or reaches outside the series.
  TimeSeries slice(double t0, double t1) const;

 private:
  std::string label_;
  double dt_;
  double start_time_;
  std::vector<double> samples_;
};

// Absolute-seconds analysis segment.
struct TimeWindow {
  double start = 0.0;
  double end = 0.0;
};

}  // namespace oscdx
