#include "oscdx/time_series.hpp"

#include <cmath>
#include <sstream>

#include "oscdx/errors.hpp"

namespace oscdx {

TimeSeries::TimeSeries(std::string label, double dt, std::vector<double> samples, double start_time)
    : label_(std::move(label)), dt_(dt), start_time_(start_time), samples_(std::move(samples)) {
  if (!(dt_ > 0.0) || !std::isfinite(dt_)) throw InvalidInput("TimeSeries: dt must be finite and > 0");
  if (!std::isfinite(start_time_)) throw InvalidInput("TimeSeries: start_time must be finite");
  if (samples_.empty()) throw InvalidInput("TimeSeries: samples must be non-empty");
}

TimeSeries TimeSeries::with_label(std::string label) const {
  return TimeSeries(std::move(label), dt_, samples_, start_time_);
}

TimeSeries TimeSeries::with_samples(std::vector<double> samples) const {
  return TimeSeries(label_, dt_, std::move(samples), start_time_);
}

TimeSeries TimeSeries::slice(double t0, double t1) const {
  if (!(t1 > t0)) throw InvalidInput("window end must exceed window start");
  const double slack = 0.5 * dt_;
  if (t0 < start_time_ - slack || t1 > end_time() + slack) {
    std::ostringstream msg;
    msg << "window [" << t0 << ", " << t1 << "] s lies outside series '" << label_ << "' covering ["
        << start_time_ << ", " << end_time() << "] s";
    throw InvalidInput(msg.str());
  }
  const double first = std::ceil((t0 - start_time_) / dt_ - 1e-6);
  const double last = std::floor((t1 - start_time_) / dt_ + 1e-6);
  const auto i0 = static_cast<std::size_t>(std::max(0.0, first));
  const auto i1 = std::min(samples_.size() - 1, static_cast<std::size_t>(std::max(0.0, last)));
  if (i1 < i0) throw InvalidInput("window selects no samples");
  std::vector<double> out(samples_.begin() + static_cast<std::ptrdiff_t>(i0),
                          samples_.begin() + static_cast<std::ptrdiff_t>(i1) + 1);
  return TimeSeries(label_, dt_, std::move(out), time_at(i0));
}

}  // namespace oscdx
