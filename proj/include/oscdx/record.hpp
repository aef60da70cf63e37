#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oscdx/time_series.hpp"

namespace oscdx {

// Channels sharing one timebase. `times` keeps the time column exactly as read
// from disk, so a read/write round trip reproduces it bit for bit; it may be
// empty for records built in memory.
struct MultiChannelRecord {
  std::vector<TimeSeries> channels;
  std::vector<double> times;
  std::optional<TimeWindow> window;

  const TimeSeries& channel(const std::string& label) const;
  std::vector<std::string> labels() const;
};

// Checks labels are unique and that all channels share dt, start time and
// length. Throws InvalidInput.
void validate_shared_timebase(const MultiChannelRecord& record);

}  // namespace oscdx
