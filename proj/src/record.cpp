#include "oscdx/record.hpp"

#include <cmath>
#include <set>

#include "oscdx/errors.hpp"

namespace oscdx {

const TimeSeries& MultiChannelRecord::channel(const std::string& label) const {
  for (const auto& c : channels) {
    if (c.label() == label) return c;
  }
  std::string known;
  for (const auto& c : channels) known += (known.empty() ? "" : ", ") + c.label();
  throw InvalidInput("no channel '" + label + "' (available: " + known + ")");
}

std::vector<std::string> MultiChannelRecord::labels() const {
  std::vector<std::string> out;
  out.reserve(channels.size());
  for (const auto& c : channels) out.push_back(c.label());
  return out;
}

void validate_shared_timebase(const MultiChannelRecord& record) {
  if (record.channels.empty()) throw InvalidInput("record has no channels");
  std::set<std::string> seen;
  const TimeSeries& ref = record.channels.front();
  for (const auto& c : record.channels) {
    if (!seen.insert(c.label()).second) throw InvalidInput("duplicate channel label '" + c.label() + "'");
    if (c.size() != ref.size()) throw InvalidInput("channel '" + c.label() + "' length differs from '" + ref.label() + "'");
    if (std::fabs(c.dt() - ref.dt()) > 1e-12 * ref.dt()) throw InvalidInput("channel '" + c.label() + "' has a different dt");
    if (std::fabs(c.start_time() - ref.start_time()) > 1e-9 * std::max(1.0, std::fabs(ref.start_time()))) {
      throw InvalidInput("channel '" + c.label() + "' has a different start time");
    }
  }
  if (!record.times.empty() && record.times.size() != ref.size()) throw InvalidInput("time column length differs from channel length");
}

}  // namespace oscdx
