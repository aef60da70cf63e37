#include "oscdx/localize.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "oscdx/errors.hpp"
#include "oscdx/kurtosis.hpp"
#include "oscdx/parallel.hpp"

namespace oscdx {

namespace {

// Replicated channels can differ in the last bits after an affine rescale;
// treat |kurtosis| values this close as tied.
bool near_equal(double a, double b) { return std::fabs(a - b) <= 1e-12 * std::max({1.0, std::fabs(a), std::fabs(b)}); }

double variance(std::span<const double> x) {
  double mean = 0.0;
  for (double v : x) mean += v;
  mean /= static_cast<double>(x.size());
  double s = 0.0;
  for (double v : x) s += (v - mean) * (v - mean);
  return s / static_cast<double>(x.size());
}

}  // namespace

SourceRanking rank_sources(const MultiChannelRecord& record, double epsilon, std::optional<TimeWindow> window) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) throw InvalidInput("epsilon must be > 0");
  validate_shared_timebase(record);
  if (record.channels.size() < 2) throw InvalidInput("ranking needs at least two channels");
  if (!window) window = record.window;

  struct Outcome {
    std::optional<RankedChannel> ranked;
    std::string failure;
  };
  std::vector<Outcome> outcomes(record.channels.size());
  parallel_for(record.channels.size(), [&](std::size_t i) {
    const TimeSeries& full = record.channels[i];
    const TimeSeries seg = window ? full.slice(window->start, window->end) : full;
    try {
      RankedChannel rc;
      rc.label = seg.label();
      rc.kurtosis = excess_kurtosis(seg);
      rc.abs_kurtosis = std::fabs(rc.kurtosis);
      rc.variance = variance(seg.samples());
      outcomes[i].ranked = rc;
    } catch (const DegenerateInput& e) {
      outcomes[i].failure = e.what();
    }
  });

  SourceRanking out;
  out.window = window;
  for (auto& o : outcomes) {
    if (o.ranked) {
      out.entries.push_back(std::move(*o.ranked));
    }
  }
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    if (!outcomes[i].ranked) out.excluded.push_back(ExcludedChannel{record.channels[i].label(), outcomes[i].failure});
  }
  if (out.entries.size() < 2) throw InsufficientData("fewer than two channels have a defined kurtosis");

  std::sort(out.entries.begin(), out.entries.end(), [](const RankedChannel& a, const RankedChannel& b) {
    if (!near_equal(a.abs_kurtosis, b.abs_kurtosis)) return a.abs_kurtosis > b.abs_kurtosis;
    return a.label < b.label;
  });
  for (std::size_t i = 0; i < out.entries.size(); ++i) {
    auto& e = out.entries[i];
    e.rank = static_cast<int>(i) + 1;
    const bool tied_prev = i > 0 && near_equal(e.abs_kurtosis, out.entries[i - 1].abs_kurtosis);
    const bool tied_next = i + 1 < out.entries.size() && near_equal(e.abs_kurtosis, out.entries[i + 1].abs_kurtosis);
    e.tied = tied_prev || tied_next;
    out.tie = out.tie || e.tied;
  }
  out.top_label = out.entries.front().label;
  out.non_informative = out.entries.front().abs_kurtosis < epsilon;
  const auto [vmin, vmax] = std::minmax_element(out.entries.begin(), out.entries.end(),
                                                [](const auto& a, const auto& b) { return a.variance < b.variance; });
  out.variance_spread = vmax->variance > 10.0 * vmin->variance;
  return out;
}

}  // namespace oscdx
