#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oscdx/record.hpp"

namespace oscdx {

struct RankedChannel {
  std::string label;
  double kurtosis = 0.0;
  double abs_kurtosis = 0.0;
  double variance = 0.0;
  int rank = 0;     // 1 = largest |kurtosis|
  bool tied = false;
};

struct ExcludedChannel {
  std::string label;
  std::string reason;
};

struct SourceRanking {
  std::vector<RankedChannel> entries;  // sorted by |kurtosis| descending, ties by label
  std::string top_label;
  bool tie = false;
  bool non_informative = false;  // max |kurtosis| below epsilon
  bool variance_spread = false;  // channel variances differ by more than 10x
  std::vector<ExcludedChannel> excluded;
  std::optional<TimeWindow> window;
};

// Ranks channels by |excess kurtosis| over record.window (or the given window).
// Degenerate channels are excluded and flagged; throws InsufficientData when
// fewer than two rankable channels remain.
SourceRanking rank_sources(const MultiChannelRecord& record, double epsilon = 0.65,
                           std::optional<TimeWindow> window = std::nullopt);

}  // namespace oscdx
