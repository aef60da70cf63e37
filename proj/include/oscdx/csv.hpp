#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "oscdx/localize.hpp"
#include "oscdx/record.hpp"

namespace oscdx {

inline constexpr double kMaxTimebaseJitter = 1e-6;  // relative

// `time,<label1>,<label2>,...` header, `#` comment lines, uniform time column.
MultiChannelRecord read_csv(std::istream& in, const std::string& source = "<stream>");
MultiChannelRecord read_csv(const std::filesystem::path& path);

// Values are written in shortest round-trip form.
void write_csv(std::ostream& out, const MultiChannelRecord& record,
               const std::vector<std::string>& comments = {});
void write_csv(const std::filesystem::path& path, const MultiChannelRecord& record,
               const std::vector<std::string>& comments = {});

// label,kurtosis,rank table with flags in comment lines.
void write_ranking_csv(std::ostream& out, const SourceRanking& ranking);

std::string format_double(double v);

}  // namespace oscdx
