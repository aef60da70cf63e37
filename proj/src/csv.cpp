#include "oscdx/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "oscdx/errors.hpp"

namespace oscdx {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = line.find(',', pos);
    out.push_back(trim(line.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

class Reader {
 public:
  explicit Reader(std::string source) : source_(std::move(source)) {}

  [[noreturn]] void fail(std::size_t line, const std::string& what) const {
    std::ostringstream msg;
    msg << source_ << ":" << line << ": " << what;
    throw ParseError(msg.str());
  }

  double number(std::string_view cell, std::size_t line, std::size_t column, const std::string& name) const {
    double v = 0.0;
    if (!cell.empty() && cell.front() == '+') cell.remove_prefix(1);
    const auto* end = cell.data() + cell.size();
    const auto [ptr, ec] = std::from_chars(cell.data(), end, v);
    if (cell.empty() || ec != std::errc() || ptr != end) {
      fail(line, "column " + std::to_string(column) + " (" + name + "): cannot parse '" + std::string(cell) + "' as a number");
    }
    if (!std::isfinite(v)) fail(line, "column " + std::to_string(column) + " (" + name + "): non-finite value");
    return v;
  }

 private:
  std::string source_;
};

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc()) throw Error("format_double: buffer too small");
  return std::string(buf, ptr);
}

MultiChannelRecord read_csv(std::istream& in, const std::string& source) {
  Reader reader(source);
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::string> labels;
  std::size_t header_line = 0;
  std::vector<double> times;
  std::vector<std::vector<double>> columns;

  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view view = trim(line);
    if (view.empty() || view.front() == '#') continue;
    const auto cells = split(view);
    if (labels.empty()) {
      if (cells.front() != "time") reader.fail(line_no, "header must start with 'time'");
      if (cells.size() < 2) reader.fail(line_no, "header names no channels");
      std::set<std::string> seen;
      for (std::size_t c = 1; c < cells.size(); ++c) {
        std::string label(cells[c]);
        if (label.empty()) reader.fail(line_no, "column " + std::to_string(c + 1) + " has an empty label");
        if (!seen.insert(label).second) reader.fail(line_no, "duplicate channel label '" + label + "'");
        labels.push_back(std::move(label));
      }
      header_line = line_no;
      columns.resize(labels.size());
      continue;
    }
    if (cells.size() != labels.size() + 1) {
      reader.fail(line_no, "expected " + std::to_string(labels.size() + 1) + " fields, found " + std::to_string(cells.size()));
    }
    times.push_back(reader.number(cells[0], line_no, 1, "time"));
    for (std::size_t c = 0; c < labels.size(); ++c) columns[c].push_back(reader.number(cells[c + 1], line_no, c + 2, labels[c]));
  }
  if (labels.empty()) reader.fail(line_no, "no header row");
  if (times.size() < 2) reader.fail(header_line, "need at least two data rows to infer the time step");

  const double dt = (times.back() - times.front()) / static_cast<double>(times.size() - 1);
  if (!(dt > 0.0)) reader.fail(header_line, "time column is not increasing");
  double jitter = 0.0;
  std::size_t worst = 0;
  for (std::size_t i = 1; i < times.size(); ++i) {
    const double rel = std::fabs((times[i] - times[i - 1]) - dt) / dt;
    if (rel > jitter) {
      jitter = rel;
      worst = i;
    }
  }
  if (jitter > kMaxTimebaseJitter) {
    std::ostringstream msg;
    msg << "non-uniform time column: step at data row " << worst + 1 << " deviates from dt = " << dt
        << " s by " << jitter * 1e6 << " ppm (limit " << kMaxTimebaseJitter * 1e6 << " ppm); resample first";
    throw ParseError(source + ": " + msg.str());
  }

  MultiChannelRecord record;
  record.times = times;
  for (std::size_t c = 0; c < labels.size(); ++c) {
    record.channels.emplace_back(labels[c], dt, std::move(columns[c]), times.front());
  }
  return record;
}

MultiChannelRecord read_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open '" + path.string() + "'");
  return read_csv(in, path.string());
}

void write_csv(std::ostream& out, const MultiChannelRecord& record, const std::vector<std::string>& comments) {
  validate_shared_timebase(record);
  for (const auto& c : comments) out << "# " << c << '\n';
  out << "time";
  for (const auto& ch : record.channels) out << ',' << ch.label();
  out << '\n';
  const TimeSeries& ref = record.channels.front();
  for (std::size_t i = 0; i < ref.size(); ++i) {
    out << format_double(record.times.empty() ? ref.time_at(i) : record.times[i]);
    for (const auto& ch : record.channels) out << ',' << format_double(ch.samples()[i]);
    out << '\n';
  }
}

void write_csv(const std::filesystem::path& path, const MultiChannelRecord& record,
               const std::vector<std::string>& comments) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write '" + path.string() + "'");
  write_csv(out, record, comments);
  if (!out) throw Error("write to '" + path.string() + "' failed");
}

void write_ranking_csv(std::ostream& out, const SourceRanking& ranking) {
  out << "# top_label=" << ranking.top_label << '\n';
  out << "# tie=" << (ranking.tie ? "true" : "false") << '\n';
  out << "# non_informative=" << (ranking.non_informative ? "true" : "false") << '\n';
  out << "# variance_spread=" << (ranking.variance_spread ? "true" : "false") << '\n';
  if (ranking.window) {
    out << "# window=" << format_double(ranking.window->start) << ':' << format_double(ranking.window->end) << '\n';
  }
  for (const auto& e : ranking.excluded) out << "# excluded=" << e.label << ": " << e.reason << '\n';
  out << "label,kurtosis,abs_kurtosis,rank,tied\n";
  for (const auto& e : ranking.entries) {
    out << e.label << ',' << format_double(e.kurtosis) << ',' << format_double(e.abs_kurtosis) << ',' << e.rank << ','
        << (e.tied ? 1 : 0) << '\n';
  }
}

}  // namespace oscdx
