#include "oscdx/report_json.hpp"

#include "oscdx/errors.hpp"

namespace oscdx {

using nlohmann::json;

namespace {

json window_json(const std::optional<TimeWindow>& w) {
  if (!w) return nullptr;
  return json{{"start", w->start}, {"end", w->end}};
}

}  // namespace

json to_json(const DiagnosisConfig& cfg) {
  return json{
      {"kurtosis_threshold", cfg.kurtosis_threshold},
      {"window", window_json(cfg.window)},
      {"spike_bw_ratio_max", cfg.spike_bw_ratio_max},
      {"peak_snr_min_db", cfg.peak_snr_min_db},
      {"bootstrap_reps", cfg.bootstrap_reps},
      {"ci_level", cfg.ci_level},
      {"bootstrap_seed", cfg.bootstrap_seed},
      {"flag_inconclusive", cfg.flag_inconclusive},
      {"spectrum",
       {{"taper", "hann"},
        {"segment_divisor", cfg.segment_divisor},
        {"overlap_frac", cfg.overlap_frac},
        {"pad_factor", cfg.pad_factor}}},
  };
}

json to_json(const SpikeMetrics& s) {
  return json{{"peak_present", s.peak_present}, {"peak_freq_hz", s.peak_freq},   {"peak_snr_db", s.peak_snr_db},
              {"halfpower_bw_hz", s.halfpower_bw}, {"bw_ratio", s.bw_ratio}};
}

json to_json(const DiagnosisReport& r) {
  json j{
      {"channel", r.channel},
      {"window", window_json(r.window)},
      {"samples", r.samples},
      {"verdict", verdict_name(r.verdict)},
      {"kurtosis",
       {{"value", r.kurtosis.value},
        {"ci", {{"lo", r.kurtosis.ci.lo}, {"hi", r.kurtosis.ci.hi}}},
        {"ci_level", r.kurtosis.ci_level},
        {"block_len", r.kurtosis.block_len}}},
      {"peak_snr_db", r.peak_snr_db},
      {"thresholds", to_json(r.thresholds)},
      {"notes", r.notes},
  };
  if (r.spike) j["spike"] = to_json(*r.spike);
  return j;
}

json to_json(const SourceRanking& r) {
  json entries = json::array();
  for (const auto& e : r.entries) {
    entries.push_back({{"label", e.label},
                       {"kurtosis", e.kurtosis},
                       {"abs_kurtosis", e.abs_kurtosis},
                       {"variance", e.variance},
                       {"rank", e.rank},
                       {"tied", e.tied}});
  }
  json excluded = json::array();
  for (const auto& e : r.excluded) excluded.push_back({{"label", e.label}, {"reason", e.reason}});
  return json{{"top_label", r.top_label},
              {"tie", r.tie},
              {"non_informative", r.non_informative},
              {"variance_spread", r.variance_spread},
              {"window", window_json(r.window)},
              {"entries", entries},
              {"excluded", excluded}};
}

json report_document(const DiagnosisReport* diagnosis, const SourceRanking* ranking) {
  json doc{{"schema", kReportSchema}, {"tool_version", OSCDX_VERSION}};
  if (diagnosis) doc["diagnosis"] = to_json(*diagnosis);
  if (ranking) doc["ranking"] = to_json(*ranking);
  return doc;
}

DiagnosisReport diagnosis_from_json(const json& in) {
  const json& j = in.contains("diagnosis") ? in.at("diagnosis") : in;
  try {
    DiagnosisReport r;
    r.channel = j.at("channel").get<std::string>();
    r.window = TimeWindow{j.at("window").at("start").get<double>(), j.at("window").at("end").get<double>()};
    r.samples = j.at("samples").get<std::size_t>();
    r.verdict = parse_verdict(j.at("verdict").get<std::string>());
    const json& k = j.at("kurtosis");
    r.kurtosis.value = k.at("value").get<double>();
    r.kurtosis.ci = Interval{k.at("ci").at("lo").get<double>(), k.at("ci").at("hi").get<double>()};
    r.kurtosis.ci_level = k.at("ci_level").get<double>();
    r.kurtosis.block_len = k.at("block_len").get<std::size_t>();
    r.peak_snr_db = j.at("peak_snr_db").get<double>();
    if (j.contains("spike")) {
      const json& s = j.at("spike");
      r.spike = SpikeMetrics{s.at("peak_present").get<bool>(), s.at("peak_freq_hz").get<double>(),
                             s.at("peak_snr_db").get<double>(), s.at("halfpower_bw_hz").get<double>(),
                             s.at("bw_ratio").get<double>()};
    }
    const json& t = j.at("thresholds");
    DiagnosisConfig& c = r.thresholds;
    c.kurtosis_threshold = t.at("kurtosis_threshold").get<double>();
    if (!t.at("window").is_null()) {
      c.window = TimeWindow{t.at("window").at("start").get<double>(), t.at("window").at("end").get<double>()};
    }
    c.spike_bw_ratio_max = t.at("spike_bw_ratio_max").get<double>();
    c.peak_snr_min_db = t.at("peak_snr_min_db").get<double>();
    c.bootstrap_reps = t.at("bootstrap_reps").get<std::size_t>();
    c.ci_level = t.at("ci_level").get<double>();
    c.bootstrap_seed = t.at("bootstrap_seed").get<std::uint64_t>();
    c.flag_inconclusive = t.at("flag_inconclusive").get<bool>();
    const json& sp = t.at("spectrum");
    c.segment_divisor = sp.at("segment_divisor").get<std::size_t>();
    c.overlap_frac = sp.at("overlap_frac").get<double>();
    c.pad_factor = sp.at("pad_factor").get<std::size_t>();
    r.notes = j.at("notes").get<std::vector<std::string>>();
    return r;
  } catch (const json::exception& e) {
    throw ParseError(std::string("diagnosis report: ") + e.what());
  }
}

}  // namespace oscdx
