// oscillodx: simulate normal-form oscillations and diagnose their mechanism.
//
// Exit codes: 0 success, 1 internal error, 2 usage error, 3 input parse error,
// 4 precondition failure (bad value, too little data, unstable dt, zero
// variance), 5 diagnosis finished with an inconclusive verdict. Code 5 still
// writes the full report.

#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "oscdx/analytic.hpp"
#include "oscdx/classifier.hpp"
#include "oscdx/csv.hpp"
#include "oscdx/errors.hpp"
#include "oscdx/kurtosis.hpp"
#include "oscdx/localize.hpp"
#include "oscdx/manifest.hpp"
#include "oscdx/models.hpp"
#include "oscdx/monte_carlo.hpp"
#include "oscdx/noise.hpp"
#include "oscdx/report_json.hpp"
#include "oscdx/spectrum.hpp"

namespace {

using nlohmann::json;
using namespace oscdx;

enum ExitCode : int { kOk = 0, kInternal = 1, kUsage = 2, kParse = 3, kPrecondition = 4, kInconclusive = 5 };

struct Common {
  std::uint64_t seed = 1;
  double noise_std = 0.0;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--seed", c.seed, "Seed for simulation and measurement noise")->capture_default_str();
  cmd->add_option("--noise-std", c.noise_std, "Std of white measurement noise added before analysis")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
}

std::optional<TimeWindow> parse_window(const std::string& text) {
  if (text.empty()) return std::nullopt;
  const auto colon = text.find(':');
  auto number = [&](std::string_view s) {
    double v = 0.0;
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || p != s.data() + s.size()) throw InvalidInput("bad window '" + text + "'");
    return v;
  };
  if (colon == std::string::npos) throw InvalidInput("window must look like t0:t1");
  const std::string_view all(text);
  TimeWindow w{number(all.substr(0, colon)), number(all.substr(colon + 1))};
  if (!(w.end > w.start)) throw InvalidInput("window end must exceed start");
  return w;
}

const CLI::Validator kWindowValidator(
    [](std::string& s) -> std::string {
      try {
        parse_window(s);
        return {};
      } catch (const Error& e) {
        return e.what();
      }
    },
    "T0:T1", "window");

json window_json(const std::optional<TimeWindow>& w) {
  if (!w) return nullptr;
  return json{{"start", w->start}, {"end", w->end}};
}

// --- model parameters -------------------------------------------------------

struct ModelOpts {
  std::string model = "wd";
  std::string params_file;
  std::optional<double> gamma;
  std::optional<double> omega;
  std::optional<double> sigma;
  std::optional<double> force_amp;
  std::optional<double> force_omega;
};

void add_model_options(CLI::App* cmd, ModelOpts& m) {
  cmd->add_option("--model", m.model, "wd | lc | forced")
      ->required()
      ->check(CLI::IsMember({"wd", "lc", "forced", "weakly_damped", "limit_cycle"}));
  cmd->add_option("--params", m.params_file, "JSON file of model parameters (flags below override it)")
      ->check(CLI::ExistingFile);
  cmd->add_option("--gamma", m.gamma, "Damping (wd, forced) or growth rate (lc), 1/s");
  cmd->add_option("--omega", m.omega, "Natural or Hopf frequency, rad/s");
  cmd->add_option("--sigma", m.sigma, "Process noise intensity");
  cmd->add_option("--force-amp", m.force_amp, "Forcing amplitude F (forced)");
  cmd->add_option("--force-omega", m.force_omega, "Forcing frequency, rad/s (forced)");
}

void take(const json& j, const char* key, double& field) {
  if (j.contains(key)) {
    if (!j.at(key).is_number()) throw ParseError(std::string("params: '") + key + "' must be a number");
    field = j.at(key).get<double>();
  }
}

ModelParams build_model(const ModelOpts& m) {
  json file = json::object();
  if (!m.params_file.empty()) {
    std::ifstream in(m.params_file);
    try {
      file = json::parse(in);
    } catch (const json::exception& e) {
      throw ParseError(m.params_file + ": " + e.what());
    }
    if (!file.is_object()) throw ParseError(m.params_file + ": expected a JSON object");
  }
  if (m.model == "wd" || m.model == "weakly_damped") {
    WeaklyDampedParams p;
    take(file, "damping", p.damping);
    take(file, "natural_freq", p.natural_freq);
    take(file, "noise_intensity", p.noise_intensity);
    if (m.gamma) p.damping = *m.gamma;
    if (m.omega) p.natural_freq = *m.omega;
    if (m.sigma) p.noise_intensity = *m.sigma;
    return p;
  }
  if (m.model == "lc" || m.model == "limit_cycle") {
    HopfParams p;
    take(file, "growth", p.growth);
    take(file, "hopf_freq", p.hopf_freq);
    take(file, "noise_intensity", p.noise_intensity);
    if (m.gamma) p.growth = *m.gamma;
    if (m.omega) p.hopf_freq = *m.omega;
    if (m.sigma) p.noise_intensity = *m.sigma;
    return p;
  }
  ForcedParams p;
  take(file, "damping", p.damping);
  take(file, "natural_freq", p.natural_freq);
  take(file, "force_amplitude", p.force_amplitude);
  take(file, "force_freq", p.force_freq);
  take(file, "noise_intensity", p.noise_intensity);
  if (m.gamma) p.damping = *m.gamma;
  if (m.omega) p.natural_freq = *m.omega;
  if (m.sigma) p.noise_intensity = *m.sigma;
  if (m.force_amp) p.force_amplitude = *m.force_amp;
  if (m.force_omega) p.force_freq = *m.force_omega;
  return p;
}

json model_json(const ModelParams& params) {
  return std::visit(
      [](const auto& p) -> json {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, WeaklyDampedParams>) {
          return {{"model", "weakly_damped"}, {"damping", p.damping}, {"natural_freq", p.natural_freq},
                  {"noise_intensity", p.noise_intensity}};
        } else if constexpr (std::is_same_v<T, HopfParams>) {
          return {{"model", "limit_cycle"}, {"growth", p.growth}, {"hopf_freq", p.hopf_freq},
                  {"noise_intensity", p.noise_intensity}};
        } else {
          return {{"model", "forced"},           {"damping", p.damping},       {"natural_freq", p.natural_freq},
                  {"force_amplitude", p.force_amplitude}, {"force_freq", p.force_freq}, {"noise_intensity", p.noise_intensity}};
        }
      },
      params);
}

struct SimOpts {
  double duration = 800.0;
  double burn_in = 100.0;
  double dt = 1e-3;
  int stride = 100;
};

void add_sim_options(CLI::App* cmd, SimOpts& s, double default_duration) {
  s.duration = default_duration;
  cmd->add_option("--duration", s.duration, "Recorded length, s (burn-in is extra)")->capture_default_str();
  cmd->add_option("--burn-in", s.burn_in, "Discarded transient, s")->capture_default_str();
  cmd->add_option("--dt", s.dt, "Integration step, s")->capture_default_str();
  cmd->add_option("--stride", s.stride, "Integration steps per recorded sample")->capture_default_str();
}

SimConfig sim_config(const SimOpts& s, std::uint64_t seed) {
  SimConfig cfg;
  cfg.dt = s.dt;
  cfg.burn_in = s.burn_in;
  cfg.duration = s.burn_in + s.duration;
  cfg.output_stride = s.stride;
  cfg.seed = seed;
  return cfg;
}

json sim_json(const SimConfig& c) {
  return {{"dt", c.dt}, {"duration", c.duration}, {"burn_in", c.burn_in}, {"output_stride", c.output_stride},
          {"stream", c.stream}};
}

// --- shared I/O ------------------------------------------------------------

struct Manifested {
  RunManifest manifest;

  Manifested(std::string command, int argc, char** argv) {
    manifest.command = std::move(command);
    manifest.argv.assign(argv, argv + argc);
    manifest.tool_version = OSCDX_VERSION;
  }
  void input(const std::string& path) { manifest.inputs.push_back(InputDigest{path, sha256_file(path)}); }
  void output(const std::string& path) { manifest.outputs.push_back(path); }
  void finish(const std::string& primary) {
    manifest.timestamp = utc_timestamp();
    write_manifest(manifest, primary);
  }
};

MultiChannelRecord load(const std::string& path, const Common& common) {
  MultiChannelRecord record = read_csv(std::filesystem::path(path));
  return add_measurement_noise(record, NoiseSpec{common.noise_std, common.seed});
}

const TimeSeries& pick(const MultiChannelRecord& record, const std::string& label) {
  return label.empty() ? record.channels.front() : record.channel(label);
}

template <typename Writer>
void write_file(const std::string& path, Writer&& writer) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write '" + path + "'");
  writer(out);
  if (!out) throw Error("write to '" + path + "' failed");
}

// --- commands ----------------------------------------------------------------

struct SimulateCmd {
  Common common;
  ModelOpts model;
  SimOpts sim;
  std::string out;

  int run(int argc, char** argv) const {
    const ModelParams params = build_model(model);
    const SimConfig cfg = sim_config(sim, common.seed);
    PlanarPath path = simulate(params, cfg);
    for (const auto& w : path.warnings) std::cerr << "warning: " << w << '\n';

    MultiChannelRecord record;
    record.channels = {path.x, path.y};
    record = add_measurement_noise(record, NoiseSpec{common.noise_std, common.seed});

    std::vector<std::string> comments{"params=" + model_json(params).dump(), "sim=" + sim_json(cfg).dump(),
                                      "seed=" + std::to_string(common.seed),
                                      "noise_std=" + format_double(common.noise_std)};
    for (const auto& w : path.warnings) comments.push_back("warning=" + w);
    write_csv(std::filesystem::path(out), record, comments);

    Manifested m("simulate", argc, argv);
    m.manifest.config = {{"model", model_json(params)}, {"sim", sim_json(cfg)}, {"noise_std", common.noise_std}};
    m.manifest.seeds = {{"seed", common.seed}};
    m.output(out);
    m.finish(out);
    std::cout << "wrote " << record.channels.front().size() << " samples to " << out << '\n';
    return kOk;
  }
};

struct DiagnoseCmd {
  Common common;
  std::string in;
  std::string channel;
  std::string window;
  std::string report;
  DiagnosisConfig cfg;

  int run(int argc, char** argv) {
    cfg.window = parse_window(window);
    const MultiChannelRecord record = load(in, common);
    const DiagnosisReport diag = classify(pick(record, channel), cfg);
    std::optional<SourceRanking> ranking;
    if (record.channels.size() >= 2) {
      try {
        ranking = rank_sources(record, cfg.kurtosis_threshold, cfg.window);
      } catch (const InsufficientData& e) {
        std::cerr << "ranking skipped: " << e.what() << '\n';
      }
    }
    const json doc = report_document(&diag, ranking ? &*ranking : nullptr);
    write_file(report, [&](std::ostream& os) { os << doc.dump(2) << '\n'; });

    Manifested m("diagnose", argc, argv);
    m.input(in);
    m.manifest.config = {{"channel", diag.channel}, {"diagnosis", to_json(cfg)}, {"noise_std", common.noise_std}};
    m.manifest.seeds = {{"noise_seed", common.seed}, {"bootstrap_seed", cfg.bootstrap_seed}};
    m.output(report);
    m.finish(report);

    std::cout << diag.channel << ": " << verdict_name(diag.verdict) << " (kurtosis " << diag.kurtosis.value << ", "
              << diag.kurtosis.ci_level * 100 << "% CI [" << diag.kurtosis.ci.lo << ", " << diag.kurtosis.ci.hi
              << "])\n";
    return diag.verdict == Verdict::Inconclusive ? kInconclusive : kOk;
  }
};

struct LocateCmd {
  Common common;
  std::string in;
  std::string window;
  std::string out;
  std::string report;
  double epsilon = DiagnosisConfig{}.kurtosis_threshold;

  int run(int argc, char** argv) const {
    const MultiChannelRecord record = load(in, common);
    const SourceRanking ranking = rank_sources(record, epsilon, parse_window(window));
    write_file(out, [&](std::ostream& os) { write_ranking_csv(os, ranking); });
    Manifested m("locate", argc, argv);
    m.input(in);
    m.output(out);
    if (!report.empty()) {
      write_file(report, [&](std::ostream& os) { os << report_document(nullptr, &ranking).dump(2) << '\n'; });
      m.output(report);
    }
    m.manifest.config = {{"epsilon", epsilon}, {"window", window_json(parse_window(window))}, {"noise_std", common.noise_std}};
    m.manifest.seeds = {{"noise_seed", common.seed}};
    m.finish(out);

    for (const auto& e : ranking.entries) {
      std::cout << e.rank << "  " << e.label << "  " << e.kurtosis << (e.tied ? "  (tied)" : "") << '\n';
    }
    if (ranking.non_informative) std::cout << "note: max |kurtosis| below epsilon; ranking is non-informative\n";
    if (ranking.variance_spread) std::cout << "note: channel variances differ by more than 10x\n";
    return kOk;
  }
};

struct PsdCmd {
  Common common;
  std::string in;
  std::string channel;
  std::string window;
  std::string out;
  std::string taper = "hann";
  WelchOptions opts;

  int run(int argc, char** argv) {
    opts.taper = parse_taper(taper);
    const MultiChannelRecord record = load(in, common);
    const TimeSeries& full = pick(record, channel);
    const auto w = parse_window(window);
    const TimeSeries series = w ? full.slice(w->start, w->end) : full;
    const SpectrumEstimate est = welch_psd(series, opts);
    write_file(out, [&](std::ostream& os) {
      os << "# channel=" << series.label() << "\n# segment_len=" << est.segment_len
         << "\n# overlap_frac=" << format_double(est.overlap_frac) << "\n# taper=" << est.taper
         << "\n# segments=" << est.segments << "\n# resolution_bw=" << format_double(est.resolution_bw) << '\n';
      os << "freq_hz,psd\n";
      for (std::size_t k = 0; k < est.size(); ++k) os << format_double(est.freqs[k]) << ',' << format_double(est.psd[k]) << '\n';
    });
    Manifested m("psd", argc, argv);
    m.input(in);
    m.output(out);
    m.manifest.config = {{"channel", series.label()}, {"window", window_json(w)}, {"segment_len", est.segment_len},
                         {"overlap_frac", opts.overlap_frac}, {"taper", est.taper}, {"pad_factor", opts.pad_factor},
                         {"noise_std", common.noise_std}};
    m.manifest.seeds = {{"noise_seed", common.seed}};
    m.finish(out);
    std::cout << est.segments << " segments of " << est.segment_len << " samples, resolution " << est.resolution_bw
              << " Hz\n";
    return kOk;
  }
};

struct KurtosisCmd {
  Common common;
  std::string in;
  std::string channel;
  std::string window;
  std::string out;
  bool moving = false;
  double window_len = 50.0;
  double hop = 1.0;

  int run(int argc, char** argv) const {
    const MultiChannelRecord record = load(in, common);
    const auto w = parse_window(window);
    auto segment = [&](const TimeSeries& s) { return w ? s.slice(w->start, w->end) : s; };

    if (moving) {
      const KurtosisTrace trace = moving_kurtosis(segment(pick(record, channel)), window_len, hop);
      write_file(out, [&](std::ostream& os) {
        os << "# window_len=" << format_double(trace.window_len) << "\n# hop=" << format_double(trace.hop) << '\n';
        os << "time,kurtosis\n";
        for (std::size_t i = 0; i < trace.times.size(); ++i) {
          os << format_double(trace.times[i]) << ',' << (trace.values[i] ? format_double(*trace.values[i]) : "") << '\n';
        }
      });
    } else {
      std::vector<const TimeSeries*> chosen;
      if (channel.empty()) {
        for (const auto& c : record.channels) chosen.push_back(&c);
      } else {
        chosen.push_back(&record.channel(channel));
      }
      write_file(out, [&](std::ostream& os) {
        os << "channel,kurtosis,samples\n";
        for (const TimeSeries* c : chosen) {
          const TimeSeries s = segment(*c);
          const double k = excess_kurtosis(s);
          os << s.label() << ',' << format_double(k) << ',' << s.size() << '\n';
          std::cout << s.label() << "  " << k << '\n';
        }
      });
    }
    Manifested m("kurtosis", argc, argv);
    m.input(in);
    m.output(out);
    m.manifest.config = {{"channel", channel},   {"window", window_json(w)}, {"moving", moving},
                         {"window_len", window_len}, {"hop", hop},          {"noise_std", common.noise_std}};
    m.manifest.seeds = {{"noise_seed", common.seed}};
    m.finish(out);
    return kOk;
  }
};

struct MonteCarloCmd {
  Common common;
  ModelOpts model;
  SimOpts sim;
  std::size_t runs = 100;
  double ci_level = 0.90;
  double bin_width = 0.05;
  std::size_t threads = 0;
  std::string out;
  std::string runs_out;

  int run(int argc, char** argv) const {
    const ModelParams params = build_model(model);
    const SimConfig cfg = sim_config(sim, common.seed);
    const MonteCarloResult res = monte_carlo_kurtosis(params, cfg, runs, ci_level, bin_width, threads, common.noise_std);
    write_file(out, [&](std::ostream& os) {
      os << "# model=" << model_json(params).dump() << "\n# runs=" << runs << "\n# ci_level=" << format_double(ci_level)
         << "\n# interval=" << format_double(res.interval.lo) << ':' << format_double(res.interval.hi) << '\n';
      os << "bin_lo,bin_hi,count\n";
      for (std::size_t b = 0; b < res.histogram.counts.size(); ++b) {
        os << format_double(res.histogram.edges[b]) << ',' << format_double(res.histogram.edges[b + 1]) << ','
           << res.histogram.counts[b] << '\n';
      }
    });
    Manifested m("montecarlo", argc, argv);
    m.output(out);
    if (!runs_out.empty()) {
      write_file(runs_out, [&](std::ostream& os) {
        os << "run,kurtosis\n";
        for (std::size_t r = 0; r < res.kurtosis.size(); ++r) os << r << ',' << format_double(res.kurtosis[r]) << '\n';
      });
      m.output(runs_out);
    }
    m.manifest.config = {{"model", model_json(params)}, {"sim", sim_json(cfg)}, {"runs", runs},
                         {"ci_level", ci_level},       {"bin_width", bin_width}, {"noise_std", common.noise_std}};
    m.manifest.seeds = {{"seed", common.seed}, {"streams", "0.." + std::to_string(runs - 1)}};
    m.finish(out);
    std::cout << model_name(params) << ": " << ci_level * 100 << "% interval [" << res.interval.lo << ", "
              << res.interval.hi << "] over " << runs << " runs\n";
    return kOk;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simulate and diagnose sustained oscillations from kurtosis and spectral shape"};
  app.set_version_flag("--version", std::string(OSCDX_VERSION));
  app.require_subcommand(1);

  SimulateCmd simulate_cmd;
  {
    auto* cmd = app.add_subcommand("simulate", "Simulate a normal-form model to CSV (columns x, y)");
    add_common(cmd, simulate_cmd.common);
    add_model_options(cmd, simulate_cmd.model);
    add_sim_options(cmd, simulate_cmd.sim, 800.0);
    cmd->add_option("--out", simulate_cmd.out, "Output CSV")->required();
  }

  DiagnoseCmd diagnose_cmd;
  {
    auto* cmd = app.add_subcommand("diagnose", "Classify the oscillation mechanism of one channel");
    auto& c = diagnose_cmd.cfg;
    add_common(cmd, diagnose_cmd.common);
    cmd->add_option("--in", diagnose_cmd.in, "Input CSV")->required()->check(CLI::ExistingFile);
    cmd->add_option("--channel", diagnose_cmd.channel, "Channel label (default: first)");
    cmd->add_option("--window", diagnose_cmd.window, "Analysis window t0:t1 in seconds")->check(kWindowValidator);
    cmd->add_option("--report", diagnose_cmd.report, "Output JSON report")->required();
    cmd->add_option("--epsilon", c.kurtosis_threshold, "Kurtosis threshold")->capture_default_str();
    cmd->add_option("--spike-ratio-max", c.spike_bw_ratio_max, "Max bw_ratio for a thin spike")->capture_default_str();
    cmd->add_option("--peak-snr-min", c.peak_snr_min_db, "Min peak over median, dB")->capture_default_str();
    cmd->add_option("--bootstrap-reps", c.bootstrap_reps, "Block bootstrap replicates")->capture_default_str();
    cmd->add_option("--bootstrap-seed", c.bootstrap_seed, "Block bootstrap seed")->capture_default_str();
    cmd->add_option("--ci-level", c.ci_level, "Bootstrap interval level")->capture_default_str();
    cmd->add_flag("--flag-inconclusive", c.flag_inconclusive,
                  "Report inconclusive (exit 5) when the kurtosis CI crosses +-epsilon");
  }

  LocateCmd locate_cmd;
  {
    auto* cmd = app.add_subcommand("locate", "Rank channels by |kurtosis| to locate the source");
    add_common(cmd, locate_cmd.common);
    cmd->add_option("--in", locate_cmd.in, "Input CSV with two or more channels")->required()->check(CLI::ExistingFile);
    cmd->add_option("--window", locate_cmd.window, "Analysis window t0:t1 in seconds")->check(kWindowValidator);
    cmd->add_option("--out", locate_cmd.out, "Output ranking CSV")->required();
    cmd->add_option("--report", locate_cmd.report, "Optional JSON report");
    cmd->add_option("--epsilon", locate_cmd.epsilon, "Non-informative threshold")->capture_default_str();
  }

  PsdCmd psd_cmd;
  {
    auto* cmd = app.add_subcommand("psd", "Welch power spectral density of one channel");
    add_common(cmd, psd_cmd.common);
    cmd->add_option("--in", psd_cmd.in, "Input CSV")->required()->check(CLI::ExistingFile);
    cmd->add_option("--channel", psd_cmd.channel, "Channel label (default: first)");
    cmd->add_option("--window", psd_cmd.window, "Analysis window t0:t1 in seconds")->check(kWindowValidator);
    cmd->add_option("--segment-len", psd_cmd.opts.segment_len, "Segment length in samples (0: 1/8 of the series)")
        ->capture_default_str();
    cmd->add_option("--overlap", psd_cmd.opts.overlap_frac, "Segment overlap fraction")->capture_default_str();
    cmd->add_option("--taper", psd_cmd.taper, "hann | rectangular")->capture_default_str();
    cmd->add_option("--pad", psd_cmd.opts.pad_factor, "Zero-padding factor")->capture_default_str();
    cmd->add_option("--out", psd_cmd.out, "Output CSV")->required();
  }

  KurtosisCmd kurtosis_cmd;
  {
    auto* cmd = app.add_subcommand("kurtosis", "Excess kurtosis, whole window or moving");
    add_common(cmd, kurtosis_cmd.common);
    cmd->add_option("--in", kurtosis_cmd.in, "Input CSV")->required()->check(CLI::ExistingFile);
    cmd->add_option("--channel", kurtosis_cmd.channel, "Channel label (default: all; first when --moving)");
    cmd->add_option("--window", kurtosis_cmd.window, "Analysis window t0:t1 in seconds")->check(kWindowValidator);
    cmd->add_flag("--moving", kurtosis_cmd.moving, "Moving-window trace");
    cmd->add_option("--window-len", kurtosis_cmd.window_len, "Moving window length, s")->capture_default_str();
    cmd->add_option("--hop", kurtosis_cmd.hop, "Moving window hop, s")->capture_default_str();
    cmd->add_option("--out", kurtosis_cmd.out, "Output CSV")->required();
  }

  MonteCarloCmd mc_cmd;
  {
    auto* cmd = app.add_subcommand("montecarlo", "Kurtosis histogram over independent runs");
    add_common(cmd, mc_cmd.common);
    add_model_options(cmd, mc_cmd.model);
    add_sim_options(cmd, mc_cmd.sim, 500.0);
    cmd->add_option("--runs", mc_cmd.runs, "Number of runs")->capture_default_str();
    cmd->add_option("--ci-level", mc_cmd.ci_level, "Interval level")->capture_default_str();
    cmd->add_option("--bin-width", mc_cmd.bin_width, "Histogram bin width")->capture_default_str();
    cmd->add_option("--threads", mc_cmd.threads, "Worker threads (0: all cores)")->capture_default_str();
    cmd->add_option("--out", mc_cmd.out, "Histogram CSV")->required();
    cmd->add_option("--runs-out", mc_cmd.runs_out, "Optional per-run kurtosis CSV");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    const std::string name = app.get_subcommands().front()->get_name();
    if (name == "simulate") return simulate_cmd.run(argc, argv);
    if (name == "diagnose") return diagnose_cmd.run(argc, argv);
    if (name == "locate") return locate_cmd.run(argc, argv);
    if (name == "psd") return psd_cmd.run(argc, argv);
    if (name == "kurtosis") return kurtosis_cmd.run(argc, argv);
    if (name == "montecarlo") return mc_cmd.run(argc, argv);
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParse;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kPrecondition;
  } catch (const InsufficientData& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kPrecondition;
  } catch (const DegenerateInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kPrecondition;
  } catch (const StabilityError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}
