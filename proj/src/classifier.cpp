#include "oscdx/classifier.hpp"

#include <cmath>
#include <sstream>

#include "oscdx/errors.hpp"
#include "oscdx/kurtosis.hpp"

namespace oscdx {

namespace {

constexpr std::size_t kMinDiagnosisSamples = 1000;

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

bool ci_straddles(const Interval& ci, double eps) {
  return (ci.lo < -eps && -eps < ci.hi) || (ci.lo < eps && eps < ci.hi);
}

}  // namespace

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::WeaklyDamped: return "weakly_damped";
    case Verdict::LimitCycle: return "limit_cycle";
    case Verdict::Forced: return "forced";
    case Verdict::NoOscillation: return "no_oscillation";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

Verdict parse_verdict(const std::string& name) {
  for (Verdict v : {Verdict::WeaklyDamped, Verdict::LimitCycle, Verdict::Forced, Verdict::NoOscillation,
                    Verdict::Inconclusive}) {
    if (verdict_name(v) == name) return v;
  }
  throw InvalidInput("unknown verdict '" + name + "'");
}

void validate(const DiagnosisConfig& cfg) {
  if (!(cfg.kurtosis_threshold > 0.0) || !std::isfinite(cfg.kurtosis_threshold)) throw InvalidInput("kurtosis_threshold must be > 0");
  if (!(cfg.spike_bw_ratio_max >= 1.0) || !std::isfinite(cfg.spike_bw_ratio_max)) throw InvalidInput("spike_bw_ratio_max must be >= 1");
  if (!std::isfinite(cfg.peak_snr_min_db)) throw InvalidInput("peak_snr_min_db must be finite");
  if (cfg.bootstrap_reps < 100) throw InvalidInput("bootstrap_reps must be >= 100");
  if (!(cfg.ci_level > 0.0 && cfg.ci_level < 1.0)) throw InvalidInput("ci_level must be in (0, 1)");
  if (cfg.segment_divisor < 1) throw InvalidInput("segment_divisor must be >= 1");
  if (!(cfg.overlap_frac >= 0.0 && cfg.overlap_frac < 1.0)) throw InvalidInput("overlap_frac must be in [0, 1)");
  if (cfg.pad_factor < 1) throw InvalidInput("pad_factor must be >= 1");
  if (cfg.window && !(cfg.window->end > cfg.window->start)) throw InvalidInput("window end must exceed window start");
}

Verdict decide(const KurtosisSummary& kurtosis, const SpikeMetrics& spike, const DiagnosisConfig& cfg,
               std::vector<std::string>* notes) {
  auto note = [&](std::string s) {
    if (notes) notes->push_back(std::move(s));
  };
  const double eps = cfg.kurtosis_threshold;
  if (!spike.peak_present) {
    note("peak_gate=absent: peak_snr_db " + fmt(spike.peak_snr_db) + " < " + fmt(cfg.peak_snr_min_db));
    return Verdict::NoOscillation;
  }
  const double k_abs = std::fabs(kurtosis.value);
  const Verdict nonlinear = spike.bw_ratio <= cfg.spike_bw_ratio_max ? Verdict::Forced : Verdict::LimitCycle;
  const Verdict verdict = k_abs < eps ? Verdict::WeaklyDamped : nonlinear;

  if (verdict == Verdict::WeaklyDamped) {
    note("kurtosis_gate=gaussian: |K| " + fmt(k_abs) + " < " + fmt(eps));
  } else {
    note("kurtosis_gate=non_gaussian: |K| " + fmt(k_abs) + " >= " + fmt(eps));
    note(std::string("spike_gate=") + (verdict == Verdict::Forced ? "thin" : "wide") + ": bw_ratio " +
         fmt(spike.bw_ratio) + (verdict == Verdict::Forced ? " <= " : " > ") + fmt(cfg.spike_bw_ratio_max));
  }

  if (ci_straddles(kurtosis.ci, eps)) {
    note("ci_straddles_threshold: [" + fmt(kurtosis.ci.lo) + ", " + fmt(kurtosis.ci.hi) + "] crosses +-" + fmt(eps));
    note("branch_gaussian=weakly_damped");
    note("branch_non_gaussian=" + verdict_name(nonlinear));
    if (cfg.flag_inconclusive) return Verdict::Inconclusive;
  }
  return verdict;
}

SpectrumEstimate diagnosis_spectrum(const TimeSeries& segment, const DiagnosisConfig& cfg) {
  WelchOptions opts;
  opts.segment_len = segment.size() / cfg.segment_divisor;
  opts.overlap_frac = cfg.overlap_frac;
  opts.taper = Taper::Hann;
  opts.pad_factor = cfg.pad_factor;
  return welch_psd(segment, opts);
}

DiagnosisReport classify(const TimeSeries& series, const DiagnosisConfig& cfg) {
  validate(cfg);
  const TimeSeries segment = cfg.window ? series.slice(cfg.window->start, cfg.window->end) : series;
  if (segment.size() < kMinDiagnosisSamples) {
    std::ostringstream msg;
    msg << "diagnosis needs at least " << kMinDiagnosisSamples << " samples in the window, got " << segment.size();
    throw InsufficientData(msg.str());
  }

  DiagnosisReport report;
  report.channel = segment.label();
  report.window = TimeWindow{segment.start_time(), segment.end_time()};
  report.samples = segment.size();
  report.thresholds = cfg;

  report.kurtosis.value = excess_kurtosis(segment);
  const BootstrapResult boot = bootstrap_kurtosis_ci(segment, cfg.bootstrap_reps, cfg.ci_level, cfg.bootstrap_seed);
  report.kurtosis.ci = boot.interval;
  report.kurtosis.ci_level = boot.ci_level;
  report.kurtosis.block_len = boot.block_len;

  const SpikeMetrics spike = spike_metrics(diagnosis_spectrum(segment, cfg), cfg.peak_snr_min_db);
  report.peak_snr_db = spike.peak_snr_db;
  report.verdict = decide(report.kurtosis, spike, cfg, &report.notes);
  if (report.verdict != Verdict::WeaklyDamped && report.verdict != Verdict::NoOscillation) report.spike = spike;
  return report;
}

}  // namespace oscdx
