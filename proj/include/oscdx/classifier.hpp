#pragma once

// Mechanism diagnosis: a kurtosis gate separates weak damping from the two
// nonlinear mechanisms, then the spectral peak width separates a forced line
// from a limit cycle's phase-diffused peak.
//
// Decision table (decide()):
//   peak_snr_db < peak_snr_min_db           -> no_oscillation
//   |K| <  epsilon                          -> weakly_damped
//   |K| >= epsilon, bw_ratio <= ratio_max   -> forced
//   |K| >= epsilon, bw_ratio >  ratio_max   -> limit_cycle
// When flag_inconclusive is set and the kurtosis CI straddles +-epsilon the
// verdict becomes inconclusive; otherwise the straddle is only noted.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "oscdx/bootstrap.hpp"
#include "oscdx/spectrum.hpp"
#include "oscdx/spike.hpp"
#include "oscdx/time_series.hpp"

namespace oscdx {

enum class Verdict { WeaklyDamped, LimitCycle, Forced, NoOscillation, Inconclusive };

std::string verdict_name(Verdict v);
Verdict parse_verdict(const std::string& name);

struct DiagnosisConfig {
  double kurtosis_threshold = 0.65;
  std::optional<TimeWindow> window;  // whole series when unset
  double spike_bw_ratio_max = 1.5;
  double peak_snr_min_db = 10.0;
  std::size_t bootstrap_reps = 200;
  double ci_level = 0.90;
  std::uint64_t bootstrap_seed = 1;
  bool flag_inconclusive = false;

  // Spectrum used for the spike test: Hann, segments of 1/segment_divisor of
  // the window, overlap_frac overlap, zero padding by pad_factor.
  std::size_t segment_divisor = 3;
  double overlap_frac = 0.75;
  std::size_t pad_factor = 4;
};

void validate(const DiagnosisConfig& cfg);

struct KurtosisSummary {
  double value = 0.0;
  Interval ci;
  double ci_level = 0.0;
  std::size_t block_len = 0;
};

struct DiagnosisReport {
  std::string channel;
  TimeWindow window;
  std::size_t samples = 0;
  Verdict verdict = Verdict::Inconclusive;
  KurtosisSummary kurtosis;
  double peak_snr_db = 0.0;
  std::optional<SpikeMetrics> spike;  // absent on the no_oscillation and weakly_damped paths
  DiagnosisConfig thresholds;
  std::vector<std::string> notes;
};

// Applies the decision table. The spike metrics are always needed for the
// peak gate; whether they are reported is up to the caller.
Verdict decide(const KurtosisSummary& kurtosis, const SpikeMetrics& spike, const DiagnosisConfig& cfg,
               std::vector<std::string>* notes = nullptr);

SpectrumEstimate diagnosis_spectrum(const TimeSeries& segment, const DiagnosisConfig& cfg);

DiagnosisReport classify(const TimeSeries& series, const DiagnosisConfig& cfg = {});

}  // namespace oscdx
