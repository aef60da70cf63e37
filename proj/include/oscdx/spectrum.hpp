#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "oscdx/time_series.hpp"

namespace oscdx {

enum class Taper { Hann, Rectangular };

std::string taper_name(Taper taper);
Taper parse_taper(const std::string& name);

// A discrete spectral line, carried as integrated power at a frequency.
struct SpectralLine {
  double freq_hz = 0.0;
  double power = 0.0;  // signal^2
};

// One-sided spectral density on an ascending Hz grid.
struct SpectrumEstimate {
  std::vector<double> freqs;  // Hz
  std::vector<double> psd;    // signal^2 / Hz
  double resolution_bw = 0.0; // Hz; bin spacing of the un-padded transform
  std::string method;         // "welch", "analytic:weakly_damped", ...
  std::size_t segment_len = 0;
  double overlap_frac = 0.0;
  std::string taper;
  std::size_t segments = 0;
  std::vector<SpectralLine> lines;  // never folded into psd

  std::size_t size() const noexcept { return freqs.size(); }
};

inline constexpr std::size_t kMinWelchSegment = 32;

struct WelchOptions {
  std::size_t segment_len = 0;  // samples; 0 selects size/8
  double overlap_frac = 0.5;
  Taper taper = Taper::Hann;
  std::size_t pad_factor = 1;   // FFT length = segment_len * pad_factor
};

// Averaged tapered periodogram. Each segment has its mean removed. The density
// is one-sided and normalised so that sum(psd) * df equals the mean
// tapered-segment power.
SpectrumEstimate welch_psd(const TimeSeries& series, const WelchOptions& opts = {});
SpectrumEstimate welch_psd(const TimeSeries& series, std::size_t segment_len,
                           double overlap_frac = 0.5, Taper taper = Taper::Hann);

// Trapezoid integral of psd over [f_lo, f_hi], linearly interpolating the ends.
double band_power(const SpectrumEstimate& spectrum, double f_lo, double f_hi);
double total_power(const SpectrumEstimate& spectrum);

// Uniform grid 0, df, 2df, ... up to and including f_max.
std::vector<double> frequency_grid(double df, double f_max);

}  // namespace oscdx
