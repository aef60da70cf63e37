#include "oscdx/spectrum.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>

#include "oscdx/errors.hpp"

namespace oscdx {

namespace {

// FFTW planning is not thread safe; execution with the new-array interface is.
std::mutex& plan_mutex() {
  static std::mutex m;
  return m;
}

struct FftwFree {
  void operator()(void* p) const { fftw_free(p); }
};

class RealFft {
 public:
  explicit RealFft(std::size_t n)
      : n_(n),
        in_(static_cast<double*>(fftw_malloc(sizeof(double) * n))),
        out_(static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * (n / 2 + 1)))) {
    std::lock_guard lock(plan_mutex());
    plan_ = fftw_plan_dft_r2c_1d(static_cast<int>(n), in_.get(), out_.get(), FFTW_ESTIMATE);
    if (!plan_) throw Error("FFTW failed to create a plan");
  }
  ~RealFft() {
    std::lock_guard lock(plan_mutex());
    fftw_destroy_plan(plan_);
  }
  RealFft(const RealFft&) = delete;
  RealFft& operator=(const RealFft&) = delete;

  double* input() { return in_.get(); }
  // Squared magnitude of bin k after execute().
  double power(std::size_t k) const { return out_.get()[k][0] * out_.get()[k][0] + out_.get()[k][1] * out_.get()[k][1]; }
  void execute() { fftw_execute(plan_); }
  std::size_t size() const { return n_; }

 private:
  std::size_t n_;
  std::unique_ptr<double, FftwFree> in_;
  std::unique_ptr<fftw_complex, FftwFree> out_;
  fftw_plan plan_ = nullptr;
};

std::vector<double> make_taper(Taper taper, std::size_t n) {
  std::vector<double> w(n, 1.0);
  if (taper == Taper::Hann) {
    // Periodic Hann, the usual choice for spectral averaging.
    for (std::size_t i = 0; i < n; ++i) {
      w[i] = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n));
    }
  }
  return w;
}

double interp(const std::vector<double>& xs, const std::vector<double>& ys, double x) {
  auto it = std::upper_bound(xs.begin(), xs.end(), x);
  if (it == xs.begin()) return ys.front();
  if (it == xs.end()) return ys.back();
  const auto i = static_cast<std::size_t>(it - xs.begin());
  const double t = (x - xs[i - 1]) / (xs[i] - xs[i - 1]);
  return ys[i - 1] + t * (ys[i] - ys[i - 1]);
}

}  // namespace

std::string taper_name(Taper taper) { return taper == Taper::Hann ? "hann" : "rectangular"; }

Taper parse_taper(const std::string& name) {
  if (name == "hann") return Taper::Hann;
  if (name == "rectangular" || name == "boxcar") return Taper::Rectangular;
  throw InvalidInput("unknown taper '" + name + "' (expected hann or rectangular)");
}

SpectrumEstimate welch_psd(const TimeSeries& series, const WelchOptions& opts) {
  const std::size_t n = series.size();
  const std::size_t seg = opts.segment_len == 0 ? n / 8 : opts.segment_len;
  if (seg < kMinWelchSegment) {
    std::ostringstream msg;
    msg << "Welch segment of " << seg << " samples is below the minimum of " << kMinWelchSegment;
    throw InsufficientData(msg.str());
  }
  if (seg > n) throw InsufficientData("Welch segment longer than the series");
  if (!(opts.overlap_frac >= 0.0 && opts.overlap_frac < 1.0)) throw InvalidInput("overlap_frac must be in [0, 1)");
  if (opts.pad_factor < 1) throw InvalidInput("pad_factor must be >= 1");
  for (double v : series.samples()) {
    if (!std::isfinite(v)) throw InvalidInput("spectrum: non-finite sample");
  }

  const auto step = std::max<std::size_t>(
      1, static_cast<std::size_t>(std::llround(static_cast<double>(seg) * (1.0 - opts.overlap_frac))));
  const std::size_t segments = 1 + (n - seg) / step;
  const std::size_t nfft = seg * opts.pad_factor;
  const std::size_t bins = nfft / 2 + 1;
  const double fs = series.sample_rate();

  const std::vector<double> w = make_taper(opts.taper, seg);
  double wss = 0.0;
  for (double v : w) wss += v * v;

  RealFft fft(nfft);
  std::vector<double> acc(bins, 0.0);
  const auto x = series.samples();
  for (std::size_t s = 0; s < segments; ++s) {
    const auto part = x.subspan(s * step, seg);
    double mean = 0.0;
    for (double v : part) mean += v;
    mean /= static_cast<double>(seg);
    double* in = fft.input();
    for (std::size_t i = 0; i < seg; ++i) in[i] = (part[i] - mean) * w[i];
    std::fill(in + seg, in + nfft, 0.0);
    fft.execute();
    for (std::size_t k = 0; k < bins; ++k) acc[k] += fft.power(k);
  }

  SpectrumEstimate est;
  est.method = "welch";
  est.segment_len = seg;
  est.overlap_frac = opts.overlap_frac;
  est.taper = taper_name(opts.taper);
  est.segments = segments;
  est.resolution_bw = fs / static_cast<double>(seg);
  est.freqs.resize(bins);
  est.psd.resize(bins);
  const double scale = 1.0 / (fs * wss * static_cast<double>(segments));
  for (std::size_t k = 0; k < bins; ++k) {
    est.freqs[k] = static_cast<double>(k) * fs / static_cast<double>(nfft);
    const bool edge = k == 0 || (nfft % 2 == 0 && k == nfft / 2);
    est.psd[k] = acc[k] * scale * (edge ? 1.0 : 2.0);
  }
  return est;
}

SpectrumEstimate welch_psd(const TimeSeries& series, std::size_t segment_len, double overlap_frac, Taper taper) {
  WelchOptions opts;
  opts.segment_len = segment_len;
  opts.overlap_frac = overlap_frac;
  opts.taper = taper;
  return welch_psd(series, opts);
}

double band_power(const SpectrumEstimate& spectrum, double f_lo, double f_hi) {
  if (spectrum.freqs.size() < 2) throw InsufficientData("band_power needs at least two bins");
  if (!(f_hi > f_lo)) throw InvalidInput("band_power: f_hi must exceed f_lo");
  const auto& f = spectrum.freqs;
  const auto& p = spectrum.psd;
  const double lo = std::max(f_lo, f.front());
  const double hi = std::min(f_hi, f.back());
  double total = 0.0;
  if (hi > lo) {
    double prev_f = lo;
    double prev_p = interp(f, p, lo);
    for (std::size_t k = 0; k < f.size(); ++k) {
      if (f[k] <= lo) continue;
      if (f[k] >= hi) break;
      total += 0.5 * (prev_p + p[k]) * (f[k] - prev_f);
      prev_f = f[k];
      prev_p = p[k];
    }
    total += 0.5 * (prev_p + interp(f, p, hi)) * (hi - prev_f);
  }
  for (const auto& line : spectrum.lines) {
    if (line.freq_hz >= f_lo && line.freq_hz <= f_hi) total += line.power;
  }
  return total;
}

double total_power(const SpectrumEstimate& spectrum) {
  return band_power(spectrum, spectrum.freqs.front(), spectrum.freqs.back());
}

std::vector<double> frequency_grid(double df, double f_max) {
  if (!(df > 0.0) || !std::isfinite(df)) throw InvalidInput("frequency_grid: df must be > 0");
  if (!(f_max >= 0.0) || !std::isfinite(f_max)) throw InvalidInput("frequency_grid: f_max must be >= 0");
  const auto n = static_cast<std::size_t>(std::floor(f_max / df + 1e-9)) + 1;
  std::vector<double> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = static_cast<double>(k) * df;
  return out;
}

}  // namespace oscdx
