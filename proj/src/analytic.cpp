#include "oscdx/analytic.hpp"

#include <cmath>
#include <numbers>

#include "oscdx/errors.hpp"

namespace oscdx {

namespace {

constexpr double kPi = std::numbers::pi;

void check_grid(std::span<const double> freqs_hz) {
  if (freqs_hz.empty()) throw InvalidInput("analytic PSD: empty frequency grid");
  for (std::size_t i = 0; i < freqs_hz.size(); ++i) {
    if (!std::isfinite(freqs_hz[i]) || freqs_hz[i] < 0.0) throw InvalidInput("analytic PSD: frequencies must be finite and >= 0");
    if (i > 0 && !(freqs_hz[i] > freqs_hz[i - 1])) throw InvalidInput("analytic PSD: frequencies must be strictly increasing");
  }
}

template <typename Density>
SpectrumEstimate evaluate(std::span<const double> freqs_hz, std::string method, Density&& density) {
  check_grid(freqs_hz);
  SpectrumEstimate est;
  est.method = std::move(method);
  est.freqs.assign(freqs_hz.begin(), freqs_hz.end());
  est.psd.resize(est.freqs.size());
  // Two-sided rad/s density to one-sided Hz: S1(f) = 2 * 2pi * S(2 pi f).
  for (std::size_t k = 0; k < est.freqs.size(); ++k) est.psd[k] = 4.0 * kPi * density(2.0 * kPi * est.freqs[k]);
  est.resolution_bw = est.freqs.size() > 1 ? est.freqs[1] - est.freqs[0] : 0.0;
  return est;
}

double linear_density(double damping, double natural_freq, double sigma, double omega) {
  const double g2 = damping * damping;
  const double w2 = natural_freq * natural_freq;
  const double o2 = omega * omega;
  const double d = g2 + w2 - o2;
  return sigma * sigma * (g2 + w2 + o2) / (2.0 * kPi * (d * d + 4.0 * g2 * o2));
}

}  // namespace

double weakly_damped_density(const WeaklyDampedParams& p, double omega) {
  validate(p);
  return linear_density(p.damping, p.natural_freq, p.noise_intensity, omega);
}

double phase_diffusion_density(double diffusion, double hopf_freq, double omega) {
  if (!(diffusion > 0.0) || !std::isfinite(diffusion)) throw InvalidInput("phase diffusion must be > 0");
  if (!std::isfinite(hopf_freq)) throw InvalidInput("hopf_freq must be finite");
  const double D = diffusion;
  const double o2 = omega * omega;
  const double h2 = hopf_freq * hopf_freq;
  const double q = D * D / 4.0;
  const double d = o2 - h2 - q;
  return D * (o2 + h2 + q) / (4.0 * kPi * (d * d + D * D * o2));
}

SpectrumEstimate analytic_psd_weakly_damped(const WeaklyDampedParams& p, std::span<const double> freqs_hz) {
  validate(p);
  return evaluate(freqs_hz, "analytic:weakly_damped",
                  [&](double w) { return linear_density(p.damping, p.natural_freq, p.noise_intensity, w); });
}

SpectrumEstimate analytic_psd_limit_cycle(const LimitCycleSpectrumParams& p, std::span<const double> freqs_hz) {
  if (!(p.radius_sq > 0.0) || !std::isfinite(p.radius_sq)) throw InvalidInput("radius_sq must be > 0");
  if (!(p.amp_decay > 0.0) || !std::isfinite(p.amp_decay)) throw InvalidInput("amp_decay must be > 0");
  if (!(p.phase_diffusion > 0.0) || !std::isfinite(p.phase_diffusion)) throw InvalidInput("phase_diffusion must be > 0");
  if (!(p.amp_noise >= 0.0) || !std::isfinite(p.amp_noise)) throw InvalidInput("amp_noise must be >= 0");
  const double amp_var = p.amp_noise / (2.0 * p.amp_decay);
  return evaluate(freqs_hz, "analytic:limit_cycle", [&](double w) {
    double s = p.radius_sq * phase_diffusion_density(p.phase_diffusion, p.hopf_freq, w);
    if (amp_var > 0.0) s += amp_var * phase_diffusion_density(p.phase_diffusion + 2.0 * p.amp_decay, p.hopf_freq, w);
    return s;
  });
}

SpectrumEstimate analytic_psd_forced(const ForcedParams& p, std::span<const double> freqs_hz) {
  validate(p);
  auto est = evaluate(freqs_hz, "analytic:forced",
                      [&](double w) { return linear_density(p.damping, p.natural_freq, p.noise_intensity, w); });
  const double rho = forced_response_amplitude(p);
  est.lines.push_back(SpectralLine{p.force_freq / (2.0 * kPi), rho * rho / 2.0});
  return est;
}

double analytic_kurtosis_limit_cycle(const LcSignatureParams& sig) {
  const double g = sig.radius_sq;
  const double v = sig.amp_variance;
  if (!(g > 0.0) || !std::isfinite(g)) throw InvalidInput("radius_sq must be > 0");
  if (!(v >= 0.0) || !std::isfinite(v)) throw InvalidInput("amp_variance must be >= 0");
  const double a = g - v;
  return -3.0 * (a * a - 2.0 * v * v) / (2.0 * (g + v) * (g + v));
}

double analytic_kurtosis_forced(const ForcedSignatureParams& sig) {
  const double rho = sig.response_amp;
  const double v = sig.fluct_variance;
  if (!(rho >= 0.0) || !std::isfinite(rho)) throw InvalidInput("response_amp must be >= 0");
  if (!(v >= 0.0) || !std::isfinite(v)) throw InvalidInput("fluct_variance must be >= 0");
  if (rho == 0.0 && v == 0.0) throw DegenerateInput("forced kurtosis undefined with no response and no noise");
  if (rho == 0.0) return 0.0;
  const double r = 1.0 + 2.0 * v / (rho * rho);
  return -1.5 / (r * r);
}

double sinusoid_snr_db(double amplitude, double noise_variance) {
  if (!(amplitude > 0.0) || !std::isfinite(amplitude)) throw InvalidInput("amplitude must be > 0");
  if (!(noise_variance > 0.0) || !std::isfinite(noise_variance)) throw InvalidInput("noise_variance must be > 0");
  return 10.0 * std::log10(amplitude * amplitude / 2.0 / noise_variance);
}

}  // namespace oscdx
