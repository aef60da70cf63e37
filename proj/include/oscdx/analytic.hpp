#pragma once

// Closed-form spectra and kurtosis of the three oscillation mechanisms.
// All spectral formulas are two-sided densities in rad/s internally,
// S(omega) with integral over the real line equal to the variance; results
// are reported on a one-sided Hz grid as 4*pi*S(2*pi*f).

#include <span>

#include "oscdx/models.hpp"
#include "oscdx/spectrum.hpp"

namespace oscdx {

// Two-sided rad/s density of x for the weakly damped mode.
double weakly_damped_density(const WeaklyDampedParams& p, double omega);

// PSD of cos(phi(t)) for phi = omega_h t + Brownian motion with diffusion D
// (two-sided, rad/s). Integrates to 1/2.
double phase_diffusion_density(double diffusion, double hopf_freq, double omega);

SpectrumEstimate analytic_psd_weakly_damped(const WeaklyDampedParams& p, std::span<const double> freqs_hz);

struct LimitCycleSpectrumParams {
  double radius_sq = 0.01;       // gamma
  double amp_decay = 0.02;       // decay rate of p(t); 2*gamma in the normal form
  double phase_diffusion = 0.01; // sigma_phi^2, rad^2/s
  double hopf_freq = 0.3 * 3.14159265358979323846;
  double amp_noise = 0.0;        // sigma_p^2
};

// S = gamma F(D) + Var[p] F(D + 2*amp_decay), Var[p] = sigma_p^2 / (2*amp_decay).
SpectrumEstimate analytic_psd_limit_cycle(const LimitCycleSpectrumParams& p, std::span<const double> freqs_hz);

// Continuous part equals the weakly damped spectrum; the forced response is a
// separate line of power rho^2/2 at Omega/2pi.
SpectrumEstimate analytic_psd_forced(const ForcedParams& p, std::span<const double> freqs_hz);

struct LcSignatureParams {
  double radius_sq = 0.0;     // gamma
  double amp_variance = 0.0;  // Var[p]
};

struct ForcedSignatureParams {
  double response_amp = 0.0;    // rho
  double fluct_variance = 0.0;  // Var[x1]
};

// -3[(gamma - v)^2 - 2 v^2] / (2 (gamma + v)^2)
double analytic_kurtosis_limit_cycle(const LcSignatureParams& sig);

// -(3/2) / (1 + 2 v / rho^2)^2
double analytic_kurtosis_forced(const ForcedSignatureParams& sig);

// 10 log10((A^2/2) / noise_variance)
double sinusoid_snr_db(double amplitude, double noise_variance);

}  // namespace oscdx
