#pragma once

// Stochastic normal forms of the three sustained-oscillation mechanisms and
// the Ornstein-Uhlenbeck load-noise process, integrated with fixed-step
// Euler-Maruyama. All simulators are pure functions of (params, config).

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "oscdx/time_series.hpp"

namespace oscdx {

// u' = -C u + sigma xi, C = diag(decay_rates).
struct OuParams {
  std::vector<double> decay_rates;  // 1/s, each > 0
  double noise_intensity = 0.0;     // signal units / sqrt(s)
};

// z' = (-gamma + i omega0) z + sigma xi
struct WeaklyDampedParams {
  double damping = 0.02;            // gamma, 1/s
  double natural_freq = 0.3 * 3.14159265358979323846;  // omega0, rad/s
  double noise_intensity = 0.01;
};

// z' = (gamma + i omega_h) z - |z|^2 z + sigma xi. The deterministic cycle
// has radius sqrt(gamma).
struct HopfParams {
  double growth = 0.01;             // gamma, 1/s
  double hopf_freq = 0.3 * 3.14159265358979323846;
  double noise_intensity = 0.01;
};

// z' = (-gamma + i omega0) z + F e^{i Omega t} + sigma xi
struct ForcedParams {
  double damping = 1.0;
  double natural_freq = 0.2 * 3.14159265358979323846;
  double force_amplitude = 0.1;     // F
  double force_freq = 0.3 * 3.14159265358979323846;    // Omega, rad/s
  double noise_intensity = 0.01;
};

using ModelParams = std::variant<WeaklyDampedParams, HopfParams, ForcedParams>;

// duration is total simulated time; the recorded series covers
// (duration - burn_in) at a spacing of dt*output_stride.
struct SimConfig {
  double dt = 1e-3;
  double duration = 600.0;
  double burn_in = 100.0;
  std::uint64_t seed = 1;
  std::uint64_t stream = 0;
  int output_stride = 100;

  std::size_t recorded_samples() const;
  double sample_interval() const { return dt * output_stride; }
};

// Defaults used throughout: dt = 1 ms, recorded at 10 Hz, 100 s burn-in.
SimConfig default_sim_config(double recorded_seconds, std::uint64_t seed = 1);

using PlanarState = std::array<double, 2>;

struct PlanarPath {
  TimeSeries x;
  TimeSeries y;
  std::vector<std::string> warnings;
};

void validate(const OuParams& p);
void validate(const WeaklyDampedParams& p);
void validate(const HopfParams& p);
void validate(const ForcedParams& p);
void validate(const SimConfig& cfg);

std::vector<TimeSeries> simulate_ou(const OuParams& params, const SimConfig& cfg);

// Initial state defaults to the origin.
PlanarPath simulate_weakly_damped(const WeaklyDampedParams& params, const SimConfig& cfg,
                                  std::optional<PlanarState> initial = std::nullopt);

// Initial state defaults to (sqrt(gamma), 0), on the deterministic cycle.
PlanarPath simulate_limit_cycle(const HopfParams& params, const SimConfig& cfg,
                                std::optional<PlanarState> initial = std::nullopt);

// Initial state defaults to the origin. Forcing phase uses absolute time k*dt.
PlanarPath simulate_forced(const ForcedParams& params, const SimConfig& cfg,
                           std::optional<PlanarState> initial = std::nullopt);

PlanarPath simulate(const ModelParams& params, const SimConfig& cfg);

// Amplitude of the stationary deterministic response of the forced model:
// rho = F / sqrt(gamma^2 + (omega0 - Omega)^2).
double forced_response_amplitude(const ForcedParams& params);

std::string model_name(const ModelParams& params);

}  // namespace oscdx
