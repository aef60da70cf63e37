#include "oscdx/models.hpp"

#include <cmath>
#include <sstream>

#include "oscdx/errors.hpp"
#include "oscdx/rng.hpp"

namespace oscdx {

namespace {

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw InvalidInput(std::string(what) + " must be finite");
}

void require_positive(double v, const char* what) {
  require_finite(v, what);
  if (!(v > 0.0)) throw InvalidInput(std::string(what) + " must be > 0");
}

void require_nonnegative(double v, const char* what) {
  require_finite(v, what);
  if (v < 0.0) throw InvalidInput(std::string(what) + " must be >= 0");
}

struct StepPlan {
  long long burn_steps = 0;
  long long total_steps = 0;  // index of the last state that is recorded
  std::size_t samples = 0;
};

StepPlan plan_steps(const SimConfig& cfg) {
  validate(cfg);
  StepPlan plan;
  plan.burn_steps = std::llround(cfg.burn_in / cfg.dt);
  plan.samples = cfg.recorded_samples();
  plan.total_steps = plan.burn_steps + static_cast<long long>(plan.samples - 1) * cfg.output_stride;
  return plan;
}

// Euler-Maruyama amplification of the rotation-with-decay matrix. EM is
// mean-square unstable once it reaches 1.
void check_linear_stability(double damping, double freq, double dt) {
  const double a = 1.0 - damping * dt;
  const double amp = a * a + (freq * dt) * (freq * dt);
  if (damping * dt >= 2.0 || amp >= 1.0) {
    std::ostringstream msg;
    msg << "dt = " << dt << " s is unstable for damping " << damping << " and frequency " << freq
        << " rad/s (EM amplification " << amp << ")";
    throw StabilityError(msg.str());
  }
}

void resolution_warning(double freq, double dt, std::vector<std::string>& warnings) {
  if (freq * dt >= 0.5) {
    std::ostringstream msg;
    msg << "dt*omega = " << freq * dt << " >= 0.5: oscillation period undersampled";
    warnings.push_back(msg.str());
  }
}

// Integrates a planar SDE with additive isotropic noise. drift(t, x, y, dx, dy).
template <typename Drift>
PlanarPath integrate_planar(Drift&& drift, double sigma, const SimConfig& cfg, PlanarState state,
                            std::vector<std::string> warnings) {
  const StepPlan plan = plan_steps(cfg);
  GaussianSource normal(make_stream(cfg.seed, cfg.stream));
  const double noise_scale = sigma * std::sqrt(cfg.dt);

  std::vector<double> xs;
  std::vector<double> ys;
  xs.reserve(plan.samples);
  ys.reserve(plan.samples);

  double x = state[0];
  double y = state[1];
  for (long long k = 0;; ++k) {
    if (k >= plan.burn_steps && (k - plan.burn_steps) % cfg.output_stride == 0) {
      if (!std::isfinite(x) || !std::isfinite(y)) {
        std::ostringstream msg;
        msg << "integration diverged at t = " << static_cast<double>(k) * cfg.dt << " s";
        throw StabilityError(msg.str());
      }
      xs.push_back(x);
      ys.push_back(y);
    }
    if (k == plan.total_steps) break;
    const double t = static_cast<double>(k) * cfg.dt;
    double dx = 0.0;
    double dy = 0.0;
    drift(t, x, y, dx, dy);
    const double ex = normal();
    const double ey = normal();
    x += dx * cfg.dt + noise_scale * ex;
    y += dy * cfg.dt + noise_scale * ey;
  }

  const double start = static_cast<double>(plan.burn_steps) * cfg.dt;
  return PlanarPath{TimeSeries("x", cfg.sample_interval(), std::move(xs), start),
                    TimeSeries("y", cfg.sample_interval(), std::move(ys), start), std::move(warnings)};
}

}  // namespace

std::size_t SimConfig::recorded_samples() const {
  const double n = std::round((duration - burn_in) / (dt * output_stride));
  return n < 1.0 ? 0 : static_cast<std::size_t>(n);
}

SimConfig default_sim_config(double recorded_seconds, std::uint64_t seed) {
  SimConfig cfg;
  cfg.duration = cfg.burn_in + recorded_seconds;
  cfg.seed = seed;
  return cfg;
}

void validate(const OuParams& p) {
  if (p.decay_rates.empty()) throw InvalidInput("OU decay_rates must be non-empty");
  for (double a : p.decay_rates) require_positive(a, "OU decay rate");
  require_nonnegative(p.noise_intensity, "noise_intensity");
}

void validate(const WeaklyDampedParams& p) {
  require_positive(p.damping, "damping");
  require_positive(p.natural_freq, "natural_freq");
  require_nonnegative(p.noise_intensity, "noise_intensity");
}

void validate(const HopfParams& p) {
  require_positive(p.growth, "growth");
  require_positive(p.hopf_freq, "hopf_freq");
  require_nonnegative(p.noise_intensity, "noise_intensity");
}

void validate(const ForcedParams& p) {
  require_positive(p.damping, "damping");
  require_positive(p.natural_freq, "natural_freq");
  require_nonnegative(p.force_amplitude, "force_amplitude");
  require_positive(p.force_freq, "force_freq");
  require_nonnegative(p.noise_intensity, "noise_intensity");
}

void validate(const SimConfig& cfg) {
  require_positive(cfg.dt, "dt");
  require_finite(cfg.duration, "duration");
  require_nonnegative(cfg.burn_in, "burn_in");
  if (!(cfg.duration > cfg.burn_in)) throw InvalidInput("duration must exceed burn_in");
  if (cfg.output_stride < 1) throw InvalidInput("output_stride must be >= 1");
  if (cfg.recorded_samples() < 1) throw InvalidInput("duration - burn_in records no samples at this dt/stride");
}

std::vector<TimeSeries> simulate_ou(const OuParams& params, const SimConfig& cfg) {
  validate(params);
  const StepPlan plan = plan_steps(cfg);
  for (double a : params.decay_rates) {
    if (cfg.dt * a >= 2.0) {
      std::ostringstream msg;
      msg << "dt * decay_rate = " << cfg.dt * a << " >= 2: Euler-Maruyama unstable";
      throw StabilityError(msg.str());
    }
  }
  const std::size_t dims = params.decay_rates.size();
  GaussianSource normal(make_stream(cfg.seed, cfg.stream));
  const double noise_scale = params.noise_intensity * std::sqrt(cfg.dt);

  std::vector<double> state(dims, 0.0);
  std::vector<std::vector<double>> recorded(dims);
  for (auto& r : recorded) r.reserve(plan.samples);

  for (long long k = 0;; ++k) {
    if (k >= plan.burn_steps && (k - plan.burn_steps) % cfg.output_stride == 0) {
      for (std::size_t d = 0; d < dims; ++d) recorded[d].push_back(state[d]);
    }
    if (k == plan.total_steps) break;
    for (std::size_t d = 0; d < dims; ++d) {
      state[d] += -params.decay_rates[d] * state[d] * cfg.dt + noise_scale * normal();
    }
  }

  std::vector<TimeSeries> out;
  out.reserve(dims);
  const double start = static_cast<double>(plan.burn_steps) * cfg.dt;
  for (std::size_t d = 0; d < dims; ++d) {
    out.emplace_back("u" + std::to_string(d), cfg.sample_interval(), std::move(recorded[d]), start);
  }
  return out;
}

PlanarPath simulate_weakly_damped(const WeaklyDampedParams& params, const SimConfig& cfg,
                                  std::optional<PlanarState> initial) {
  validate(params);
  ForcedParams unforced;
  unforced.damping = params.damping;
  unforced.natural_freq = params.natural_freq;
  unforced.force_amplitude = 0.0;
  unforced.force_freq = params.natural_freq;
  unforced.noise_intensity = params.noise_intensity;
  return simulate_forced(unforced, cfg, initial);
}

PlanarPath simulate_forced(const ForcedParams& params, const SimConfig& cfg, std::optional<PlanarState> initial) {
  validate(params);
  validate(cfg);
  check_linear_stability(params.damping, params.natural_freq, cfg.dt);
  std::vector<std::string> warnings;
  resolution_warning(params.natural_freq, cfg.dt, warnings);
  if (params.force_amplitude > 0.0) resolution_warning(params.force_freq, cfg.dt, warnings);

  const double g = params.damping;
  const double w = params.natural_freq;
  const double f = params.force_amplitude;
  const double om = params.force_freq;
  auto drift = [=](double t, double x, double y, double& dx, double& dy) {
    dx = -g * x - w * y + f * std::cos(om * t);
    dy = w * x - g * y + f * std::sin(om * t);
  };
  return integrate_planar(drift, params.noise_intensity, cfg, initial.value_or(PlanarState{0.0, 0.0}),
                          std::move(warnings));
}

PlanarPath simulate_limit_cycle(const HopfParams& params, const SimConfig& cfg, std::optional<PlanarState> initial) {
  validate(params);
  validate(cfg);
  if (2.0 * params.growth * cfg.dt >= 2.0) {
    throw StabilityError("dt * 2 * growth >= 2: radial relaxation unstable under Euler-Maruyama");
  }
  std::vector<std::string> warnings;
  resolution_warning(params.hopf_freq, cfg.dt, warnings);

  const double g = params.growth;
  const double w = params.hopf_freq;
  auto drift = [=](double, double x, double y, double& dx, double& dy) {
    const double r2 = x * x + y * y;
    dx = g * x - w * y - r2 * x;
    dy = w * x + g * y - r2 * y;
  };
  return integrate_planar(drift, params.noise_intensity, cfg,
                          initial.value_or(PlanarState{std::sqrt(params.growth), 0.0}), std::move(warnings));
}

PlanarPath simulate(const ModelParams& params, const SimConfig& cfg) {
  return std::visit(
      [&](const auto& p) -> PlanarPath {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, WeaklyDampedParams>) {
          return simulate_weakly_damped(p, cfg);
        } else if constexpr (std::is_same_v<T, HopfParams>) {
          return simulate_limit_cycle(p, cfg);
        } else {
          return simulate_forced(p, cfg);
        }
      },
      params);
}

double forced_response_amplitude(const ForcedParams& params) {
  validate(params);
  const double detuning = params.natural_freq - params.force_freq;
  return params.force_amplitude / std::hypot(params.damping, detuning);
}

std::string model_name(const ModelParams& params) {
  switch (params.index()) {
    case 0: return "weakly_damped";
    case 1: return "limit_cycle";
    default: return "forced";
  }
}

}  // namespace oscdx
