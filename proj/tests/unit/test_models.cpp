#include <gtest/gtest.h>

#include <cmath>
#include <cstring>

#include "oracles.hpp"
#include "oscdx/errors.hpp"
#include "oscdx/kurtosis.hpp"
#include "oscdx/models.hpp"

using namespace oscdx;

namespace {

SimConfig config(double recorded, double dt, int stride, std::uint64_t seed = 7, double burn_in = 100.0) {
  SimConfig cfg;
  cfg.dt = dt;
  cfg.output_stride = stride;
  cfg.burn_in = burn_in;
  cfg.duration = burn_in + recorded;
  cfg.seed = seed;
  return cfg;
}

bool bit_identical(const TimeSeries& a, const TimeSeries& b) {
  return a.size() == b.size() && std::memcmp(a.samples().data(), b.samples().data(), a.size() * sizeof(double)) == 0;
}

// Standard error of a variance estimate from an exponentially correlated
// sequence with correlation time tau (s) over T seconds: Var(s^2) ~ 2 v^2 tau / T.
double variance_se(double v, double tau, double T) { return v * std::sqrt(2.0 * tau / T); }

}  // namespace

TEST(SimConfig, RecordedSamplesAndTimestamps) {
  const SimConfig cfg = config(50.0, 1e-3, 100, 1, 20.0);
  EXPECT_EQ(cfg.recorded_samples(), 500u);
  const auto path = simulate_weakly_damped({}, cfg);
  ASSERT_EQ(path.x.size(), 500u);
  EXPECT_DOUBLE_EQ(path.x.dt(), 0.1);
  EXPECT_NEAR(path.x.start_time(), 20.0, 1e-12);
  EXPECT_NEAR(path.x.time_at(499), 69.9, 1e-9);
}

TEST(SimConfig, RejectsInvalidConfigurations) {
  SimConfig cfg = config(10.0, 1e-3, 100);
  cfg.dt = 0.0;
  EXPECT_THROW(validate(cfg), InvalidInput);
  cfg = config(10.0, 1e-3, 100);
  cfg.duration = cfg.burn_in;
  EXPECT_THROW(validate(cfg), InvalidInput);
  cfg = config(10.0, 1e-3, 0);
  EXPECT_THROW(validate(cfg), InvalidInput);
  cfg = config(10.0, 1e-3, 100);
  cfg.burn_in = -1.0;
  EXPECT_THROW(validate(cfg), InvalidInput);
  cfg = config(10.0, 1e-3, 100);
  cfg.dt = std::nan("");
  EXPECT_THROW(validate(cfg), InvalidInput);
}

TEST(SimulateOu, NoiselessStaysAtOrigin) {
  const auto out = simulate_ou({{0.5, 2.0}, 0.0}, config(20.0, 0.01, 10));
  ASSERT_EQ(out.size(), 2u);
  for (const auto& s : out)
    for (double v : s.samples()) EXPECT_EQ(v, 0.0);
}

TEST(SimulateOu, StationaryVarianceMatchesLyapunov) {
  const double alpha = 0.5, sigma = 0.01, dt = 0.01;
  const auto out = simulate_ou({{alpha}, sigma}, config(1e5, dt, 10, 11));
  const auto& x = out.front().values();
  ASSERT_EQ(x.size(), 1000000u);
  Eigen::MatrixXd A(1, 1);
  A << -alpha;
  const double lyap = oracle::lyapunov(A, Eigen::MatrixXd::Constant(1, 1, sigma * sigma))(0, 0);
  EXPECT_NEAR(lyap, 1e-4, 1e-12);
  const double v = oracle::variance(x);
  EXPECT_NEAR(v, lyap, 0.05 * lyap);
  const double em = oracle::em_stationary_cov(A, sigma, dt)(0, 0);
  EXPECT_NEAR(v, em, 4.0 * variance_se(em, 1.0 / alpha, 1e5));
  EXPECT_NEAR(oracle::mean(x), 0.0, 4.0 * std::sqrt(lyap * 2.0 / alpha / 1e5));
}

TEST(SimulateOu, StepHalvingChangesVarianceLessThanStandardError) {
  const double alpha = 0.5, sigma = 0.01, T = 1e5;
  const double v1 = oracle::variance(simulate_ou({{alpha}, sigma}, config(T, 0.01, 10, 3)).front().values());
  const double v2 = oracle::variance(simulate_ou({{alpha}, sigma}, config(T, 0.005, 20, 4)).front().values());
  const double se = variance_se(1e-4, 1.0 / alpha, T);
  EXPECT_LT(std::fabs(v1 - v2), 3.0 * std::sqrt(2.0) * se);
}

TEST(SimulateOu, DeterministicPerSeed) {
  const OuParams p{{0.5, 1.5}, 0.02};
  const auto a = simulate_ou(p, config(100.0, 0.01, 10, 5));
  const auto b = simulate_ou(p, config(100.0, 0.01, 10, 5));
  const auto c = simulate_ou(p, config(100.0, 0.01, 10, 6));
  EXPECT_TRUE(bit_identical(a[0], b[0]));
  EXPECT_TRUE(bit_identical(a[1], b[1]));
  EXPECT_FALSE(bit_identical(a[0], c[0]));
}

TEST(SimulateOu, RejectsBadInputs) {
  EXPECT_THROW(simulate_ou({{0.5}, 0.01}, config(10.0, 4.0, 1, 1, 0.0)), StabilityError);
  EXPECT_THROW(simulate_ou({{}, 0.01}, config(10.0, 0.01, 10)), InvalidInput);
  EXPECT_THROW(simulate_ou({{-1.0}, 0.01}, config(10.0, 0.01, 10)), InvalidInput);
  EXPECT_THROW(simulate_ou({{1.0}, std::nan("")}, config(10.0, 0.01, 10)), InvalidInput);
}

TEST(SimulateWeaklyDamped, NoiselessDecayingRotation) {
  WeaklyDampedParams p;
  p.noise_intensity = 0.0;
  const auto path = simulate_weakly_damped(p, config(50.0, 1e-3, 10, 1, 0.0), PlanarState{1.0, 0.0});
  for (std::size_t i = 0; i < path.x.size(); i += 37) {
    const double t = path.x.time_at(i);
    EXPECT_NEAR(path.x.samples()[i], std::exp(-p.damping * t) * std::cos(p.natural_freq * t), 0.03) << "t=" << t;
  }
}

TEST(SimulateWeaklyDamped, StationaryVarianceMatchesLyapunov) {
  const WeaklyDampedParams p;  // gamma 0.02, omega0 0.3 pi, sigma 0.01
  const double dt = 0.005, T = 2e5;
  const auto path = simulate_weakly_damped(p, config(T, dt, 20, 21));
  const auto A = oracle::rotation_generator(p.damping, p.natural_freq);
  const Eigen::MatrixXd P = oracle::lyapunov(A, Eigen::MatrixXd::Identity(2, 2) * p.noise_intensity * p.noise_intensity);
  EXPECT_NEAR(P(0, 0), p.noise_intensity * p.noise_intensity / (2 * p.damping), 1e-12);
  const double em = oracle::em_stationary_cov(A, p.noise_intensity, dt)(0, 0);
  const double vx = oracle::variance(path.x.values());
  const double vy = oracle::variance(path.y.values());
  const double tol = 4.0 * variance_se(em, 1.0 / p.damping, T);
  EXPECT_NEAR(vx, em, tol);
  EXPECT_NEAR(vy, em, tol);
  EXPECT_NEAR(0.5 * (vx + vy), em, 0.05 * em);
}

TEST(SimulateWeaklyDamped, DefaultStepVarianceWithinFivePercentOfContinuous) {
  const WeaklyDampedParams p;
  const auto A = oracle::rotation_generator(p.damping, p.natural_freq);
  const double em = oracle::em_stationary_cov(A, p.noise_intensity, SimConfig{}.dt)(0, 0);
  const double exact = p.noise_intensity * p.noise_intensity / (2 * p.damping);
  EXPECT_LT(std::fabs(em / exact - 1.0), 0.05);
}

TEST(SimulateWeaklyDamped, GaussianAtMillionSamples) {
  const auto path = simulate_weakly_damped({}, config(40000.0, 1e-3, 40, 8));
  ASSERT_EQ(path.x.size(), 1000000u);
  EXPECT_LT(std::fabs(excess_kurtosis(path.x)), 0.15);
}

TEST(SimulateWeaklyDamped, UnstableStepRejected) {
  EXPECT_THROW(simulate_weakly_damped({}, config(10.0, 0.5, 1, 1, 0.0)), StabilityError);
}

TEST(SimulateWeaklyDamped, UndersampledPeriodWarns) {
  ForcedParams p;
  p.force_amplitude = 0.0;
  const auto ok = simulate_forced(p, config(100.0, 0.1, 1, 1, 0.0));
  EXPECT_TRUE(ok.warnings.empty());
  const auto coarse = simulate_forced(p, config(100.0, 0.8, 1, 1, 0.0));
  EXPECT_FALSE(coarse.warnings.empty());
}

TEST(SimulateLimitCycle, NoiselessCycleHasConstantRadius) {
  HopfParams p;
  p.noise_intensity = 0.0;
  const auto path = simulate_limit_cycle(p, config(300.0, 1e-3, 10, 1, 0.0));
  const double r0 = std::sqrt(p.growth);
  double crossings = 0, first = -1, last = -1;
  for (std::size_t i = 0; i < path.x.size(); ++i) {
    const double r = std::hypot(path.x.samples()[i], path.y.samples()[i]);
    EXPECT_NEAR(r, r0, 0.03 * r0);
    if (i > 0 && path.x.samples()[i - 1] < 0 && path.x.samples()[i] >= 0) {
      if (first < 0) first = path.x.time_at(i);
      last = path.x.time_at(i);
      ++crossings;
    }
  }
  const double period = (last - first) / (crossings - 1);
  EXPECT_NEAR(period, 2 * oracle::kPi / p.hopf_freq, 0.01 * period);
  EXPECT_NEAR(excess_kurtosis(path.x), -1.5, 0.01);
}

TEST(SimulateLimitCycle, SmallNoiseGivesSinusoidalKurtosis) {
  HopfParams p;
  p.noise_intensity = 1e-4;
  const auto path = simulate_limit_cycle(p, config(1000.0, 1e-3, 100, 2));
  EXPECT_NEAR(excess_kurtosis(path.x), -1.5, 0.05);
}

TEST(SimulateLimitCycle, MeanRadiusNearDeterministicAmplitude) {
  HopfParams p;
  p.noise_intensity = 1e-3;  // sigma^2 = 1e-6 << gamma^2 = 1e-4
  const auto path = simulate_limit_cycle(p, config(2000.0, 1e-3, 100, 3));
  double mean_r = 0;
  for (std::size_t i = 0; i < path.x.size(); ++i) mean_r += std::hypot(path.x.samples()[i], path.y.samples()[i]);
  mean_r /= path.x.size();
  EXPECT_NEAR(mean_r, std::sqrt(p.growth), 0.1 * std::sqrt(p.growth));
}

TEST(SimulateForced, NoiselessSteadyStateIsSinusoidAtForcingAmplitude) {
  ForcedParams p;
  p.noise_intensity = 0.0;
  const auto path = simulate_forced(p, config(200.0, 1e-3, 10, 1, 50.0));
  const double rho_oracle = p.force_amplitude /
                            std::abs(std::complex<double>(p.damping, p.natural_freq - p.force_freq));
  double rmin = 1e9, rmax = 0;
  for (std::size_t i = 0; i < path.x.size(); ++i) {
    const double r = std::hypot(path.x.samples()[i], path.y.samples()[i]);
    rmin = std::min(rmin, r);
    rmax = std::max(rmax, r);
  }
  EXPECT_NEAR(rmin, rho_oracle, 0.01 * rho_oracle);
  EXPECT_NEAR(rmax, rho_oracle, 0.01 * rho_oracle);
  EXPECT_NEAR(forced_response_amplitude(p), rho_oracle, 1e-12);
  EXPECT_NEAR(excess_kurtosis(path.x), -1.5, 1e-2);
}

TEST(SimulateForced, ResonantResponseGrowsAsForceOverDamping) {
  ForcedParams p;
  p.damping = 0.05;
  p.force_freq = p.natural_freq;
  p.noise_intensity = 0.0;
  EXPECT_NEAR(forced_response_amplitude(p), p.force_amplitude / p.damping, 1e-12);
  const auto path = simulate_forced(p, config(50.0, 1e-3, 10, 1, 300.0));
  const double r = std::hypot(path.x.samples().back(), path.y.samples().back());
  EXPECT_NEAR(r, forced_response_amplitude(p), 0.01 * forced_response_amplitude(p));
}

TEST(SimulateForced, ZeroForceResponseAmplitude) {
  ForcedParams p;
  p.force_amplitude = 0.0;
  EXPECT_EQ(forced_response_amplitude(p), 0.0);
}

TEST(SimulateForced, ZeroForceReproducesWeaklyDampedPathExactly) {
  ForcedParams f;
  f.damping = 0.02;
  f.natural_freq = 0.3 * oracle::kPi;
  f.force_amplitude = 0.0;
  const WeaklyDampedParams w{f.damping, f.natural_freq, f.noise_intensity};
  const auto cfg = config(200.0, 1e-3, 100, 42);
  const auto a = simulate_forced(f, cfg);
  const auto b = simulate_weakly_damped(w, cfg);
  EXPECT_TRUE(bit_identical(a.x, b.x));
  EXPECT_TRUE(bit_identical(a.y, b.y));
}

TEST(SimulateForced, RejectsInvalidParameters) {
  ForcedParams p;
  p.force_amplitude = -1.0;
  EXPECT_THROW(simulate_forced(p, config(10.0, 1e-3, 100)), InvalidInput);
  p = ForcedParams{};
  p.force_freq = 0.0;
  EXPECT_THROW(simulate_forced(p, config(10.0, 1e-3, 100)), InvalidInput);
  p = ForcedParams{};
  p.damping = std::numeric_limits<double>::infinity();
  EXPECT_THROW(forced_response_amplitude(p), InvalidInput);
}

TEST(Simulate, DispatchesOnVariantAndIsDeterministic) {
  const auto cfg = config(50.0, 1e-3, 100, 9);
  for (const ModelParams& m : {ModelParams{WeaklyDampedParams{}}, ModelParams{HopfParams{}}, ModelParams{ForcedParams{}}}) {
    const auto a = simulate(m, cfg);
    const auto b = simulate(m, cfg);
    EXPECT_TRUE(bit_identical(a.x, b.x)) << model_name(m);
  }
  EXPECT_EQ(model_name(HopfParams{}), "limit_cycle");
}
