#pragma once

#include <cstdint>
#include <random>

namespace oscdx {

// Generator for one reproducible stream. Replicate k of a run seeded with s
// always draws from make_stream(s, k), independent of thread scheduling.
using Rng = std::mt19937_64;

Rng make_stream(std::uint64_t seed, std::uint64_t stream);

// Unit normal draws. Kept as a thin wrapper so every module uses the same
// transform for a given Rng state.
class GaussianSource {
 public:
  explicit GaussianSource(Rng rng) : rng_(std::move(rng)) {}
  double operator()() { return dist_(rng_); }

 private:
  Rng rng_;
  std::normal_distribution<double> dist_{0.0, 1.0};
};

}  // namespace oscdx
