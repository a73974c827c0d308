#pragma once

#include <cstdint>
#include <initializer_list>

namespace iabsim {

// Keyed counter-style randomness. Every draw site owns a stream derived from
// (master seed, trial index, purpose, entity ids), so results never depend on
// evaluation order or on how trials are distributed over workers.
//
// The generator is SplitMix64: 64-bit state advanced by a fixed odd constant
// and finalized with an avalanche mix. Output sequences are fully defined by
// this file alone (no library-dependent distributions), which keeps runs
// byte-reproducible across platforms.

enum class StreamPurpose : std::uint64_t {
  Trees = 1,
  UePositions = 2,
  Season = 3,
  Fading = 4,
  Beams = 5,
  Synthetic = 6,
};

class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed_key) : state_(seed_key) {}

  std::uint64_t next_u64();

  // Uniform on [0, 1), 53-bit resolution.
  double uniform();

  // Uniform integer on [0, n); n must be >= 1.
  std::uint64_t uniform_index(std::uint64_t n);

  // Unit-mean exponential (Rayleigh power gain).
  double exponential();

  // Poisson by exponential-arrival counting; exact for any finite mean.
  // Means above 400 are split additively to avoid underflow in the
  // product-of-uniforms form.
  std::uint64_t poisson(double mean);

 private:
  std::uint64_t state_;
};

// Order-insensitive only in the sense that the caller lists parts in a fixed
// documented order; distinct part lists give statistically independent keys.
std::uint64_t mix_key(std::initializer_list<std::uint64_t> parts);

RandomStream substream(std::uint64_t master_seed, std::uint64_t trial,
                       StreamPurpose purpose, std::uint64_t a = 0,
                       std::uint64_t b = 0);

}  // namespace iabsim
