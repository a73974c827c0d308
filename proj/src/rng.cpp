#include "iabsim/rng.hpp"

#include <cmath>

namespace iabsim {

namespace {

constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ull;

std::uint64_t splitmix_finalize(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t RandomStream::next_u64() {
  state_ += kGamma;
  return splitmix_finalize(state_);
}

double RandomStream::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::uint64_t RandomStream::uniform_index(std::uint64_t n) {
  // Rejection-free modulo bias is negligible for the small n used here, but
  // widen through 128-bit multiply anyway to keep draws unbiased.
  unsigned __int128 wide = static_cast<unsigned __int128>(next_u64()) * n;
  return static_cast<std::uint64_t>(wide >> 64);
}

double RandomStream::exponential() {
  // 1 - uniform() is in (0, 1], so the log is finite.
  return -std::log(1.0 - uniform());
}

namespace {

// Knuth: count uniforms whose running product stays above exp(-mean).
std::uint64_t poisson_chunk(RandomStream& rs, double mean) {
  const double limit = std::exp(-mean);
  std::uint64_t k = 0;
  double prod = rs.uniform();
  while (prod > limit) {
    ++k;
    prod *= rs.uniform();
  }
  return k;
}

}  // namespace

std::uint64_t RandomStream::poisson(double mean) {
  if (!(mean > 0.0)) return 0;
  std::uint64_t count = 0;
  while (mean > 400.0) {
    count += poisson_chunk(*this, 400.0);
    mean -= 400.0;
  }
  count += poisson_chunk(*this, mean);
  return count;
}

std::uint64_t mix_key(std::initializer_list<std::uint64_t> parts) {
  std::uint64_t h = 0x6a09e667f3bcc909ull;
  for (std::uint64_t p : parts) {
    h = splitmix_finalize(h + kGamma + p);
  }
  return h;
}

RandomStream substream(std::uint64_t master_seed, std::uint64_t trial,
                       StreamPurpose purpose, std::uint64_t a,
                       std::uint64_t b) {
  return RandomStream(mix_key(
      {master_seed, trial, static_cast<std::uint64_t>(purpose), a, b}));
}

}  // namespace iabsim
