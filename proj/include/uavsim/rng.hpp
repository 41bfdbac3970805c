#pragma once

#include <cstdint>
#include <random>

namespace uavsim {

// SplitMix64 step, used only to derive substream seeds from a master seed.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Substream identifiers. One master seed fans out into independent streams
// so that changing the action-selection algorithm never perturbs the world
// realization (user placement, channel draws) for the same seed.
namespace stream {
constexpr std::uint64_t users = 1;
constexpr std::uint64_t channel = 2;
constexpr std::uint64_t explore_base = 0x100;   // + agent index
constexpr std::uint64_t tiebreak_base = 0x200;  // + agent index
}  // namespace stream

inline std::uint64_t substream_seed(std::uint64_t master, std::uint64_t id) {
  std::uint64_t s = master ^ (0xa076'1d64'78bd'642fULL * (id + 1));
  std::uint64_t out = splitmix64(s);
  return out ^ splitmix64(s);
}

// Deterministic random stream. std::mt19937_64 has a fully specified output
// sequence; the conversions below avoid std::*_distribution, whose results
// are implementation-defined, so identical seeds give identical draws on
// every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on [0, 1) with 53-bit resolution.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform integer in [0, n), unbiased via rejection.
  std::size_t uniform_index(std::size_t n) {
    const std::uint64_t span = static_cast<std::uint64_t>(n);
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x;
    do {
      x = next_u64();
    } while (x >= limit);
    return static_cast<std::size_t>(x % span);
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  bool bernoulli(double p) { return next_double() < p; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace uavsim
