#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace cforge {

// Counter-based substream RNG. Every Monte-Carlo draw site derives an
// independent stream from (master_seed, stream_tag, index), so results do not
// depend on thread scheduling or evaluation order.

inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// xoshiro256** seeded via splitmix64.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& word : state_) word = splitmix64(sm);
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Uniform in [0, 1).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Standard normal via Box-Muller (second value cached).
  double normal() {
    if (have_cached_) {
      have_cached_ = false;
      return cached_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    cached_ = radius * std::sin(angle);
    have_cached_ = true;
    return radius * std::cos(angle);
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

  std::uint64_t state_[4]{};
  double cached_ = 0.0;
  bool have_cached_ = false;
};

// Stream tags keep draw sites that share a master seed independent.
namespace stream_tag {
inline constexpr std::uint64_t povm = 0x706F766DULL;
inline constexpr std::uint64_t two_outcome = 0x74776F6FULL;
inline constexpr std::uint64_t bloch_state = 0x73746174ULL;
inline constexpr std::uint64_t unitary = 0x756E6974ULL;
inline constexpr std::uint64_t refine = 0x7265666EULL;
inline constexpr std::uint64_t diag_povm = 0x64696167ULL;
inline constexpr std::uint64_t projector = 0x70726F6AULL;
}  // namespace stream_tag

inline Rng substream(std::uint64_t master_seed, std::uint64_t tag, std::uint64_t index) {
  std::uint64_t sm = master_seed;
  const std::uint64_t a = splitmix64(sm);
  sm ^= tag * 0xD1342543DE82EF95ULL;
  const std::uint64_t b = splitmix64(sm);
  sm ^= (index + 1) * 0x9E3779B97F4A7C15ULL;
  const std::uint64_t c = splitmix64(sm);
  return Rng(a ^ b ^ c);
}

}  // namespace cforge
