#pragma once

#include <cstdint>
#include <random>

namespace localcut {

/// Seeded 64-bit generator with platform-independent derived draws.
///
/// The standard distributions are implementation-defined, so index and
/// coin draws are computed here from raw 64-bit outputs of mt19937_64.
class Rng {
public:
  using Seed = std::uint64_t;

  explicit Rng(Seed seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform integer in [0, bound). `bound` must be positive.
  std::uint64_t below(std::uint64_t bound) {
    // Lemire's multiply-shift with rejection; exact and portable.
    unsigned __int128 product =
        static_cast<unsigned __int128>(next_u64()) * bound;
    auto low = static_cast<std::uint64_t>(product);
    if (low < bound) {
      const std::uint64_t threshold = (0 - bound) % bound;
      while (low < threshold) {
        product = static_cast<unsigned __int128>(next_u64()) * bound;
        low = static_cast<std::uint64_t>(product);
      }
    }
    return static_cast<std::uint64_t>(product >> 64);
  }

  /// True with probability exactly min(1, num/den) at 2^-64 resolution.
  bool bernoulli(std::uint64_t num, std::uint64_t den) {
    if (num >= den)
      return true;
    const auto draw = static_cast<unsigned __int128>(next_u64());
    return draw * den < (static_cast<unsigned __int128>(num) << 64);
  }

  /// Uniform double in [0, 1) built from the top 53 bits.
  double uniform01() { return (next_u64() >> 11) * 0x1.0p-53; }

private:
  std::mt19937_64 engine_;
};

/// SplitMix64 finalizer; used to derive independent task seeds.
constexpr std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Seed for task `index` of a run started with `master`.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return mix_seed(mix_seed(master) ^ mix_seed(index + 0x632be59bd9b4e019ULL));
}

} // namespace localcut
