#ifndef JASA_RNG_HPP
#define JASA_RNG_HPP

#include <cstdint>

namespace jasa {

/// Counter-based splitmix64 stream. Draw i is a pure function of (seed, i),
/// so prefixes of a stream are stable: extending a draw never perturbs the
/// values already produced, and disjoint seeds give independent streams.
/// Parallel and serial consumers of the same (seed, counter) range agree
/// bit-exactly.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Value at a given counter without advancing any state.
  static std::uint64_t at(std::uint64_t seed, std::uint64_t counter) {
    return mix(seed + (counter + 1) * kGamma);
  }

  std::uint64_t next() { return mix(state_ += kGamma); }

  /// Uniform draw strictly inside (0, 1).
  double next_unit() { return to_unit(next()); }

  /// Exponential draw with unit mean, strictly positive.
  double next_exp();

  /// Uniform integer in [lo, hi] inclusive.
  int next_int(int lo, int hi);

  /// Uniform double in [lo, hi).
  double next_range(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

  bool next_bernoulli(double p) { return next_unit() < p; }

  static double to_unit(std::uint64_t x) {
    return (static_cast<double>(x >> 12) + 0.5) * (1.0 / 4503599627370496.0);  // 2^-52
  }

private:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;
  std::uint64_t state_;
};

}  // namespace jasa

#endif  // JASA_RNG_HPP
