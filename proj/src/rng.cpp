#include "rng.hpp"

#include <cmath>
#include <stdexcept>

namespace jasa {

double SplitMix64::next_exp() { return -std::log(next_unit()); }

int SplitMix64::next_int(int lo, int hi) {
  if (lo > hi) throw std::invalid_argument("empty integer range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  return lo + static_cast<int>(next() % span);
}

}  // namespace jasa
