#ifndef JASA_INSTANCES_HPP
#define JASA_INSTANCES_HPP

#include <cstdint>

#include "channel.hpp"
#include "tci.hpp"
#include "types.hpp"

namespace jasa {

/// A self-contained random fading instance small enough for the exhaustive
/// reference: up to 4 objects, 3 ladder types, budgets up to 12, Rayleigh
/// channel. Deterministic in the seed. The channel's own seed is kept so a
/// caller can redraw the same stream with more annotators.
struct RandomFadingInstance {
  Scenario scenario;
  RateLadder ladder;
  ChannelRealization channel;
  std::uint64_t channel_seed = 0;
};

RandomFadingInstance random_fading_instance(std::uint64_t seed);

/// A random bounded two-dimensional knapsack with up to 3 types and budgets
/// up to 15; weights need not be monotone across types. Deterministic in the
/// seed.
KnapsackInstance random_knapsack_instance(std::uint64_t seed);

}  // namespace jasa

#endif  // JASA_INSTANCES_HPP
