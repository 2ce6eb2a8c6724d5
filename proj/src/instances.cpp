#include "instances.hpp"

#include <algorithm>

#include "rng.hpp"

namespace jasa {

RandomFadingInstance random_fading_instance(std::uint64_t seed) {
  SplitMix64 rng(SplitMix64::mix(seed ^ 0xFAD1FAD1FAD1FAD1ull));

  const int types = rng.next_int(1, 3);
  // Rates strictly decreasing, error probabilities strictly increasing; the
  // error range keeps derived cluster sizes small enough to be interesting
  // against budgets of at most 12.
  std::vector<double> rates(types), errs(types);
  for (int i = 0; i < types; ++i) {
    rates[i] = rng.next_range(0.08, 1.0);
    errs[i] = rng.next_range(0.04, 0.22);
  }
  std::sort(rates.begin(), rates.end(), std::greater<>());
  std::sort(errs.begin(), errs.end());
  std::vector<RateEntry> entries(types);
  for (int i = 0; i < types; ++i) {
    // Nudge apart any draws that collide after sorting.
    if (i > 0 && rates[i] >= rates[i - 1]) rates[i] = rates[i - 1] * 0.95;
    if (i > 0 && errs[i] <= errs[i - 1]) errs[i] = errs[i - 1] + 0.005;
    entries[i] = {rates[i], errs[i]};
  }

  Scenario scen;
  scen.objects = rng.next_int(1, 4);
  scen.object_bits = rng.next_int(5, 20);
  scen.target_rlep = rng.next_range(0.1, 0.45);
  scen.annotator_budget = rng.next_int(1, 12);
  scen.subchannel_budget = rng.next_int(0, 12);
  scen.subchannel_bandwidth_hz = 3.0;
  scen.duration_s = 1.0;

  const std::uint64_t channel_seed = rng.next();
  return RandomFadingInstance{scen, RateLadder(entries),
                              draw_rayleigh(scen.annotator_budget, channel_seed), channel_seed};
}

KnapsackInstance random_knapsack_instance(std::uint64_t seed) {
  SplitMix64 rng(SplitMix64::mix(seed ^ 0x2DC2DC2DC2DC2DC2ull));
  KnapsackInstance inst;
  const int types = rng.next_int(1, 3);
  for (int t = 0; t < types; ++t)
    inst.weights.push_back({rng.next_int(1, 6), rng.next_int(1, 6)});
  inst.annotator_budget = rng.next_int(0, 15);
  inst.subchannel_budget = rng.next_int(0, 15);
  return inst;
}

}  // namespace jasa
