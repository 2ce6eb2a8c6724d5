#include "channel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "link.hpp"
#include "rng.hpp"

namespace jasa {

ChannelRealization draw_rayleigh(int count, std::uint64_t seed, double noise_power,
                                 double total_power) {
  if (count < 1) throw std::invalid_argument("need at least one annotator to draw a channel");
  if (!(noise_power > 0.0)) throw std::invalid_argument("noise power must be positive");

  std::vector<double> gains(count);
  for (int j = 0; j < count; ++j)
    gains[j] = -std::log(SplitMix64::to_unit(SplitMix64::at(seed, static_cast<std::uint64_t>(j))));

  std::vector<int> order(count);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return gains[a] > gains[b]; });

  ChannelRealization ch;
  ch.order = order;
  ch.gains.resize(count);
  for (int i = 0; i < count; ++i) ch.gains[i] = gains[order[i]];
  ch.noise_power = noise_power;
  if (total_power < 0.0) total_power = static_cast<double>(count);
  ch.per_annotator_power = total_power / count;
  return ch;
}

TciAllocation truncated_inversion(const ChannelRealization& ch, double target_snr,
                                  double total_power) {
  if (!(target_snr > 0.0)) throw std::invalid_argument("target SNR must be positive");
  if (!(total_power > 0.0)) throw std::invalid_argument("power budget must be positive");

  TciAllocation alloc;
  alloc.target_snr = target_snr;
  alloc.total_power = total_power;
  alloc.powers.assign(ch.gains.size(), 0.0);

  double spent = 0.0;
  for (std::size_t k = 0; k < ch.gains.size(); ++k) {
    const double p = target_snr * ch.noise_power / ch.gains[k];
    if (spent + p > total_power) break;
    spent += p;
    alloc.powers[k] = p;
    alloc.available = static_cast<int>(k) + 1;
  }
  return alloc;
}

int tci_subchannels(double rate, const Scenario& scen, double target_snr) {
  return subchannels_needed(rate, scen, target_snr);
}

}  // namespace jasa
