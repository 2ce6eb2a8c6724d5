#ifndef JASA_CHANNEL_HPP
#define JASA_CHANNEL_HPP

#include <cstdint>
#include <vector>

#include "types.hpp"

namespace jasa {

/// One draw of the downlink channels to every annotator. Gains are kept
/// sorted in decreasing order (and therefore so are the SNRs); `order[i]`
/// remembers which original annotator the i-th sorted slot belongs to.
struct ChannelRealization {
  std::vector<double> gains;      // power gains, sorted decreasing
  std::vector<int> order;         // original 0-based index per sorted slot
  double noise_power = 1.0;
  double per_annotator_power = 1.0;

  int annotators() const { return static_cast<int>(gains.size()); }
  /// SNR of the k-th best annotator (1-based).
  double snr(int k) const { return gains.at(k - 1) * per_annotator_power / noise_power; }
  double best_snr() const { return snr(1); }
  double worst_snr() const { return snr(annotators()); }
};

/// Truncated channel inversion outcome: the first `available` sorted
/// annotators are powered to sit exactly at `target_snr`; the rest get
/// nothing because inverting their channels would blow the power budget.
struct TciAllocation {
  double target_snr = 0.0;
  std::vector<double> powers;   // per sorted annotator, zero beyond `available`
  int available = 0;
  double total_power = 0.0;     // the budget, not the amount spent
};

/// Draw `count` power gains i.i.d. Exp(1) (Rayleigh amplitudes), sorted
/// decreasing. Gain j comes from counter j of the seed's stream, so
/// enlarging `count` preserves the gains already drawn. Uniform per-annotator
/// transmit power `total_power / count` is recorded on the realization.
ChannelRealization draw_rayleigh(int count, std::uint64_t seed, double noise_power = 1.0,
                                 double total_power = -1.0);

/// Power allocation that equalizes every served annotator at `target_snr`,
/// serving the longest prefix of the (sorted) channel affordable within
/// `total_power`. An empty prefix is a valid outcome, not an error.
TciAllocation truncated_inversion(const ChannelRealization& ch, double target_snr,
                                  double total_power);

/// Sub-channel cost of a rate under channel inversion: every cluster of the
/// same type costs the same because all served annotators sit at target_snr.
int tci_subchannels(double rate, const Scenario& scen, double target_snr);

}  // namespace jasa

#endif  // JASA_CHANNEL_HPP
