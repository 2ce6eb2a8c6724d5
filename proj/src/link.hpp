#ifndef JASA_LINK_HPP
#define JASA_LINK_HPP

#include <utility>

#include "types.hpp"

namespace jasa {

/// Bits deliverable over `subchannels` sub-channels to a receiver at the
/// given SNR within the scenario's transmission window.
double capacity(int subchannels, const Scenario& scen, double snr);

/// Minimum sub-channel count that delivers a rate-`rate` encoding of one
/// object to a receiver at `snr`. The result L satisfies
/// capacity(L) >= rate * object_bits > capacity(L - 1). SNR must be positive;
/// a silent channel needs unbounded spectrum.
int subchannels_needed(double rate, const Scenario& scen, double snr);

/// Sub-channel cost at the best and worst SNR of a sorted channel:
/// {cost at snr_best, cost at snr_worst}, componentwise a (min, max) pair.
std::pair<int, int> subchannel_bounds(double rate, const Scenario& scen, double snr_best,
                                      double snr_worst);

}  // namespace jasa

#endif  // JASA_LINK_HPP
