#include "link.hpp"

#include <cmath>
#include <stdexcept>

#include "labelling.hpp"

namespace jasa {

double capacity(int subchannels, const Scenario& scen, double snr) {
  if (subchannels < 0) throw std::invalid_argument("sub-channel count must be non-negative");
  if (snr < 0.0) throw std::invalid_argument("SNR must be non-negative");
  return subchannels * scen.subchannel_bandwidth_hz * scen.duration_s * std::log2(1.0 + snr);
}

int subchannels_needed(double rate, const Scenario& scen, double snr) {
  if (!(rate > 0.0)) throw std::invalid_argument("encoding rate must be positive");
  if (!(snr > 0.0)) throw std::invalid_argument("no finite sub-channel count delivers over a zero-SNR link");
  const double per_subchannel =
      scen.subchannel_bandwidth_hz * scen.duration_s * std::log2(1.0 + snr);
  return saturating_ceil(rate * scen.object_bits / per_subchannel);
}

std::pair<int, int> subchannel_bounds(double rate, const Scenario& scen, double snr_best,
                                      double snr_worst) {
  if (!(snr_best >= snr_worst))
    throw std::invalid_argument("best SNR must be at least the worst SNR");
  return {subchannels_needed(rate, scen, snr_best), subchannels_needed(rate, scen, snr_worst)};
}

}  // namespace jasa
