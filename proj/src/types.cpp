#include "types.hpp"

namespace jasa {

RateLadder::RateLadder(std::vector<RateEntry> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw std::invalid_argument("rate ladder must have at least one entry");
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto& e = entries_[i];
    if (!(e.rate > 0.0 && e.rate <= 1.0))
      throw std::invalid_argument("encoding rate must lie in (0, 1]");
    if (!(e.error_prob > 0.0 && e.error_prob < 0.5))
      throw std::invalid_argument("labelling error probability must lie in (0, 0.5)");
    if (i > 0) {
      if (!(e.rate < entries_[i - 1].rate))
        throw std::invalid_argument("encoding rates must be strictly decreasing");
      if (!(e.error_prob > entries_[i - 1].error_prob))
        throw std::invalid_argument("labelling error probabilities must be strictly increasing");
    }
  }
}

void Scenario::validate() const {
  if (objects < 1) throw std::invalid_argument("scenario needs at least one object");
  if (object_bits < 1) throw std::invalid_argument("object size must be positive");
  if (!(target_rlep > 0.0 && target_rlep < 1.0))
    throw std::invalid_argument("target RLEP must lie in (0, 1)");
  if (annotator_budget < 0) throw std::invalid_argument("annotator budget must be non-negative");
  if (subchannel_budget < 0) throw std::invalid_argument("sub-channel budget must be non-negative");
  if (!(subchannel_bandwidth_hz > 0.0))
    throw std::invalid_argument("sub-channel bandwidth must be positive");
  if (!(duration_s > 0.0)) throw std::invalid_argument("transmission duration must be positive");
}

}  // namespace jasa
