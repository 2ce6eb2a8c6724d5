#ifndef JASA_TYPES_HPP
#define JASA_TYPES_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace jasa {

/// Thrown when a brute-force reference routine refuses an instance that is
/// too large to enumerate. Oracles fail hard instead of subsampling.
class guard_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Thrown on malformed or out-of-range experiment configuration.
class config_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// One step of the encoding-rate ladder: an encoding rate (compressed bits
/// per source bit) and the labelling error probability a single annotator
/// exhibits at that rate.
struct RateEntry {
  double rate = 0.0;
  double error_prob = 0.0;
};

/// The discrete set of encoding rates available to the transmitter, ordered
/// from highest rate (type 1, most accurate labels) to lowest. Rates must be
/// strictly decreasing and error probabilities strictly increasing; both are
/// validated at construction. Type indices are 1-based throughout.
class RateLadder {
public:
  explicit RateLadder(std::vector<RateEntry> entries);

  int types() const { return static_cast<int>(entries_.size()); }
  double rate(int type) const { return entries_.at(type - 1).rate; }
  double error_prob(int type) const { return entries_.at(type - 1).error_prob; }
  const std::vector<RateEntry>& entries() const { return entries_; }

private:
  std::vector<RateEntry> entries_;
};

/// Static parameters of one labelling campaign: how many objects need labels,
/// how big they are, the accuracy target, and the two resource budgets.
/// Bandwidth is stored per sub-channel since every formula consumes it in
/// that form; the total is subchannel_bandwidth_hz * subchannel_budget.
struct Scenario {
  int objects = 0;                    // number of raw objects awaiting labels
  int object_bits = 0;                // size of one raw object, bits
  double target_rlep = 0.0;           // required majority-vote error probability
  int annotator_budget = 0;           // total annotators available
  int subchannel_budget = 0;          // total sub-channels available
  double subchannel_bandwidth_hz = 0; // bandwidth of one sub-channel
  double duration_s = 0.0;            // multicast transmission window

  void validate() const;
};

/// One annotator cluster in a solution: the ladder type it decodes, the
/// contiguous 1-based annotator range it occupies, and the sub-channels
/// reserved for its object.
struct ClusterSpec {
  int type = 0;
  int first = 0;
  int last = 0;
  int subchannels = 0;

  int size() const { return last - first + 1; }
};

/// A feasible allocation: the first `throughput` objects get labelled, one
/// cluster each, listed in object order. Annotator ranges are contiguous,
/// disjoint and ordered; totals never exceed the scenario budgets.
struct Solution {
  int throughput = 0;
  std::vector<ClusterSpec> clusters;
  int annotators_used = 0;
  int subchannels_used = 0;
  // For tree searches: 1-based node index chosen in each level, root excluded.
  std::vector<int> node_path;
};

}  // namespace jasa

#endif  // JASA_TYPES_HPP
