#ifndef JASA_TEST_SUPPORT_HPP
#define JASA_TEST_SUPPORT_HPP

#include <utility>
#include <vector>

#include "channel.hpp"
#include "fading.hpp"
#include "link.hpp"
#include "types.hpp"

namespace jasa::testsupport {

/// The canned three-object, two-type instance with published edge costs:
/// budgets K=6, L=3; its known optimum is 2 via two type-1 clusters.
struct TreeFixture {
  Scenario scenario;
  TableEdgeCosts costs;
};

inline TreeFixture tree_fixture() {
  Scenario scen;
  scen.objects = 3;
  scen.object_bits = 10;
  scen.target_rlep = 0.1;
  scen.annotator_budget = 6;
  scen.subchannel_budget = 3;
  scen.subchannel_bandwidth_hz = 3.0;
  scen.duration_s = 1.0;

  std::map<std::pair<int, int>, EdgeCost> table = {
      {{0, 1}, {3, 1}}, {{0, 2}, {1, 3}},
      {{1, 1}, {3, 2}}, {{1, 2}, {1, 4}},
      {{3, 1}, {3, 1}}, {{3, 2}, {1, 3}},
      {{6, 1}, {3, 1}}, {{6, 2}, {1, 5}},
  };
  return TreeFixture{scen, TableEdgeCosts(2, std::move(table))};
}

/// Check a solution against the full feasibility contract: contiguous
/// disjoint ordered clusters, reception at every cluster's worst SNR, and
/// both budgets. Returns true when everything holds.
inline bool feasible(const Solution& sol, const Scenario& scen, const RateLadder& ladder,
                     const ChannelRealization& ch, const std::vector<int>& sizes) {
  if (sol.throughput != static_cast<int>(sol.clusters.size())) return false;
  if (sol.throughput > scen.objects) return false;
  int annots = 0, subch = 0;
  for (const ClusterSpec& c : sol.clusters) {
    if (c.type < 1 || c.type > ladder.types()) return false;
    if (c.first != annots + 1) return false;           // contiguous and ordered
    if (c.size() != sizes[c.type - 1]) return false;   // the type's required size
    if (c.subchannels < 1) return false;
    if (c.last > ch.annotators()) return false;
    const double payload = ladder.rate(c.type) * scen.object_bits;
    if (capacity(c.subchannels, scen, ch.snr(c.last)) < payload * (1 - 1e-9)) return false;
    annots = c.last;
    subch += c.subchannels;
  }
  if (annots != sol.annotators_used || subch != sol.subchannels_used) return false;
  return annots <= scen.annotator_budget && subch <= scen.subchannel_budget;
}

}  // namespace jasa::testsupport

#endif  // JASA_TEST_SUPPORT_HPP
