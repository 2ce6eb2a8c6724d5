#ifndef JASA_ORACLE_HPP
#define JASA_ORACLE_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "fading.hpp"
#include "tci.hpp"
#include "types.hpp"

namespace jasa {

/// Outcome of a brute-force reference run. By definition no solver may beat
/// the reported optimum on the same instance; equality is the test.
struct OracleReport {
  int optimum = 0;
  std::vector<int> witness;
  long long states_examined = 0;
};

/// Enumerate every type sequence over object prefixes, charging cumulative
/// edge costs and discarding branches that exceed a budget (extensions of an
/// over-budget prefix are over budget too, so nothing feasible is skipped).
/// Refuses instances beyond objects <= 6 or types <= 3; an oracle that
/// subsamples is not an oracle.
OracleReport exhaustive_search(const Scenario& scen, const EdgeCostProvider& costs);

/// Enumerate every copy-count vector within the per-type caps of a knapsack
/// instance. Refuses instances whose cap product exceeds enumeration reach.
OracleReport exhaustive_counts(const KnapsackInstance& inst);

/// One cluster for the partition reference: how many annotators it needs and
/// the encoding rate its object uses.
struct PartitionCluster {
  int size = 0;
  double rate = 0.0;
};

/// Minimum total sub-channel use over every assignment of distinct sorted
/// annotators to (at most two) clusters, trying both pairings of sizes with
/// rates. Certifies that contiguous-prefix clustering is never beaten.
/// Guarded to <= 2 clusters and <= 8 annotators.
int partition_oracle(const std::vector<PartitionCluster>& clusters, const Scenario& scen,
                     const ChannelRealization& ch);

/// Empirical majority-vote error rate: fraction of `trials` in which at
/// least (size+1)/2 of `size` independent Bernoulli(error_prob) mistakes
/// occur. `size` must be odd.
double simulate_votes(double error_prob, int size, long long trials, std::uint64_t seed);

}  // namespace jasa

#endif  // JASA_ORACLE_HPP
