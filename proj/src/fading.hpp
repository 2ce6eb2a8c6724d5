#ifndef JASA_FADING_HPP
#define JASA_FADING_HPP

#include <map>
#include <optional>
#include <vector>

#include "channel.hpp"
#include "types.hpp"

namespace jasa {

/// Incremental resource use of serving one more object with a given cluster
/// type: annotators consumed and sub-channels reserved.
struct EdgeCost {
  int annotators = 0;
  int subchannels = 0;
};

/// Supplies the marginal cost of appending one cluster to a partial plan.
/// Because clusters take annotators off a list sorted by decreasing SNR, the
/// cost of a type depends only on how many annotators are already committed.
class EdgeCostProvider {
public:
  virtual ~EdgeCostProvider() = default;
  virtual int types() const = 0;
  /// Cost of a type-`type` cluster placed after `annotators_used` committed
  /// annotators, or nullopt when no such cluster can be formed at all.
  virtual std::optional<EdgeCost> edge(int annotators_used, int type) const = 0;
};

/// Edge costs derived from a channel realization: a type-n cluster placed
/// after j committed annotators occupies slots j+1..j+K_n and must reach its
/// worst member, the one in slot j+K_n.
class ChannelEdgeCosts final : public EdgeCostProvider {
public:
  ChannelEdgeCosts(const Scenario& scen, const RateLadder& ladder, const ChannelRealization& ch,
                   std::vector<int> cluster_sizes);

  int types() const override { return static_cast<int>(sizes_.size()); }
  std::optional<EdgeCost> edge(int annotators_used, int type) const override;
  const std::vector<int>& cluster_sizes() const { return sizes_; }

private:
  Scenario scen_;
  std::vector<double> rates_;
  std::vector<int> sizes_;
  const ChannelRealization* channel_;
};

/// Edge costs replayed from an explicit (annotators_used, type) -> cost
/// table; used for canned instances with published numbers. Missing entries
/// mean the edge does not exist.
class TableEdgeCosts final : public EdgeCostProvider {
public:
  TableEdgeCosts(int types, std::map<std::pair<int, int>, EdgeCost> table)
      : types_(types), table_(std::move(table)) {}

  int types() const override { return types_; }
  std::optional<EdgeCost> edge(int annotators_used, int type) const override;

private:
  int types_;
  std::map<std::pair<int, int>, EdgeCost> table_;
};

struct TreeSearchOptions {
  /// Drop level nodes that another node of the same level dominates in both
  /// cumulative budgets. Off by default; the plain search keeps every
  /// feasible node.
  bool dominance_pruning = false;
};

struct TreeSearchReport {
  Solution solution;
  long long nodes_created = 0;
};

/// Level-by-level tree search for the maximum number of objects servable
/// within both budgets. Level m holds one node per feasible length-m type
/// sequence; children exceeding either budget are pruned; the search stops at
/// the first empty level or past the last object. Among maximum-length paths
/// the lexicographically smallest type sequence is returned.
TreeSearchReport solve_fading(const Scenario& scen, const EdgeCostProvider& costs,
                              const TreeSearchOptions& options = {});

/// Contiguous-prefix clustering over a decreasing-SNR channel: cluster m gets
/// the next sizes[m] best annotators. Throws when the sizes overrun the
/// channel. Types and sub-channel counts are left unset.
std::vector<ClusterSpec> sequential_clustering(const std::vector<int>& sizes,
                                               const ChannelRealization& ch);

/// Greedy plan that stacks clusters of a single type until an edge is
/// missing, either budget fails, or every object is served.
Solution greedy_fixed_type(const Scenario& scen, const EdgeCostProvider& costs, int type);

struct PolicyBounds {
  Solution solution;
  int lower = 0;
  int upper = 0;
};

/// A fading-channel instance bundled with its derived per-type cluster sizes
/// and best/worst-case sub-channel costs; hosts the exact solver and the
/// closed-form policies for the regimes where only one budget binds.
class FadingProblem {
public:
  /// Cluster sizes default to the smallest size meeting the scenario's RLEP
  /// target per type; `cluster_size_override` replaces them wholesale, and
  /// `exact_odd_sizes` rounds derived sizes up to odd.
  FadingProblem(Scenario scen, RateLadder ladder, ChannelRealization ch,
                std::vector<int> cluster_size_override = {}, bool exact_odd_sizes = false);

  // The cost provider refers into the owned channel.
  FadingProblem(const FadingProblem&) = delete;
  FadingProblem& operator=(const FadingProblem&) = delete;

  const Scenario& scenario() const { return scen_; }
  const RateLadder& ladder() const { return ladder_; }
  const ChannelRealization& channel() const { return ch_; }
  const std::vector<int>& cluster_sizes() const { return costs_.cluster_sizes(); }
  const EdgeCostProvider& costs() const { return costs_; }

  /// Per-type sub-channel cost if every annotator had the channel's best SNR.
  int min_subchannels(int type) const;
  /// Per-type sub-channel cost if every annotator had the channel's worst SNR.
  int max_subchannels(int type) const;

  TreeSearchReport solve(const TreeSearchOptions& options = {}) const;

  /// True when annotators are plentiful enough that only spectrum binds:
  /// the budget covers the largest per-type demand K_n * floor(L / Lmin_n).
  bool spectrum_constrained() const;
  /// True when spectrum is plentiful enough that only annotators bind:
  /// the budget covers the largest per-type demand Lmax_n * floor(K / K_n).
  bool annotator_constrained() const;

  /// Optimal plan in the spectrum-constrained regime: greedily stack clusters
  /// of the last (cheapest-spectrum) type. Also reports the closed-form
  /// bounds floor(L/Lmax_N) <= M* <= floor(L/Lmin_N).
  PolicyBounds spectrum_policy() const;

  /// Optimal plan in the annotator-constrained regime: only first-type
  /// clusters, throughput exactly floor(K / K_1).
  Solution annotator_policy() const;

  /// Greedy plan restricted to one cluster type, stacked until either budget
  /// fails. Benchmarks the single-rate designs.
  Solution fixed_type(int type) const;

private:
  Solution greedy_single_type(int type) const;

  Scenario scen_;
  RateLadder ladder_;
  ChannelRealization ch_;
  ChannelEdgeCosts costs_;
};

}  // namespace jasa

#endif  // JASA_FADING_HPP
