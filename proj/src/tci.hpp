#ifndef JASA_TCI_HPP
#define JASA_TCI_HPP

#include <vector>

#include "fading.hpp"
#include "types.hpp"

namespace jasa {

/// Bounded two-dimensional knapsack over cluster types: each copy of type n
/// weighs (K_n annotators, L_n sub-channels) and is worth one labelled
/// object. Equalized channels make the weights independent of placement.
struct KnapsackInstance {
  std::vector<EdgeCost> weights;  // per type, annotators and sub-channels
  int annotator_budget = 0;
  int subchannel_budget = 0;

  int types() const { return static_cast<int>(weights.size()); }
  /// Most copies of one type that fit either budget alone.
  int max_count(int type) const;
  void validate() const;
};

struct KnapsackResult {
  int throughput = 0;
  std::vector<int> counts;  // copies per type
  long long cells_filled = 0;
};

/// Dynamic program over (types considered, annotator budget, sub-channel
/// budget). Layer one is the closed form min(k/K_1, l/L_1); each later layer
/// maximizes over how many copies of its type to add. Counts are recovered
/// by walking the layers back down, preferring fewer copies of later types.
KnapsackResult knapsack_dp(const KnapsackInstance& inst);

struct MergedTreeResult {
  int throughput = 0;
  std::vector<int> types;  // witness multiset, non-decreasing
  long long nodes_created = 0;
  std::vector<long long> level_widths;  // nodes created per level
};

/// Tree search over multisets: with interchangeable clusters, all orderings
/// of the same type bag cost the same, so level m enumerates the
/// C(N+m-1, m) non-decreasing sequences instead of all N^m paths. Nodes over
/// budget are deleted; the search stops at the first empty level or once
/// `max_objects` are placed.
MergedTreeResult merged_tree_bb(const KnapsackInstance& inst, int max_objects);

/// All size-`level` multisets over types {1..types} as non-decreasing
/// sequences in lexicographic order; exactly C(types+level-1, level) of them.
std::vector<std::vector<int>> enumerate_level(int level, int types);

struct TciPolicyResult {
  int throughput = 0;
  std::vector<int> counts;
};

/// True when the annotator budget covers the largest single-type demand
/// K_n * floor(L / L_n); only spectrum binds.
bool tci_spectrum_constrained(const KnapsackInstance& inst);
/// True when the sub-channel budget covers the largest single-type demand
/// L_n * floor(K / K_n); only annotators bind.
bool tci_annotator_constrained(const KnapsackInstance& inst);

/// Closed form for the spectrum-constrained regime: stack the last type,
/// throughput floor(L / L_N). Throws when the criterion fails.
TciPolicyResult tci_spectrum_policy(const KnapsackInstance& inst);
/// Closed form for the annotator-constrained regime: stack the first type,
/// throughput floor(K / K_1). Throws when the criterion fails.
TciPolicyResult tci_annotator_policy(const KnapsackInstance& inst);

}  // namespace jasa

#endif  // JASA_TCI_HPP
