#include "tci.hpp"

#include <algorithm>
#include <stdexcept>

namespace jasa {

int KnapsackInstance::max_count(int type) const {
  const EdgeCost& w = weights.at(type - 1);
  return std::min(annotator_budget / w.annotators, subchannel_budget / w.subchannels);
}

void KnapsackInstance::validate() const {
  if (weights.empty()) throw std::invalid_argument("knapsack needs at least one cluster type");
  for (const EdgeCost& w : weights)
    if (w.annotators < 1 || w.subchannels < 1)
      throw std::invalid_argument("cluster weights must be positive");
  if (annotator_budget < 0 || subchannel_budget < 0)
    throw std::invalid_argument("budgets must be non-negative");
}

KnapsackResult knapsack_dp(const KnapsackInstance& inst) {
  inst.validate();
  const int n_types = inst.types();
  const int ka = inst.annotator_budget;
  const int lb = inst.subchannel_budget;
  const std::size_t plane = static_cast<std::size_t>(ka + 1) * (lb + 1);

  // Layer t holds the optimum using only types 1..t; all layers are kept so
  // the chosen copy counts can be walked back without extra pointers.
  std::vector<std::vector<int>> table(n_types + 1, std::vector<int>(plane, 0));
  auto at = [lb](std::vector<int>& layer, int k, int l) -> int& {
    return layer[static_cast<std::size_t>(k) * (lb + 1) + l];
  };

  KnapsackResult result;
  for (int t = 1; t <= n_types; ++t) {
    const int wk = inst.weights[t - 1].annotators;
    const int wl = inst.weights[t - 1].subchannels;
    for (int k = 0; k <= ka; ++k) {
      for (int l = 0; l <= lb; ++l) {
        ++result.cells_filled;
        if (t == 1) {
          at(table[1], k, l) = std::min(k / wk, l / wl);
          continue;
        }
        int best = at(table[t - 1], k, l);
        const int cap = std::min(k / wk, l / wl);
        for (int m = 1; m <= cap; ++m)
          best = std::max(best, at(table[t - 1], k - m * wk, l - m * wl) + m);
        at(table[t], k, l) = best;
      }
    }
  }

  result.throughput = at(table[n_types], ka, lb);
  result.counts.assign(n_types, 0);
  int k = ka, l = lb;
  for (int t = n_types; t >= 2; --t) {
    const int wk = inst.weights[t - 1].annotators;
    const int wl = inst.weights[t - 1].subchannels;
    const int cap = std::min(k / wk, l / wl);
    for (int m = 0; m <= cap; ++m) {
      if (at(table[t - 1], k - m * wk, l - m * wl) + m == at(table[t], k, l)) {
        result.counts[t - 1] = m;
        k -= m * wk;
        l -= m * wl;
        break;
      }
    }
  }
  result.counts[0] = at(table[1], k, l);
  return result;
}

std::vector<std::vector<int>> enumerate_level(int level, int types) {
  if (level < 0 || types < 1) throw std::invalid_argument("invalid level enumeration request");
  std::vector<std::vector<int>> out;
  std::vector<int> seq;
  // Depth-first with a non-decreasing successor rule emits lexicographic order.
  auto emit = [&](auto&& self, int lowest) -> void {
    if (static_cast<int>(seq.size()) == level) {
      out.push_back(seq);
      return;
    }
    for (int t = lowest; t <= types; ++t) {
      seq.push_back(t);
      self(self, t);
      seq.pop_back();
    }
  };
  emit(emit, 1);
  return out;
}

namespace {

struct BagNode {
  int annotators;
  int subchannels;
  int last_type;
  int parent;
};

}  // namespace

MergedTreeResult merged_tree_bb(const KnapsackInstance& inst, int max_objects) {
  inst.validate();
  if (max_objects < 0) throw std::invalid_argument("object count must be non-negative");

  MergedTreeResult result;
  std::vector<std::vector<BagNode>> levels;
  std::vector<BagNode> current = {BagNode{0, 0, 1, -1}};

  for (int m = 1; m <= max_objects; ++m) {
    std::vector<BagNode> next;
    long long created = 0;
    for (int s = 0; s < static_cast<int>(current.size()); ++s) {
      // Only extensions by types >= the last one keep the bag sequence
      // non-decreasing; every other ordering of the same bag is an identical
      // edge already covered by this one.
      for (int type = current[s].last_type; type <= inst.types(); ++type) {
        ++created;
        if (inst.weights[type - 1].annotators > inst.annotator_budget - current[s].annotators ||
            inst.weights[type - 1].subchannels > inst.subchannel_budget - current[s].subchannels)
          continue;
        next.push_back(BagNode{current[s].annotators + inst.weights[type - 1].annotators,
                               current[s].subchannels + inst.weights[type - 1].subchannels, type,
                               s});
      }
    }
    result.nodes_created += created;
    result.level_widths.push_back(created);
    if (next.empty()) break;
    levels.push_back(next);
    current = std::move(next);
  }

  result.throughput = static_cast<int>(levels.size());
  if (result.throughput > 0) {
    int at = 0;
    std::vector<int> types(result.throughput);
    for (int m = result.throughput; m-- > 0;) {
      types[m] = levels[m][at].last_type;
      at = levels[m][at].parent;
    }
    result.types = std::move(types);
  }
  return result;
}

bool tci_spectrum_constrained(const KnapsackInstance& inst) {
  long long demand = 0;
  for (int t = 1; t <= inst.types(); ++t)
    demand = std::max(demand, static_cast<long long>(inst.weights[t - 1].annotators) *
                                  (inst.subchannel_budget / inst.weights[t - 1].subchannels));
  return inst.annotator_budget >= demand;
}

bool tci_annotator_constrained(const KnapsackInstance& inst) {
  long long demand = 0;
  for (int t = 1; t <= inst.types(); ++t)
    demand = std::max(demand, static_cast<long long>(inst.weights[t - 1].subchannels) *
                                  (inst.annotator_budget / inst.weights[t - 1].annotators));
  return inst.subchannel_budget >= demand;
}

namespace {

// The closed forms lean on the rate ladder's shape: later types trade more
// annotators for less spectrum. Arbitrary weight tables void them.
void require_ladder_shape(const KnapsackInstance& inst) {
  for (int t = 2; t <= inst.types(); ++t) {
    if (inst.weights[t - 1].annotators < inst.weights[t - 2].annotators ||
        inst.weights[t - 1].subchannels > inst.weights[t - 2].subchannels)
      throw std::invalid_argument(
          "closed-form policies need ladder-shaped weights (annotators up, sub-channels down)");
  }
}

}  // namespace

TciPolicyResult tci_spectrum_policy(const KnapsackInstance& inst) {
  inst.validate();
  require_ladder_shape(inst);
  if (!tci_spectrum_constrained(inst))
    throw std::invalid_argument("spectrum policy requires the spectrum-constrained criterion");
  TciPolicyResult result;
  result.counts.assign(inst.types(), 0);
  result.throughput = inst.subchannel_budget / inst.weights.back().subchannels;
  result.counts.back() = result.throughput;
  return result;
}

TciPolicyResult tci_annotator_policy(const KnapsackInstance& inst) {
  inst.validate();
  require_ladder_shape(inst);
  if (!tci_annotator_constrained(inst))
    throw std::invalid_argument("annotator policy requires the annotator-constrained criterion");
  TciPolicyResult result;
  result.counts.assign(inst.types(), 0);
  result.throughput = inst.annotator_budget / inst.weights.front().annotators;
  result.counts.front() = result.throughput;
  return result;
}

}  // namespace jasa
