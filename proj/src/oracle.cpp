#include "oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "link.hpp"
#include "rng.hpp"

namespace jasa {

namespace {

struct PrefixSearch {
  const Scenario* scen;
  const EdgeCostProvider* costs;
  OracleReport report;
  std::vector<int> stack;

  void visit(int annotators, int subchannels) {
    ++report.states_examined;
    if (static_cast<int>(stack.size()) > report.optimum) {
      report.optimum = static_cast<int>(stack.size());
      report.witness = stack;
    }
    if (static_cast<int>(stack.size()) == scen->objects) return;
    for (int type = 1; type <= costs->types(); ++type) {
      const auto cost = costs->edge(annotators, type);
      if (!cost) continue;
      if (cost->annotators > scen->annotator_budget - annotators ||
          cost->subchannels > scen->subchannel_budget - subchannels)
        continue;
      stack.push_back(type);
      visit(annotators + cost->annotators, subchannels + cost->subchannels);
      stack.pop_back();
    }
  }
};

}  // namespace

OracleReport exhaustive_search(const Scenario& scen, const EdgeCostProvider& costs) {
  scen.validate();
  if (scen.objects > 6 || costs.types() > 3)
    throw guard_error("exhaustive search refused: instance too large to enumerate");

  PrefixSearch search{&scen, &costs, {}, {}};
  search.visit(0, 0);
  // The tree is visited ascending-type first, so the stored witness is the
  // lexicographically smallest among maximum-length sequences.
  return std::move(search.report);
}

OracleReport exhaustive_counts(const KnapsackInstance& inst) {
  inst.validate();
  if (inst.types() > 3) throw guard_error("count enumeration refused: too many types");
  long long combos = 1;
  for (int t = 1; t <= inst.types(); ++t) {
    combos *= inst.max_count(t) + 1;
    if (combos > 20'000'000)
      throw guard_error("count enumeration refused: cap product too large");
  }

  OracleReport report;
  std::vector<int> counts(inst.types(), 0);
  auto scan = [&](auto&& self, int type, int annotators, int subchannels, int total) -> void {
    if (type > inst.types()) {
      ++report.states_examined;
      if (total > report.optimum) {
        report.optimum = total;
        report.witness = counts;
      }
      return;
    }
    const EdgeCost& w = inst.weights[type - 1];
    for (int m = 0;; ++m) {
      const int ka = annotators + m * w.annotators;
      const int lb = subchannels + m * w.subchannels;
      if (ka > inst.annotator_budget || lb > inst.subchannel_budget) break;
      counts[type - 1] = m;
      self(self, type + 1, ka, lb, total + m);
    }
    counts[type - 1] = 0;
  };
  scan(scan, 1, 0, 0, 0);
  return report;
}

int partition_oracle(const std::vector<PartitionCluster>& clusters, const Scenario& scen,
                     const ChannelRealization& ch) {
  if (clusters.empty()) return 0;
  if (clusters.size() > 2) throw guard_error("partition reference handles at most two clusters");
  if (ch.annotators() > 8) throw guard_error("partition reference refused: too many annotators");
  int total = 0;
  for (const PartitionCluster& c : clusters) {
    if (c.size < 1) throw std::invalid_argument("cluster sizes must be positive");
    total += c.size;
  }
  if (total > ch.annotators())
    throw std::invalid_argument("cluster sizes exceed the annotator count");

  const int count = ch.annotators();
  auto cost_of = [&](unsigned mask, double rate) {
    double worst = 0.0;
    bool first = true;
    for (int k = 1; k <= count; ++k) {
      if (!(mask >> (k - 1) & 1u)) continue;
      if (first || ch.snr(k) < worst) worst = ch.snr(k);
      first = false;
    }
    return subchannels_needed(rate, scen, worst);
  };

  int best = -1;
  std::vector<std::pair<int, double>> assign = {{clusters[0].size, clusters[0].rate}};
  if (clusters.size() == 2) assign.push_back({clusters[1].size, clusters[1].rate});

  // Both pairings of sizes with rates, all disjoint subset pairs of each size.
  for (int order = 0; order < (clusters.size() == 2 ? 2 : 1); ++order) {
    const auto [size_a, rate_a] = assign[order];
    const auto [size_b, rate_b] =
        clusters.size() == 2 ? assign[1 - order] : std::pair<int, double>{0, 0.0};
    for (unsigned mask_a = 0; mask_a < (1u << count); ++mask_a) {
      if (__builtin_popcount(mask_a) != size_a) continue;
      const int cost_a = cost_of(mask_a, rate_a);
      if (size_b == 0) {
        if (best < 0 || cost_a < best) best = cost_a;
        continue;
      }
      for (unsigned mask_b = 0; mask_b < (1u << count); ++mask_b) {
        if (mask_a & mask_b) continue;
        if (__builtin_popcount(mask_b) != size_b) continue;
        const int cost = cost_a + cost_of(mask_b, rate_b);
        if (best < 0 || cost < best) best = cost;
      }
    }
  }
  return best;
}

double simulate_votes(double error_prob, int size, long long trials, std::uint64_t seed) {
  if (size < 1 || size % 2 == 0)
    throw std::invalid_argument("majority-vote cluster size must be odd and positive");
  if (trials < 1) throw std::invalid_argument("need at least one trial");
  if (error_prob < 0.0 || error_prob > 1.0)
    throw std::invalid_argument("error probability must lie in [0, 1]");

  SplitMix64 rng(seed);
  long long wrong = 0;
  const int threshold = (size + 1) / 2;
  for (long long t = 0; t < trials; ++t) {
    int mistakes = 0;
    for (int v = 0; v < size; ++v) mistakes += rng.next_bernoulli(error_prob);
    wrong += mistakes >= threshold;
  }
  return static_cast<double>(wrong) / static_cast<double>(trials);
}

}  // namespace jasa
