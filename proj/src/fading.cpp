#include "fading.hpp"

#include <algorithm>
#include <stdexcept>

#include "labelling.hpp"
#include "link.hpp"

namespace jasa {

ChannelEdgeCosts::ChannelEdgeCosts(const Scenario& scen, const RateLadder& ladder,
                                   const ChannelRealization& ch, std::vector<int> cluster_sizes)
    : scen_(scen), sizes_(std::move(cluster_sizes)), channel_(&ch) {
  if (static_cast<int>(sizes_.size()) != ladder.types())
    throw std::invalid_argument("one cluster size per ladder type required");
  for (int s : sizes_)
    if (s < 1) throw std::invalid_argument("cluster sizes must be positive");
  rates_.reserve(ladder.types());
  for (int n = 1; n <= ladder.types(); ++n) rates_.push_back(ladder.rate(n));
}

std::optional<EdgeCost> ChannelEdgeCosts::edge(int annotators_used, int type) const {
  const int size = sizes_.at(type - 1);
  const int worst = annotators_used + size;
  if (worst > channel_->annotators()) return std::nullopt;
  return EdgeCost{size, subchannels_needed(rates_[type - 1], scen_, channel_->snr(worst))};
}

std::optional<EdgeCost> TableEdgeCosts::edge(int annotators_used, int type) const {
  const auto it = table_.find({annotators_used, type});
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

namespace {

struct Node {
  int annotators;    // cumulative
  int subchannels;   // cumulative
  int parent;        // index into previous level's survivor list
  int type;          // edge taken into this node
  int index;         // 1-based creation order within the level
};

}  // namespace

TreeSearchReport solve_fading(const Scenario& scen, const EdgeCostProvider& costs,
                              const TreeSearchOptions& options) {
  scen.validate();

  TreeSearchReport report;
  std::vector<std::vector<Node>> levels;  // survivors per level
  std::vector<Node> current = {Node{0, 0, -1, 0, 1}};

  for (int m = 1; m <= scen.objects; ++m) {
    std::vector<Node> next;
    int created = 0;
    for (int s = 0; s < static_cast<int>(current.size()); ++s) {
      for (int type = 1; type <= costs.types(); ++type) {
        const auto cost = costs.edge(current[s].annotators, type);
        if (!cost) continue;
        ++created;
        ++report.nodes_created;
        // Subtraction form: cumulative sums of surviving nodes cannot overflow.
        if (cost->annotators > scen.annotator_budget - current[s].annotators ||
            cost->subchannels > scen.subchannel_budget - current[s].subchannels)
          continue;
        next.push_back(Node{current[s].annotators + cost->annotators,
                            current[s].subchannels + cost->subchannels, s, type, created});
      }
    }
    if (options.dominance_pruning) {
      // A node beaten (weakly) on both cumulative budgets by an earlier node
      // cannot head a longer path; keeping the earlier node preserves both the
      // optimum and the lexicographic tie-break.
      std::vector<Node> kept;
      for (const Node& cand : next) {
        bool dominated = false;
        for (const Node& other : kept) {
          if (other.annotators <= cand.annotators && other.subchannels <= cand.subchannels) {
            dominated = true;
            break;
          }
        }
        if (!dominated) kept.push_back(cand);
      }
      next = std::move(kept);
    }
    if (next.empty()) break;
    levels.push_back(next);
    current = std::move(next);
  }

  Solution& sol = report.solution;
  sol.throughput = static_cast<int>(levels.size());
  if (sol.throughput == 0) return report;

  // Nodes are created parent-major and type-minor, so the first survivor of
  // the deepest level heads the lexicographically smallest optimal sequence.
  std::vector<const Node*> path(sol.throughput);
  int at = 0;
  for (int m = sol.throughput; m-- > 0;) {
    path[m] = &levels[m][at];
    at = path[m]->parent;
  }

  int annots = 0, subch = 0;
  for (const Node* node : path) {
    ClusterSpec cluster;
    cluster.type = node->type;
    cluster.first = annots + 1;
    cluster.last = node->annotators;
    cluster.subchannels = node->subchannels - subch;
    sol.node_path.push_back(node->index);
    sol.clusters.push_back(cluster);
    annots = node->annotators;
    subch = node->subchannels;
  }
  sol.annotators_used = path.back()->annotators;
  sol.subchannels_used = path.back()->subchannels;
  return report;
}

std::vector<ClusterSpec> sequential_clustering(const std::vector<int>& sizes,
                                               const ChannelRealization& ch) {
  int total = 0;
  for (int s : sizes) {
    if (s < 1) throw std::invalid_argument("cluster sizes must be positive");
    total += s;
  }
  if (total > ch.annotators())
    throw std::invalid_argument("cluster sizes exceed the annotator budget");

  std::vector<ClusterSpec> clusters;
  clusters.reserve(sizes.size());
  int next_first = 1;
  for (int s : sizes) {
    ClusterSpec c;
    c.first = next_first;
    c.last = next_first + s - 1;
    next_first = c.last + 1;
    clusters.push_back(c);
  }
  return clusters;
}

FadingProblem::FadingProblem(Scenario scen, RateLadder ladder, ChannelRealization ch,
                             std::vector<int> cluster_size_override, bool exact_odd_sizes)
    : scen_(scen),
      ladder_(std::move(ladder)),
      ch_(std::move(ch)),
      costs_(scen_, ladder_, ch_, [&] {
        if (!cluster_size_override.empty()) {
          if (static_cast<int>(cluster_size_override.size()) != ladder_.types())
            throw std::invalid_argument("cluster size override must cover every ladder type");
          return cluster_size_override;
        }
        std::vector<int> sizes;
        for (int n = 1; n <= ladder_.types(); ++n)
          sizes.push_back(exact_odd_sizes ? cluster_size_odd(ladder_.error_prob(n), scen.target_rlep)
                                          : cluster_size(ladder_.error_prob(n), scen.target_rlep));
        return sizes;
      }()) {
  scen_.validate();
}

int FadingProblem::min_subchannels(int type) const {
  return subchannels_needed(ladder_.rate(type), scen_, ch_.best_snr());
}

int FadingProblem::max_subchannels(int type) const {
  return subchannels_needed(ladder_.rate(type), scen_, ch_.worst_snr());
}

TreeSearchReport FadingProblem::solve(const TreeSearchOptions& options) const {
  return solve_fading(scen_, costs_, options);
}

bool FadingProblem::spectrum_constrained() const {
  long long demand = 0;
  for (int n = 1; n <= ladder_.types(); ++n) {
    const long long d = static_cast<long long>(cluster_sizes()[n - 1]) *
                        (scen_.subchannel_budget / min_subchannels(n));
    demand = std::max(demand, d);
  }
  return scen_.annotator_budget >= demand;
}

bool FadingProblem::annotator_constrained() const {
  long long demand = 0;
  for (int n = 1; n <= ladder_.types(); ++n) {
    const long long d = static_cast<long long>(max_subchannels(n)) *
                        (scen_.annotator_budget / cluster_sizes()[n - 1]);
    demand = std::max(demand, d);
  }
  return scen_.subchannel_budget >= demand;
}

Solution greedy_fixed_type(const Scenario& scen, const EdgeCostProvider& costs, int type) {
  if (type < 1 || type > costs.types()) throw std::invalid_argument("no such cluster type");
  Solution sol;
  int annots = 0, subch = 0;
  while (sol.throughput < scen.objects) {
    const auto cost = costs.edge(annots, type);
    if (!cost) break;
    if (cost->annotators > scen.annotator_budget - annots ||
        cost->subchannels > scen.subchannel_budget - subch)
      break;
    ClusterSpec c;
    c.type = type;
    c.first = annots + 1;
    c.last = annots + cost->annotators;
    c.subchannels = cost->subchannels;
    annots += cost->annotators;
    subch += cost->subchannels;
    sol.clusters.push_back(c);
    ++sol.throughput;
  }
  sol.annotators_used = annots;
  sol.subchannels_used = subch;
  return sol;
}

Solution FadingProblem::greedy_single_type(int type) const {
  return greedy_fixed_type(scen_, costs_, type);
}

PolicyBounds FadingProblem::spectrum_policy() const {
  if (!spectrum_constrained())
    throw std::invalid_argument("spectrum policy requires the spectrum-constrained criterion");
  const int last = ladder_.types();
  PolicyBounds result;
  result.solution = greedy_single_type(last);
  result.lower = scen_.subchannel_budget / max_subchannels(last);
  result.upper = scen_.subchannel_budget / min_subchannels(last);
  return result;
}

Solution FadingProblem::annotator_policy() const {
  if (!annotator_constrained())
    throw std::invalid_argument("annotator policy requires the annotator-constrained criterion");
  return greedy_single_type(1);
}

Solution FadingProblem::fixed_type(int type) const { return greedy_single_type(type); }

}  // namespace jasa
