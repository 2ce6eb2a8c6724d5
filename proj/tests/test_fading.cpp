#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "fading.hpp"
#include "instances.hpp"
#include "labelling.hpp"
#include "oracle.hpp"
#include "rng.hpp"
#include "test_support.hpp"

using namespace jasa;
using testsupport::tree_fixture;

TEST_CASE("sequential clustering carves sorted prefixes") {
  const ChannelRealization ch = draw_rayleigh(6, 3);

  const auto plan = sequential_clustering({3, 1}, ch);
  REQUIRE(plan.size() == 2);
  CHECK(plan[0].first == 1);
  CHECK(plan[0].last == 3);
  CHECK(plan[1].first == 4);
  CHECK(plan[1].last == 4);

  CHECK(sequential_clustering({}, ch).empty());
  CHECK_THROWS_AS(sequential_clustering({4, 3}, ch), std::invalid_argument);
}

TEST_CASE("cluster worst SNR is the last annotator of its prefix") {
  ChannelRealization ch;
  ch.gains = {4.0, 3.0, 2.0, 1.0};
  ch.order = {0, 1, 2, 3};
  const auto plan = sequential_clustering({2, 2}, ch);
  CHECK(ch.snr(plan[0].last) == doctest::Approx(3.0));
  CHECK(ch.snr(plan[1].last) == doctest::Approx(1.0));
}

TEST_CASE("channel-derived edge costs never improve deeper in the channel") {
  SplitMix64 rng(20241003);
  for (int it = 0; it < 40; ++it) {
    const RandomFadingInstance inst = random_fading_instance(rng.next());
    const FadingProblem problem(inst.scenario, inst.ladder, inst.channel);
    for (int type = 1; type <= inst.ladder.types(); ++type) {
      int prev = 0;
      for (int used = 0;; ++used) {
        const auto cost = problem.costs().edge(used, type);
        if (!cost) break;
        CHECK(cost->annotators == problem.cluster_sizes()[type - 1]);
        CHECK(cost->subchannels >= prev);
        prev = cost->subchannels;
      }
    }
  }
}

TEST_CASE("canned instance: known optimum, path and node numbering") {
  const auto fixture = tree_fixture();
  const TreeSearchReport report = solve_fading(fixture.scenario, fixture.costs);

  CHECK(report.solution.throughput == 2);
  REQUIRE(report.solution.node_path.size() == 2);
  CHECK(report.solution.node_path[0] == 1);
  CHECK(report.solution.node_path[1] == 1);
  REQUIRE(report.solution.clusters.size() == 2);
  CHECK(report.solution.clusters[0].type == 1);
  CHECK(report.solution.clusters[1].type == 1);
  CHECK(report.solution.annotators_used == 6);
  CHECK(report.solution.subchannels_used == 2);
  // Levels create 2, then 4 children; level 3 adds 2 more before dying out.
  CHECK(report.nodes_created == 8);
}

TEST_CASE("zero budgets kill the first level") {
  auto fixture = tree_fixture();
  fixture.scenario.annotator_budget = 0;
  CHECK(solve_fading(fixture.scenario, fixture.costs).solution.throughput == 0);
  fixture.scenario.annotator_budget = 6;
  fixture.scenario.subchannel_budget = 0;
  CHECK(solve_fading(fixture.scenario, fixture.costs).solution.throughput == 0);
}

TEST_CASE("tree search matches exhaustive enumeration on random instances") {
  for (int i = 0; i < 60; ++i) {
    const RandomFadingInstance inst = random_fading_instance(5000 + i);
    const FadingProblem problem(inst.scenario, inst.ladder, inst.channel);
    const TreeSearchReport report = problem.solve();
    const OracleReport brute = exhaustive_search(inst.scenario, problem.costs());
    CHECK(report.solution.throughput == brute.optimum);
    CHECK(report.solution.throughput <= brute.optimum);  // oracle dominance
  }
}

TEST_CASE("returned solutions satisfy the full feasibility contract") {
  for (int i = 0; i < 60; ++i) {
    const RandomFadingInstance inst = random_fading_instance(7000 + i);
    const FadingProblem problem(inst.scenario, inst.ladder, inst.channel);
    const Solution sol = problem.solve().solution;
    CHECK(testsupport::feasible(sol, inst.scenario, inst.ladder, inst.channel,
                                problem.cluster_sizes()));
  }
}

TEST_CASE("witness ties break toward the lexicographically smallest types") {
  // Two types with identical costs everywhere: every sequence of a given
  // length is optimal, so the all-type-1 path must be reported.
  Scenario scen;
  scen.objects = 3;
  scen.object_bits = 10;
  scen.target_rlep = 0.1;
  scen.annotator_budget = 4;
  scen.subchannel_budget = 100;
  scen.subchannel_bandwidth_hz = 3.0;
  scen.duration_s = 1.0;
  std::map<std::pair<int, int>, EdgeCost> table;
  for (int used = 0; used <= 3; ++used)
    for (int type = 1; type <= 2; ++type) table[{used, type}] = {1, 1};
  const TableEdgeCosts costs(2, std::move(table));
  const Solution sol = solve_fading(scen, costs).solution;
  REQUIRE(sol.throughput == 3);
  for (const ClusterSpec& c : sol.clusters) CHECK(c.type == 1);
}

TEST_CASE("throughput is monotone in both budgets and the accuracy target") {
  SplitMix64 rng(20241001);
  for (int i = 0; i < 40; ++i) {
    const RandomFadingInstance inst = random_fading_instance(9000 + i);
    const FadingProblem base(inst.scenario, inst.ladder, inst.channel);
    const int value = base.solve().solution.throughput;

    Scenario more_subch = inst.scenario;
    more_subch.subchannel_budget += rng.next_int(1, 4);
    CHECK(FadingProblem(more_subch, inst.ladder, inst.channel).solve().solution.throughput >=
          value);

    Scenario more_annot = inst.scenario;
    more_annot.annotator_budget += rng.next_int(1, 4);
    // Same stream, more annotators: the original draws stay in the pool.
    const ChannelRealization wider =
        draw_rayleigh(more_annot.annotator_budget, inst.channel_seed);
    CHECK(FadingProblem(more_annot, inst.ladder, wider).solve().solution.throughput >= value);

    Scenario looser = inst.scenario;
    looser.target_rlep = std::min(0.99, looser.target_rlep * 1.6);
    CHECK(FadingProblem(looser, inst.ladder, inst.channel).solve().solution.throughput >= value);
  }
}

TEST_CASE("node expansions respect the geometric envelope") {
  for (int i = 0; i < 40; ++i) {
    const RandomFadingInstance inst = random_fading_instance(11000 + i);
    const FadingProblem problem(inst.scenario, inst.ladder, inst.channel);
    const TreeSearchReport report = problem.solve();
    long long envelope = 0, power = 1;
    for (int m = 1; m <= report.solution.throughput + 1; ++m) {
      power *= inst.ladder.types();
      envelope += power;
    }
    CHECK(report.nodes_created <= envelope);
  }
}

TEST_CASE("dominance pruning never changes the optimum") {
  for (int i = 0; i < 60; ++i) {
    const RandomFadingInstance inst = random_fading_instance(13000 + i);
    const FadingProblem problem(inst.scenario, inst.ladder, inst.channel);
    const TreeSearchReport plain = problem.solve();
    TreeSearchOptions options;
    options.dominance_pruning = true;
    const TreeSearchReport pruned = problem.solve(options);
    CHECK(plain.solution.throughput == pruned.solution.throughput);
    CHECK(pruned.nodes_created <= plain.nodes_created);
  }
}

namespace {

RandomFadingInstance constrained_instance(std::uint64_t seed, bool spectrum) {
  SplitMix64 rng(SplitMix64::mix(seed));
  for (;;) {
    RandomFadingInstance inst = random_fading_instance(rng.next());
    Scenario& scen = inst.scenario;
    if (spectrum) {
      scen.subchannel_budget = rng.next_int(1, 4);
      scen.annotator_budget = rng.next_int(50, 400);
    } else {
      scen.annotator_budget = rng.next_int(2, 12);
      scen.subchannel_budget = rng.next_int(50, 400);
    }
    ChannelRealization ch = draw_rayleigh(scen.annotator_budget, rng.next());
    scen.objects = scen.subchannel_budget + scen.annotator_budget + 1;
    const FadingProblem problem(scen, inst.ladder, ch);
    const bool ok = spectrum ? problem.spectrum_constrained() : problem.annotator_constrained();
    // Keep searches small: require every type to need at least 2 annotators
    // when the annotator budget is the loose one.
    bool sizes_ok = true;
    if (spectrum)
      sizes_ok = true;
    else
      for (int s : problem.cluster_sizes()) sizes_ok = sizes_ok && s >= 2;
    if (ok && sizes_ok) return RandomFadingInstance{scen, inst.ladder, std::move(ch)};
  }
}

}  // namespace

namespace {

Scenario reference_scenario(int objects, int annotators, int subchannels) {
  Scenario scen;
  scen.objects = objects;
  scen.object_bits = 10;
  scen.target_rlep = 0.1;
  scen.annotator_budget = annotators;
  scen.subchannel_budget = subchannels;
  scen.subchannel_bandwidth_hz = 3.0;
  scen.duration_s = 1.0;
  return scen;
}

RateLadder reference_ladder() {
  return RateLadder({{0.5 * std::log2(3.0), 0.10}, {0.5, 0.15}, {0.5 * std::log2(1.5), 0.20}});
}

ChannelRealization channel_from_gains(std::vector<double> gains) {
  ChannelRealization ch;
  ch.order.resize(gains.size());
  std::iota(ch.order.begin(), ch.order.end(), 0);
  ch.gains = std::move(gains);
  return ch;
}

}  // namespace

TEST_CASE("spectrum criterion threshold at the reference ladder") {
  // Best SNR 1 prices the types at {3, 2, 1} sub-channels, sizes are
  // {5, 7, 11}; with 12 sub-channels the largest single-type demand is
  // 11 * floor(12/1) = 132 annotators.
  for (int annotators : {132, 131}) {
    std::vector<double> gains(annotators, 0.9);
    gains[0] = 1.0;
    const FadingProblem problem(reference_scenario(3, annotators, 12), reference_ladder(),
                                channel_from_gains(std::move(gains)));
    REQUIRE(problem.cluster_sizes() == std::vector<int>{5, 7, 11});
    CHECK(problem.min_subchannels(1) == 3);
    CHECK(problem.min_subchannels(2) == 2);
    CHECK(problem.min_subchannels(3) == 1);
    CHECK(problem.spectrum_constrained() == (annotators == 132));
  }
  // No spectrum at all: the threshold collapses and the criterion holds.
  const FadingProblem dry(reference_scenario(3, 1, 0), reference_ladder(),
                          channel_from_gains({1.0}));
  CHECK(dry.spectrum_constrained());
}

TEST_CASE("annotator criterion threshold at the reference ladder") {
  // Worst SNR 2^0.35 - 1 prices the types at {8, 5, 3} sub-channels; with
  // 10 annotators the largest single-type demand is 8 * floor(10/5) = 16.
  std::vector<double> gains(10, 1.0);
  gains[9] = std::pow(2.0, 0.35) - 1.0;
  for (int subchannels : {16, 15}) {
    const FadingProblem problem(reference_scenario(3, 10, subchannels), reference_ladder(),
                                channel_from_gains(gains));
    CHECK(problem.max_subchannels(1) == 8);
    CHECK(problem.max_subchannels(2) == 5);
    CHECK(problem.max_subchannels(3) == 3);
    CHECK(problem.annotator_constrained() == (subchannels == 16));
  }
}

TEST_CASE("equal channels collapse the spectrum-policy bounds") {
  // Flat gains make best and worst costs coincide, so the policy's bounds
  // pinch onto the optimum.
  const FadingProblem problem(reference_scenario(13, 200, 12), reference_ladder(),
                              channel_from_gains(std::vector<double>(200, 1.0)));
  REQUIRE(problem.spectrum_constrained());
  const PolicyBounds policy = problem.spectrum_policy();
  CHECK(policy.lower == policy.upper);
  CHECK(policy.solution.throughput == policy.lower);
  CHECK(policy.solution.throughput == problem.solve().solution.throughput);
}

TEST_CASE("spectrum-constrained policy matches the exact search with bounds") {
  for (int i = 0; i < 25; ++i) {
    const RandomFadingInstance inst = constrained_instance(21000 + i, true);
    const FadingProblem problem(inst.scenario, inst.ladder, inst.channel);
    REQUIRE(problem.spectrum_constrained());
    const PolicyBounds policy = problem.spectrum_policy();
    const int exact = problem.solve().solution.throughput;
    CHECK(policy.solution.throughput == exact);
    CHECK(policy.lower <= exact);
    CHECK(exact <= policy.upper);
    for (const ClusterSpec& c : policy.solution.clusters) CHECK(c.type == inst.ladder.types());
  }
}

TEST_CASE("annotator-constrained policy matches the exact search") {
  for (int i = 0; i < 25; ++i) {
    const RandomFadingInstance inst = constrained_instance(23000 + i, false);
    const FadingProblem problem(inst.scenario, inst.ladder, inst.channel);
    REQUIRE(problem.annotator_constrained());
    const Solution policy = problem.annotator_policy();
    CHECK(policy.throughput == problem.solve().solution.throughput);
    CHECK(policy.throughput ==
          inst.scenario.annotator_budget / problem.cluster_sizes().front());
    for (const ClusterSpec& c : policy.clusters) CHECK(c.type == 1);
  }
}

TEST_CASE("policies refuse instances outside their regime") {
  for (int i = 0; i < 200; ++i) {
    const RandomFadingInstance inst = random_fading_instance(25000 + i);
    const FadingProblem problem(inst.scenario, inst.ladder, inst.channel);
    if (!problem.spectrum_constrained()) {
      CHECK_THROWS_AS(problem.spectrum_policy(), std::invalid_argument);
      break;
    }
  }
  for (int i = 0; i < 200; ++i) {
    const RandomFadingInstance inst = random_fading_instance(26000 + i);
    const FadingProblem problem(inst.scenario, inst.ladder, inst.channel);
    if (!problem.annotator_constrained()) {
      CHECK_THROWS_AS(problem.annotator_policy(), std::invalid_argument);
      break;
    }
  }
}

TEST_CASE("exact-odd sizing rounds derived clusters up to odd") {
  Scenario scen;
  scen.objects = 2;
  scen.object_bits = 10;
  scen.target_rlep = 0.1;
  scen.annotator_budget = 12;
  scen.subchannel_budget = 12;
  scen.subchannel_bandwidth_hz = 3.0;
  scen.duration_s = 1.0;
  // At this target an error rate of 0.12 needs six annotators, an even count
  // the majority vote cannot certify.
  const RateLadder ladder({{0.8, 0.1}, {0.4, 0.12}});
  REQUIRE(cluster_size(0.12, 0.1) == 6);
  const ChannelRealization ch = draw_rayleigh(12, 31);

  const FadingProblem plain(scen, ladder, ch);
  CHECK(plain.cluster_sizes() == std::vector<int>{5, 6});
  const FadingProblem odd(scen, ladder, ch, {}, /*exact_odd_sizes=*/true);
  CHECK(odd.cluster_sizes() == std::vector<int>{5, 7});
  for (std::size_t n = 0; n < odd.cluster_sizes().size(); ++n)
    CHECK(exact_rlep(ladder.error_prob(n + 1), odd.cluster_sizes()[n]) <= scen.target_rlep);

  const FadingProblem overridden(scen, ladder, ch, {2, 3});
  CHECK(overridden.cluster_sizes() == std::vector<int>{2, 3});
  CHECK_THROWS_AS(FadingProblem(scen, ladder, ch, {2}), std::invalid_argument);
}

TEST_CASE("single-type plans never beat the search and replay the canned case") {
  const auto fixture = tree_fixture();
  CHECK(greedy_fixed_type(fixture.scenario, fixture.costs, 1).throughput == 2);

  for (int i = 0; i < 40; ++i) {
    const RandomFadingInstance inst = random_fading_instance(27000 + i);
    const FadingProblem problem(inst.scenario, inst.ladder, inst.channel);
    const int exact = problem.solve().solution.throughput;
    for (int type = 1; type <= inst.ladder.types(); ++type)
      CHECK(problem.fixed_type(type).throughput <= exact);
  }
}

TEST_CASE("sorted-prefix partitions are never beaten, small exchange check") {
  Scenario scen;
  scen.objects = 2;
  scen.object_bits = 10;
  scen.target_rlep = 0.1;
  scen.annotator_budget = 8;
  scen.subchannel_budget = 100;
  scen.subchannel_bandwidth_hz = 3.0;
  scen.duration_s = 1.0;

  SplitMix64 rng(20241002);
  for (int it = 0; it < 100; ++it) {
    const int count = rng.next_int(2, 8);
    const ChannelRealization ch = draw_rayleigh(count, rng.next());
    const int size_a = rng.next_int(1, count - 1);
    const int size_b = rng.next_int(1, count - size_a);
    const double rate_a = rng.next_range(0.05, 1.0);
    const double rate_b = rng.next_range(0.05, 1.0);

    auto sequential_cost = [&](int first_size, double first_rate, int second_size,
                               double second_rate) {
      return subchannels_needed(first_rate, scen, ch.snr(first_size)) +
             subchannels_needed(second_rate, scen, ch.snr(first_size + second_size));
    };
    const int best_sequential = std::min(sequential_cost(size_a, rate_a, size_b, rate_b),
                                         sequential_cost(size_b, rate_b, size_a, rate_a));
    const int oracle =
        partition_oracle({{size_a, rate_a}, {size_b, rate_b}}, scen, ch);
    CHECK(best_sequential == oracle);
  }
}
