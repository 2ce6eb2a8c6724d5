#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>

#include "instances.hpp"
#include "oracle.hpp"
#include "tci.hpp"

using namespace jasa;

namespace {

KnapsackInstance make_instance(std::vector<EdgeCost> weights, int annotators, int subchannels) {
  KnapsackInstance inst;
  inst.weights = std::move(weights);
  inst.annotator_budget = annotators;
  inst.subchannel_budget = subchannels;
  return inst;
}

long long binomial(int n, int k) {
  long long value = 1;
  for (int i = 0; i < k; ++i) value = value * (n - i) / (i + 1);
  return value;
}

}  // namespace

TEST_CASE("single-type base case is the floor formula") {
  const auto inst = make_instance({{3, 1}}, 6, 3);
  const KnapsackResult dp = knapsack_dp(inst);
  CHECK(dp.throughput == 2);  // min(6/3, 3/1)
  CHECK(dp.counts == std::vector<int>{2});
}

TEST_CASE("two types, frozen small case") {
  const auto inst = make_instance({{1, 2}, {2, 1}}, 3, 3);
  const KnapsackResult dp = knapsack_dp(inst);
  CHECK(dp.throughput == 2);
  CHECK(dp.counts == std::vector<int>{1, 1});
}

TEST_CASE("empty budgets mean zero throughput") {
  CHECK(knapsack_dp(make_instance({{1, 1}, {2, 2}}, 0, 9)).throughput == 0);
  CHECK(knapsack_dp(make_instance({{1, 1}, {2, 2}}, 9, 0)).throughput == 0);
  CHECK(merged_tree_bb(make_instance({{1, 1}}, 0, 0), 5).throughput == 0);
}

TEST_CASE("counts reconstructed from the table achieve the optimum") {
  for (int i = 0; i < 150; ++i) {
    const KnapsackInstance inst = random_knapsack_instance(3000 + i);
    const KnapsackResult dp = knapsack_dp(inst);
    int total = 0, annots = 0, subch = 0;
    for (int t = 1; t <= inst.types(); ++t) {
      total += dp.counts[t - 1];
      annots += dp.counts[t - 1] * inst.weights[t - 1].annotators;
      subch += dp.counts[t - 1] * inst.weights[t - 1].subchannels;
    }
    CHECK(total == dp.throughput);
    CHECK(annots <= inst.annotator_budget);
    CHECK(subch <= inst.subchannel_budget);
  }
}

TEST_CASE("table layers are monotone and skip unprofitable types") {
  const auto inst = make_instance({{2, 2}, {100, 100}, {3, 1}}, 12, 12);
  const KnapsackResult dp = knapsack_dp(inst);
  CHECK(dp.counts[1] == 0);  // type 2 never fits

  // Recompute the layers and check monotonicity in every index.
  const int types = inst.types();
  std::vector<std::vector<std::vector<int>>> f(
      types + 1, std::vector<std::vector<int>>(13, std::vector<int>(13, 0)));
  for (int t = 1; t <= types; ++t)
    for (int k = 0; k <= 12; ++k)
      for (int l = 0; l <= 12; ++l) {
        const int wk = inst.weights[t - 1].annotators;
        const int wl = inst.weights[t - 1].subchannels;
        int best = t == 1 ? std::min(k / wk, l / wl) : f[t - 1][k][l];
        if (t > 1)
          for (int m = 1; m <= std::min(k / wk, l / wl); ++m)
            best = std::max(best, f[t - 1][k - m * wk][l - m * wl] + m);
        f[t][k][l] = best;
      }
  for (int t = 1; t <= types; ++t)
    for (int k = 0; k <= 12; ++k)
      for (int l = 0; l <= 12; ++l) {
        if (t > 1) CHECK(f[t][k][l] >= f[t - 1][k][l]);
        if (k > 0) CHECK(f[t][k][l] >= f[t][k - 1][l]);
        if (l > 0) CHECK(f[t][k][l] >= f[t][k][l - 1]);
      }
  // Type 2 is never profitable, so its layer copies the previous one.
  for (int k = 0; k <= 12; ++k)
    for (int l = 0; l <= 12; ++l) CHECK(f[2][k][l] == f[1][k][l]);
}

TEST_CASE("level enumeration is lexicographic with binomial counts") {
  const auto level2 = enumerate_level(2, 2);
  REQUIRE(level2.size() == 3);
  CHECK(level2[0] == std::vector<int>{1, 1});
  CHECK(level2[1] == std::vector<int>{1, 2});
  CHECK(level2[2] == std::vector<int>{2, 2});

  const auto level0 = enumerate_level(0, 3);
  REQUIRE(level0.size() == 1);
  CHECK(level0[0].empty());

  for (int types = 1; types <= 4; ++types)
    for (int level = 0; level <= 6; ++level) {
      const auto bags = enumerate_level(level, types);
      CHECK(static_cast<long long>(bags.size()) == binomial(types + level - 1, level));
      for (std::size_t i = 1; i < bags.size(); ++i) CHECK(bags[i - 1] < bags[i]);
      // The first bag stacks the first type, the last stacks the last, so
      // their cumulative weights are level multiples of those types' weights.
      CHECK(bags.front() == std::vector<int>(level, 1));
      CHECK(bags.back() == std::vector<int>(level, types));
    }
}

TEST_CASE("merged levels shrink the unmerged tree") {
  // Two types at depth two: three bags versus four ordered paths.
  CHECK(static_cast<long long>(std::pow(2, 2)) - binomial(2 + 2 - 1, 2) == 1);
}

TEST_CASE("first node of every level stacks the first type") {
  const auto inst = make_instance({{2, 3}, {3, 2}}, 100, 100);
  const MergedTreeResult tree = merged_tree_bb(inst, 6);
  // With generous budgets the lex-first witness is all type-1.
  for (int t : tree.types) CHECK(t == 1);
  // Unpruned level widths follow the multiset counts.
  for (std::size_t m = 1; m <= tree.level_widths.size(); ++m)
    CHECK(tree.level_widths[m - 1] == binomial(2 + static_cast<int>(m) - 1, static_cast<int>(m)));
}

TEST_CASE("merged tree agrees with the table and the enumeration") {
  for (int i = 0; i < 200; ++i) {
    const KnapsackInstance inst = random_knapsack_instance(40000 + i);
    const int cap = inst.annotator_budget + inst.subchannel_budget + 1;
    const int dp = knapsack_dp(inst).throughput;
    const MergedTreeResult tree = merged_tree_bb(inst, cap);
    const OracleReport brute = exhaustive_counts(inst);
    CHECK(dp == brute.optimum);
    CHECK(tree.throughput == brute.optimum);

    int annots = 0, subch = 0;
    int last = 0;
    for (int t : tree.types) {
      CHECK(t >= last);
      last = t;
      annots += inst.weights[t - 1].annotators;
      subch += inst.weights[t - 1].subchannels;
    }
    CHECK(annots <= inst.annotator_budget);
    CHECK(subch <= inst.subchannel_budget);
  }
}

TEST_CASE("object cap truncates the merged search") {
  const auto inst = make_instance({{1, 1}}, 50, 50);
  CHECK(merged_tree_bb(inst, 10).throughput == 10);
  CHECK(merged_tree_bb(inst, 0).throughput == 0);
  CHECK(knapsack_dp(inst).throughput == 50);
}

TEST_CASE("work counters land on the predicted side of the crossover") {
  // Few objects, huge budgets: bag enumeration beats filling the table.
  const auto wide = make_instance({{1, 1}, {1, 1}, {1, 1}}, 200, 200);
  const MergedTreeResult wide_tree = merged_tree_bb(wide, 3);
  const KnapsackResult wide_dp = knapsack_dp(wide);
  const double bound_small = std::pow((3.0 + 3 - 1) / 3 * std::exp(1.0), 3);
  CHECK(bound_small <= 3.0 * 200 * 200);
  CHECK(wide_tree.nodes_created < wide_dp.cells_filled);

  // Many objects, tight budgets: the table is the cheaper artifact.
  const auto tall = make_instance({{1, 1}, {1, 1}, {1, 1}}, 20, 20);
  const MergedTreeResult tall_tree = merged_tree_bb(tall, 20);
  const KnapsackResult tall_dp = knapsack_dp(tall);
  const double bound_large = std::pow((3.0 + 20 - 1) / 20 * std::exp(1.0), 20);
  CHECK(bound_large > 3.0 * 20 * 20);
  CHECK(tall_tree.nodes_created > tall_dp.cells_filled);
}

TEST_CASE("closed-form policies match the table in their regimes") {
  const auto spectrum = make_instance({{1, 4}, {2, 2}, {5, 1}}, 1000, 10);
  REQUIRE(tci_spectrum_constrained(spectrum));
  const TciPolicyResult sp = tci_spectrum_policy(spectrum);
  CHECK(sp.throughput == 10);
  CHECK(sp.throughput == knapsack_dp(spectrum).throughput);
  CHECK(sp.counts == std::vector<int>{0, 0, 10});

  const auto annotator = make_instance({{5, 4}, {7, 2}, {11, 1}}, 10, 1000);
  REQUIRE(tci_annotator_constrained(annotator));
  const TciPolicyResult an = tci_annotator_policy(annotator);
  CHECK(an.throughput == 2);
  CHECK(an.throughput == knapsack_dp(annotator).throughput);
  CHECK(an.counts == std::vector<int>{2, 0, 0});

  const auto single = make_instance({{2, 2}}, 9, 8);
  if (tci_spectrum_constrained(single) && tci_annotator_constrained(single))
    CHECK(tci_spectrum_policy(single).throughput == tci_annotator_policy(single).throughput);

  const auto neither = make_instance({{1, 4}, {4, 1}}, 8, 8);
  CHECK_FALSE(tci_spectrum_constrained(neither));
  CHECK_THROWS_AS(tci_spectrum_policy(neither), std::invalid_argument);
  CHECK_FALSE(tci_annotator_constrained(neither));
  CHECK_THROWS_AS(tci_annotator_policy(neither), std::invalid_argument);
}

TEST_CASE("per-type caps fold the budgets") {
  const auto inst = make_instance({{3, 2}, {2, 5}}, 10, 9);
  CHECK(inst.max_count(1) == 3);  // min(10/3, 9/2)
  CHECK(inst.max_count(2) == 1);  // min(10/2, 9/5)
  CHECK_THROWS_AS(make_instance({{0, 1}}, 5, 5).validate(), std::invalid_argument);
}
