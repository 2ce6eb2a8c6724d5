#ifndef JASA_EXPERIMENT_HPP
#define JASA_EXPERIMENT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "config.hpp"
#include "types.hpp"

namespace jasa {

/// Result of solving one configured instance: the plan, the algorithm that
/// produced it, and its work counter (tree nodes, DP cells or enumerated
/// states, depending on the algorithm).
struct SolveOutcome {
  std::string algorithm;
  Solution solution;
  long long work = 0;
  int available_annotators = -1;  // annotators kept by channel inversion; -1 outside TCI modes
};

/// Solve the instance described by the config with its own mode and seed.
SolveOutcome run_solve(const ExperimentConfig& cfg);

/// Deterministic structured-text rendering of a solve outcome.
std::string render_outcome(const ExperimentConfig& cfg, const SolveOutcome& outcome);

/// One aggregated sweep measurement. Means are taken over exactly `trials`
/// channel draws; trial i uses derived seed `seed + i`, identically for every
/// algorithm so curves are comparable draw by draw.
struct SweepRow {
  std::string variable;
  double value = 0.0;
  std::string algorithm;
  double mean_throughput = 0.0;
  int trials = 0;
  std::uint64_t seed = 0;
  double mean_runtime_ms = 0.0;
};

/// Run every configured algorithm at every value of the sweep variable
/// (annotators, subchannels or gamma0). Trials may run on several threads
/// (capped by JASA_THREADS); aggregation is indexed by trial so the
/// throughput statistics never depend on scheduling.
std::vector<SweepRow> run_sweep(const ExperimentConfig& cfg, const std::string& variable,
                                const std::vector<double>& values);

/// Inclusive arithmetic range, with an epsilon so `to` is not lost to
/// floating-point accumulation.
std::vector<double> sweep_values(double from, double to, double step);

/// CSV with the fixed header
/// sweep_var,value,algorithm,mean_throughput,trials,seed,mean_runtime_ms and
/// rows sorted by (value, algorithm).
std::string sweep_csv(std::vector<SweepRow> rows);

struct ValidationReport {
  int fading_cases = 0;
  int fading_failures = 0;
  int tci_cases = 0;
  int tci_failures = 0;
  std::string text;

  bool ok() const { return fading_failures == 0 && tci_failures == 0; }
};

/// The oracle-equivalence suite: the fading tree search against exhaustive
/// sequence enumeration, and the knapsack DP against both the merged tree
/// search and exhaustive count enumeration, on seeded random instances.
ValidationReport run_validation(std::uint64_t seed, int fading_cases, int tci_cases);

/// Thread budget for parallel trials: JASA_THREADS when set, otherwise the
/// hardware concurrency.
int thread_budget();

}  // namespace jasa

#endif  // JASA_EXPERIMENT_HPP
