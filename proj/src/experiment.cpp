#include "experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "channel.hpp"
#include "instances.hpp"
#include "labelling.hpp"
#include "oracle.hpp"

namespace jasa {

namespace {

std::vector<int> derive_cluster_sizes(const ExperimentConfig& cfg, const RateLadder& ladder) {
  if (!cfg.cluster_size_override.empty()) return cfg.cluster_size_override;
  std::vector<int> sizes;
  for (int n = 1; n <= ladder.types(); ++n)
    sizes.push_back(cfg.exact_odd_sizes ? cluster_size_odd(ladder.error_prob(n), cfg.theta)
                                        : cluster_size(ladder.error_prob(n), cfg.theta));
  return sizes;
}

/// Expand a type sequence into a Solution by charging edges along it.
Solution expand_sequence(const EdgeCostProvider& costs,
                         const std::vector<int>& types) {
  Solution sol;
  int annots = 0, subch = 0;
  for (int type : types) {
    const auto cost = costs.edge(annots, type);
    if (!cost) throw std::logic_error("witness sequence references a missing edge");
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

/// Expand per-type copy counts into a Solution, at most `max_objects`
/// clusters, low types first so the kept prefix is canonical.
Solution expand_counts(const KnapsackInstance& inst, const std::vector<int>& counts,
                       int max_objects) {
  Solution sol;
  int annots = 0, subch = 0;
  for (int type = 1; type <= inst.types() && sol.throughput < max_objects; ++type) {
    for (int copy = 0; copy < counts[type - 1] && sol.throughput < max_objects; ++copy) {
      ClusterSpec c;
      c.type = type;
      c.first = annots + 1;
      c.last = annots + inst.weights[type - 1].annotators;
      c.subchannels = inst.weights[type - 1].subchannels;
      annots = c.last;
      subch += c.subchannels;
      sol.clusters.push_back(c);
      ++sol.throughput;
    }
  }
  sol.annotators_used = annots;
  sol.subchannels_used = subch;
  return sol;
}

std::vector<int> tally_types(const std::vector<int>& types, int n_types) {
  std::vector<int> counts(n_types, 0);
  for (int t : types) ++counts[t - 1];
  return counts;
}

SolveOutcome solve_tci(const ExperimentConfig& cfg, const std::string& mode, int annotators,
                       int subchannels, double gamma0, std::uint64_t trial_seed) {
  SolveOutcome out;
  out.algorithm = mode;
  out.available_annotators = 0;
  if (annotators < 1) return out;

  Scenario scen = cfg.scenario();
  scen.annotator_budget = annotators;
  scen.subchannel_budget = subchannels;
  const RateLadder ladder = cfg.rate_ladder();
  const std::vector<int> sizes = derive_cluster_sizes(cfg, ladder);

  const double power = cfg.power_auto ? annotators : cfg.total_power;
  const ChannelRealization ch = draw_rayleigh(annotators, trial_seed, cfg.noise_power, power);
  const TciAllocation alloc = truncated_inversion(ch, gamma0, power);
  out.available_annotators = alloc.available;

  KnapsackInstance inst;
  for (int n = 1; n <= ladder.types(); ++n)
    inst.weights.push_back({sizes[n - 1], tci_subchannels(ladder.rate(n), scen, gamma0)});
  inst.annotator_budget = alloc.available;
  inst.subchannel_budget = subchannels;

  if (mode == "tci-dp") {
    const KnapsackResult dp = knapsack_dp(inst);
    out.work = dp.cells_filled;
    out.solution = expand_counts(inst, dp.counts, scen.objects);
  } else if (mode == "tci-bb") {
    const MergedTreeResult tree = merged_tree_bb(inst, scen.objects);
    out.work = tree.nodes_created;
    out.solution = expand_counts(inst, tally_types(tree.types, inst.types()), scen.objects);
  } else if (mode == "tci-es") {
    const OracleReport report = exhaustive_counts(inst);
    out.work = report.states_examined;
    out.solution = expand_counts(inst, report.witness, scen.objects);
  } else {
    throw std::invalid_argument("unknown channel-inversion mode '" + mode + "'");
  }
  return out;
}

SolveOutcome solve_fading_mode(const ExperimentConfig& cfg, const std::string& mode,
                               int annotators, int subchannels, std::uint64_t trial_seed) {
  SolveOutcome out;
  out.algorithm = mode;

  Scenario scen = cfg.scenario();
  scen.annotator_budget = annotators;
  scen.subchannel_budget = subchannels;
  const int type_only = type_only_index(mode);

  if (!cfg.edge_costs.empty()) {
    const TableEdgeCosts costs(cfg.ladder_types(), cfg.edge_costs);
    if (mode == "fading-bb") {
      TreeSearchReport report = solve_fading(scen, costs);
      out.work = report.nodes_created;
      out.solution = std::move(report.solution);
    } else if (mode == "fading-es") {
      const OracleReport report = exhaustive_search(scen, costs);
      out.work = report.states_examined;
      out.solution = expand_sequence(costs, report.witness);
    } else if (type_only > 0) {
      out.solution = greedy_fixed_type(scen, costs, type_only);
    } else {
      throw std::invalid_argument("mode '" + mode + "' needs a channel model, not an edge table");
    }
    return out;
  }

  if (annotators < 1) return out;
  const double power = cfg.power_auto ? annotators : cfg.total_power;
  const FadingProblem problem(scen, cfg.rate_ladder(),
                              draw_rayleigh(annotators, trial_seed, cfg.noise_power, power),
                              cfg.cluster_size_override, cfg.exact_odd_sizes);

  if (mode == "fading-bb") {
    TreeSearchReport report = problem.solve();
    out.work = report.nodes_created;
    out.solution = std::move(report.solution);
  } else if (mode == "fading-es") {
    const OracleReport report = exhaustive_search(scen, problem.costs());
    out.work = report.states_examined;
    out.solution = expand_sequence(problem.costs(), report.witness);
  } else if (type_only > 0) {
    out.solution = problem.fixed_type(type_only);
  } else if (mode == "auto-special-case") {
    if (problem.spectrum_constrained()) {
      out.solution = problem.spectrum_policy().solution;
    } else if (problem.annotator_constrained()) {
      out.solution = problem.annotator_policy();
    } else {
      throw std::invalid_argument(
          "auto-special-case: instance is neither spectrum nor annotator constrained");
    }
  } else {
    throw std::invalid_argument("unknown fading mode '" + mode + "'");
  }
  return out;
}

SolveOutcome solve_with(const ExperimentConfig& cfg, const std::string& mode, int annotators,
                        int subchannels, double gamma0, std::uint64_t trial_seed) {
  if (is_tci_mode(mode)) return solve_tci(cfg, mode, annotators, subchannels, gamma0, trial_seed);
  return solve_fading_mode(cfg, mode, annotators, subchannels, trial_seed);
}

std::string format_number(double v) {
  if (v == std::floor(v) && std::abs(v) < 1e15) {
    std::ostringstream s;
    s << static_cast<long long>(v);
    return s.str();
  }
  std::ostringstream s;
  s.precision(10);
  s << v;
  return s.str();
}

void parallel_for(int count, const std::function<void(int)>& body) {
  const int workers = std::min(thread_budget(), count);
  if (workers <= 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
        }
      }
    });
  }
  for (std::thread& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace

int thread_budget() {
  if (const char* env = std::getenv("JASA_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

SolveOutcome run_solve(const ExperimentConfig& cfg) {
  cfg.validate();
  return solve_with(cfg, cfg.mode, cfg.annotators, cfg.subchannels, cfg.gamma0, cfg.seed);
}

std::string render_outcome(const ExperimentConfig& cfg, const SolveOutcome& outcome) {
  std::ostringstream text;
  text << "mode: " << outcome.algorithm << "\n";
  text << "objects: " << cfg.objects << "\n";
  text << "annotator_budget: " << cfg.annotators << "\n";
  text << "subchannel_budget: " << cfg.subchannels << "\n";
  if (outcome.available_annotators >= 0) {
    text << "gamma0: " << format_number(cfg.gamma0) << "\n";
    text << "available_annotators: " << outcome.available_annotators << "\n";
  }
  text << "throughput: " << outcome.solution.throughput << "\n";
  text << "annotators_used: " << outcome.solution.annotators_used << "\n";
  text << "subchannels_used: " << outcome.solution.subchannels_used << "\n";
  if (!outcome.solution.node_path.empty()) {
    text << "path: S0:1";
    for (std::size_t i = 0; i < outcome.solution.node_path.size(); ++i)
      text << " -> S" << i + 1 << ":" << outcome.solution.node_path[i];
    text << "\n";
  }
  for (std::size_t i = 0; i < outcome.solution.clusters.size(); ++i) {
    const ClusterSpec& c = outcome.solution.clusters[i];
    text << "object " << i + 1 << ": type " << c.type << ", annotators " << c.first << ".."
         << c.last << ", subchannels " << c.subchannels << "\n";
  }
  if (outcome.work > 0) {
    const char* label = outcome.algorithm == "tci-dp" ? "cells"
                        : outcome.algorithm.rfind("-es") != std::string::npos ? "states"
                                                                              : "nodes";
    text << label << ": " << outcome.work << "\n";
  }
  return text.str();
}

std::vector<double> sweep_values(double from, double to, double step) {
  if (!(step > 0.0)) throw std::invalid_argument("sweep step must be positive");
  if (to < from) throw std::invalid_argument("sweep range must not be empty");
  std::vector<double> values;
  const double slack = step * 1e-9;
  for (double v = from; v <= to + slack; v += step) values.push_back(v);
  return values;
}

std::vector<SweepRow> run_sweep(const ExperimentConfig& cfg, const std::string& variable,
                                const std::vector<double>& values) {
  cfg.validate();
  if (variable != "annotators" && variable != "subchannels" && variable != "gamma0")
    throw config_error("config: sweep variable must be annotators, subchannels or gamma0");
  if (values.empty()) throw config_error("config: sweep needs at least one value");
  for (double v : values) {
    if (variable == "gamma0") {
      if (!(v > 0.0)) throw config_error("config: gamma0 sweep values must be positive");
    } else if (v != std::floor(v) || v < 0.0) {
      throw config_error("config: " + variable + " sweep values must be non-negative integers");
    }
  }

  std::vector<std::string> algorithms = cfg.algorithms.empty()
                                            ? std::vector<std::string>{cfg.mode}
                                            : cfg.algorithms;
  std::sort(algorithms.begin(), algorithms.end());
  algorithms.erase(std::unique(algorithms.begin(), algorithms.end()), algorithms.end());

  struct Cell {
    int throughput = 0;
    double ms = 0.0;
  };

  std::vector<SweepRow> rows;
  for (double value : values) {
    const int annotators = variable == "annotators" ? static_cast<int>(value) : cfg.annotators;
    const int subchannels = variable == "subchannels" ? static_cast<int>(value) : cfg.subchannels;
    const double gamma0 = variable == "gamma0" ? value : cfg.gamma0;

    std::vector<std::vector<Cell>> cells(cfg.trials, std::vector<Cell>(algorithms.size()));
    parallel_for(cfg.trials, [&](int trial) {
      const std::uint64_t trial_seed = cfg.seed + static_cast<std::uint64_t>(trial);
      for (std::size_t a = 0; a < algorithms.size(); ++a) {
        const auto start = std::chrono::steady_clock::now();
        const SolveOutcome outcome =
            solve_with(cfg, algorithms[a], annotators, subchannels, gamma0, trial_seed);
        const auto stop = std::chrono::steady_clock::now();
        cells[trial][a] = {outcome.solution.throughput,
                           std::chrono::duration<double, std::milli>(stop - start).count()};
      }
    });

    for (std::size_t a = 0; a < algorithms.size(); ++a) {
      long long total_throughput = 0;
      double total_ms = 0.0;
      for (int trial = 0; trial < cfg.trials; ++trial) {
        total_throughput += cells[trial][a].throughput;
        total_ms += cells[trial][a].ms;
      }
      SweepRow row;
      row.variable = variable;
      row.value = value;
      row.algorithm = algorithms[a];
      row.mean_throughput = static_cast<double>(total_throughput) / cfg.trials;
      row.trials = cfg.trials;
      row.seed = cfg.seed;
      row.mean_runtime_ms = total_ms / cfg.trials;
      rows.push_back(row);
    }
  }
  return rows;
}

std::string sweep_csv(std::vector<SweepRow> rows) {
  std::stable_sort(rows.begin(), rows.end(), [](const SweepRow& a, const SweepRow& b) {
    if (a.value != b.value) return a.value < b.value;
    return a.algorithm < b.algorithm;
  });
  std::ostringstream csv;
  csv << "sweep_var,value,algorithm,mean_throughput,trials,seed,mean_runtime_ms\n";
  for (const SweepRow& row : rows) {
    csv << row.variable << ',' << format_number(row.value) << ',' << row.algorithm << ','
        << format_number(row.mean_throughput) << ',' << row.trials << ',' << row.seed << ',';
    csv.setf(std::ios::fixed);
    csv.precision(6);
    csv << row.mean_runtime_ms << "\n";
    csv.unsetf(std::ios::fixed);
  }
  return csv.str();
}

ValidationReport run_validation(std::uint64_t seed, int fading_cases, int tci_cases) {
  ValidationReport report;
  std::ostringstream text;

  report.fading_cases = fading_cases;
  for (int i = 0; i < fading_cases; ++i) {
    const RandomFadingInstance inst = random_fading_instance(seed + i);
    const FadingProblem problem(inst.scenario, inst.ladder, inst.channel);
    const int tree = problem.solve().solution.throughput;
    const int brute = exhaustive_search(inst.scenario, problem.costs()).optimum;
    if (tree != brute) {
      ++report.fading_failures;
      if (report.fading_failures <= 5)
        text << "fading case " << i << " (seed " << seed + i << "): tree " << tree
             << " != exhaustive " << brute << "\n";
    }
  }
  text << "fading: tree search agreed with exhaustive search on "
       << fading_cases - report.fading_failures << "/" << fading_cases << " instances\n";

  report.tci_cases = tci_cases;
  for (int i = 0; i < tci_cases; ++i) {
    const KnapsackInstance inst = random_knapsack_instance(seed + 1'000'000 + i);
    const int cap = inst.annotator_budget + inst.subchannel_budget + 1;
    const int dp = knapsack_dp(inst).throughput;
    const int tree = merged_tree_bb(inst, cap).throughput;
    const int brute = exhaustive_counts(inst).optimum;
    if (dp != brute || tree != brute) {
      ++report.tci_failures;
      if (report.tci_failures <= 5)
        text << "tci case " << i << " (seed " << seed + 1'000'000 + i << "): dp " << dp
             << ", tree " << tree << ", exhaustive " << brute << "\n";
    }
  }
  text << "tci: knapsack DP, merged tree and exhaustive counts agreed on "
       << tci_cases - report.tci_failures << "/" << tci_cases << " instances\n";

  report.text = text.str();
  return report;
}

}  // namespace jasa
