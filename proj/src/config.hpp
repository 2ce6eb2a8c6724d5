#ifndef JASA_CONFIG_HPP
#define JASA_CONFIG_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fading.hpp"
#include "types.hpp"

namespace jasa {

/// One experiment description, parsed from a strict JSON document. Unknown
/// keys are rejected; omitted keys fall back to the reference simulation
/// settings (three-rate ladder, theta 0.1, S 10, unit-bandwidth 3, T 1,
/// N0 1, gamma0 1, power budget tracking the annotator count). Only the
/// instance size (M, K, L) must always be spelled out.
struct ExperimentConfig {
  std::vector<RateEntry> ladder;
  double theta = 0.1;
  int object_bits = 10;
  int objects = 0;
  double subchannel_bandwidth = 3.0;
  double duration = 1.0;
  double noise_power = 1.0;
  int annotators = 0;
  int subchannels = 0;
  bool power_auto = true;   // budget equals the annotator count
  double total_power = 0.0; // used when power_auto is false
  double gamma0 = 1.0;
  std::string mode = "fading-bb";
  int trials = 1;
  std::uint64_t seed = 1;
  std::vector<int> cluster_size_override;
  bool exact_odd_sizes = false;
  std::vector<std::string> algorithms;  // sweep algorithms; defaults to {mode}
  // Optional explicit (annotators_used, type) -> cost table replacing the
  // channel-derived edge costs; lets canned instances run through the CLI.
  std::map<std::pair<int, int>, EdgeCost> edge_costs;

  Scenario scenario() const;
  RateLadder rate_ladder() const;
  double power_budget() const { return power_auto ? annotators : total_power; }
  int ladder_types() const;

  void validate() const;
};

/// Parse and validate a config document. Throws config_error on anything
/// malformed, out of range, or unknown.
ExperimentConfig parse_config(const std::string& json_text);
ExperimentConfig load_config_file(const std::string& path);

/// Point override for CLI flags. Accepted keys: mode, trials, seed,
/// cluster_size_override (comma-separated sizes).
void apply_config_override(ExperimentConfig& cfg, const std::string& key,
                           const std::string& value);

/// True for the mode strings the dispatcher understands (fading-bb,
/// fading-es, tci-dp, tci-bb, tci-es, type-only-<n>, auto-special-case).
bool is_known_mode(const std::string& mode);
/// Cluster type of a type-only-<n> mode, or 0 for every other mode.
int type_only_index(const std::string& mode);
bool is_tci_mode(const std::string& mode);

}  // namespace jasa

#endif  // JASA_CONFIG_HPP
