#include "config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace jasa {

namespace {

using nlohmann::json;

const std::vector<RateEntry>& default_ladder() {
  static const std::vector<RateEntry> ladder = {
      {0.5 * std::log2(3.0), 0.10},
      {0.5, 0.15},
      {0.5 * std::log2(1.5), 0.20},
  };
  return ladder;
}

[[noreturn]] void fail(const std::string& message) { throw config_error("config: " + message); }

double number_field(const json& j, const std::string& key) {
  if (!j.at(key).is_number()) fail("'" + key + "' must be a number");
  return j.at(key).get<double>();
}

int int_field(const json& j, const std::string& key) {
  const double v = number_field(j, key);
  if (v != std::floor(v)) fail("'" + key + "' must be an integer");
  return static_cast<int>(v);
}

}  // namespace

Scenario ExperimentConfig::scenario() const {
  Scenario scen;
  scen.objects = objects;
  scen.object_bits = object_bits;
  scen.target_rlep = theta;
  scen.annotator_budget = annotators;
  scen.subchannel_budget = subchannels;
  scen.subchannel_bandwidth_hz = subchannel_bandwidth;
  scen.duration_s = duration;
  return scen;
}

RateLadder ExperimentConfig::rate_ladder() const {
  return RateLadder(ladder.empty() ? default_ladder() : ladder);
}

int ExperimentConfig::ladder_types() const {
  if (!edge_costs.empty()) {
    int types = 0;
    for (const auto& [key, cost] : edge_costs) types = std::max(types, key.second);
    return types;
  }
  return static_cast<int>((ladder.empty() ? default_ladder() : ladder).size());
}

void ExperimentConfig::validate() const {
  if (objects < 1) fail("'M' must be at least 1");
  if (annotators < 0) fail("'K' must be non-negative");
  if (subchannels < 0) fail("'L' must be non-negative");
  if (object_bits < 1) fail("'S' must be at least 1");
  if (!(theta > 0.0 && theta < 1.0)) fail("'theta' must lie in (0, 1)");
  if (!(subchannel_bandwidth > 0.0)) fail("'subchannel_bandwidth' must be positive");
  if (!(duration > 0.0)) fail("'T' must be positive");
  if (!(noise_power > 0.0)) fail("'N0' must be positive");
  if (!power_auto && !(total_power > 0.0)) fail("'total_power' must be positive or \"auto\"");
  if (!(gamma0 > 0.0)) fail("'gamma0' must be positive");
  if (trials < 1) fail("'trials' must be at least 1");
  if (!is_known_mode(mode)) fail("unknown mode '" + mode + "'");
  for (const std::string& alg : algorithms)
    if (!is_known_mode(alg)) fail("unknown algorithm '" + alg + "'");

  try {
    rate_ladder();
  } catch (const std::invalid_argument& err) {
    fail(std::string("'ladder' invalid: ") + err.what());
  }
  if (!cluster_size_override.empty()) {
    if (static_cast<int>(cluster_size_override.size()) != ladder_types())
      fail("'cluster_size_override' must list one size per ladder type");
    for (int s : cluster_size_override)
      if (s < 1) fail("'cluster_size_override' entries must be positive");
  }
  for (const auto& [key, cost] : edge_costs) {
    if (key.first < 0 || key.second < 1) fail("'edge_costs' keys out of range");
    if (cost.annotators < 1 || cost.subchannels < 1) fail("'edge_costs' costs must be positive");
  }
  const int n = type_only_index(mode);
  if (n > ladder_types()) fail("mode '" + mode + "' names a type beyond the ladder");
}

ExperimentConfig parse_config(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& err) {
    fail(std::string("not valid JSON: ") + err.what());
  }
  if (!root.is_object()) fail("document must be a JSON object");

  static const std::set<std::string> known = {
      "ladder", "theta", "S", "M", "subchannel_bandwidth", "T", "N0", "K", "L",
      "total_power", "gamma0", "mode", "trials", "seed", "cluster_size_override",
      "exact_odd_sizes", "algorithms", "edge_costs"};
  for (const auto& [key, value] : root.items())
    if (!known.count(key)) fail("unknown key '" + key + "'");

  for (const char* required : {"M", "K", "L"})
    if (!root.contains(required)) fail(std::string("missing required key '") + required + "'");

  ExperimentConfig cfg;
  cfg.objects = int_field(root, "M");
  cfg.annotators = int_field(root, "K");
  cfg.subchannels = int_field(root, "L");
  if (root.contains("S")) cfg.object_bits = int_field(root, "S");
  if (root.contains("theta")) cfg.theta = number_field(root, "theta");
  if (root.contains("subchannel_bandwidth"))
    cfg.subchannel_bandwidth = number_field(root, "subchannel_bandwidth");
  if (root.contains("T")) cfg.duration = number_field(root, "T");
  if (root.contains("N0")) cfg.noise_power = number_field(root, "N0");
  if (root.contains("gamma0")) cfg.gamma0 = number_field(root, "gamma0");
  if (root.contains("trials")) cfg.trials = int_field(root, "trials");
  if (root.contains("seed")) {
    if (!root.at("seed").is_number_unsigned() && !root.at("seed").is_number_integer())
      fail("'seed' must be a non-negative integer");
    cfg.seed = root.at("seed").get<std::uint64_t>();
  }
  if (root.contains("mode")) {
    if (!root.at("mode").is_string()) fail("'mode' must be a string");
    cfg.mode = root.at("mode").get<std::string>();
  }
  if (root.contains("exact_odd_sizes")) {
    if (!root.at("exact_odd_sizes").is_boolean()) fail("'exact_odd_sizes' must be a boolean");
    cfg.exact_odd_sizes = root.at("exact_odd_sizes").get<bool>();
  }
  if (root.contains("total_power")) {
    const json& p = root.at("total_power");
    if (p.is_string()) {
      if (p.get<std::string>() != "auto") fail("'total_power' must be a number or \"auto\"");
      cfg.power_auto = true;
    } else if (p.is_number()) {
      cfg.power_auto = false;
      cfg.total_power = p.get<double>();
    } else {
      fail("'total_power' must be a number or \"auto\"");
    }
  }
  if (root.contains("ladder")) {
    const json& arr = root.at("ladder");
    if (!arr.is_array() || arr.empty()) fail("'ladder' must be a non-empty array");
    for (const json& item : arr) {
      if (!item.is_object() || !item.contains("rate") || !item.contains("lep") ||
          item.size() != 2)
        fail("'ladder' entries must be {rate, lep} objects");
      cfg.ladder.push_back({item.at("rate").get<double>(), item.at("lep").get<double>()});
    }
  }
  if (root.contains("cluster_size_override")) {
    const json& arr = root.at("cluster_size_override");
    if (!arr.is_array()) fail("'cluster_size_override' must be an array");
    for (const json& item : arr) {
      if (!item.is_number_integer()) fail("'cluster_size_override' entries must be integers");
      cfg.cluster_size_override.push_back(item.get<int>());
    }
  }
  if (root.contains("algorithms")) {
    const json& arr = root.at("algorithms");
    if (!arr.is_array() || arr.empty()) fail("'algorithms' must be a non-empty array");
    for (const json& item : arr) {
      if (!item.is_string()) fail("'algorithms' entries must be strings");
      cfg.algorithms.push_back(item.get<std::string>());
    }
  }
  if (root.contains("edge_costs")) {
    const json& arr = root.at("edge_costs");
    if (!arr.is_array() || arr.empty()) fail("'edge_costs' must be a non-empty array");
    for (const json& item : arr) {
      for (const char* field : {"annotators_used", "type", "annotators", "subchannels"})
        if (!item.contains(field)) fail(std::string("'edge_costs' entry missing '") + field + "'");
      if (item.size() != 4) fail("'edge_costs' entries carry exactly four fields");
      const int used = item.at("annotators_used").get<int>();
      const int type = item.at("type").get<int>();
      const EdgeCost cost{item.at("annotators").get<int>(), item.at("subchannels").get<int>()};
      if (!cfg.edge_costs.emplace(std::make_pair(used, type), cost).second)
        fail("'edge_costs' lists a duplicate (annotators_used, type) pair");
    }
  }

  cfg.validate();
  return cfg;
}

ExperimentConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

void apply_config_override(ExperimentConfig& cfg, const std::string& key,
                           const std::string& value) {
  ExperimentConfig next = cfg;  // commit only a validated override
  try {
    if (key == "mode") {
      next.mode = value;
    } else if (key == "trials") {
      next.trials = std::stoi(value);
    } else if (key == "seed") {
      next.seed = std::stoull(value);
    } else if (key == "cluster_size_override") {
      std::vector<int> sizes;
      std::stringstream ss(value);
      std::string token;
      while (std::getline(ss, token, ',')) sizes.push_back(std::stoi(token));
      next.cluster_size_override = sizes;
    } else {
      fail("no such override '" + key + "'");
    }
  } catch (const std::logic_error&) {
    fail("bad value '" + value + "' for override '" + key + "'");
  }
  next.validate();
  cfg = std::move(next);
}

bool is_known_mode(const std::string& mode) {
  if (mode == "fading-bb" || mode == "fading-es" || mode == "tci-dp" || mode == "tci-bb" ||
      mode == "tci-es" || mode == "auto-special-case")
    return true;
  return type_only_index(mode) > 0;
}

int type_only_index(const std::string& mode) {
  const std::string prefix = "type-only-";
  if (mode.rfind(prefix, 0) != 0) return 0;
  const std::string digits = mode.substr(prefix.size());
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) return 0;
  const int n = std::stoi(digits);
  return n >= 1 ? n : 0;
}

bool is_tci_mode(const std::string& mode) { return mode.rfind("tci-", 0) == 0; }

}  // namespace jasa
