// Command-line front end for the jasa solver library, driven entirely
// through the shared-library C interface.
//
//   jasa solve    --config cfg.json [--mode M] [--seed N] ...
//   jasa sweep    --config cfg.json --sweep-var annotators --from 5 --to 50
//                 --step 5 [--out sweep.csv]
//   jasa validate [--seed N] [--fading-cases N] [--tci-cases N]
//
// Exit codes: 0 success, 2 configuration error, 3 size-guard violation,
// 1 anything else.

#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "jasa/jasa.h"

namespace {

int exit_code_for(jasa_status status) {
  switch (status) {
    case JASA_OK: return 0;
    case JASA_ERROR_CONFIG: return 2;
    case JASA_ERROR_GUARD: return 3;
    default: return 1;
  }
}

int fail(jasa_status status) {
  std::fprintf(stderr, "error (%s): %s\n", jasa_status_name(status), jasa_last_error());
  return exit_code_for(status);
}

struct ConfigFlags {
  std::string path;
  std::string mode;
  std::string trials;
  std::string seed;
  std::string override_sizes;
};

void add_config_flags(CLI::App* cmd, ConfigFlags& flags, bool seed_only = false) {
  if (!seed_only) {
    cmd->add_option("--config", flags.path, "experiment config (JSON)")->required();
    cmd->add_option("--mode", flags.mode, "solver mode override");
    cmd->add_option("--trials", flags.trials, "trial count override");
    cmd->add_option("--override-cluster-sizes", flags.override_sizes,
                    "comma-separated per-type cluster sizes");
  }
  cmd->add_option("--seed", flags.seed, "base RNG seed override");
}

jasa_status load_config(const ConfigFlags& flags, jasa_config** out) {
  jasa_status status = jasa_config_load(flags.path.c_str(), out);
  if (status != JASA_OK) return status;
  const std::pair<const char*, const std::string*> overrides[] = {
      {"mode", &flags.mode},
      {"trials", &flags.trials},
      {"seed", &flags.seed},
      {"cluster_size_override", &flags.override_sizes},
  };
  for (const auto& [key, value] : overrides) {
    if (value->empty()) continue;
    status = jasa_config_set(*out, key, value->c_str());
    if (status != JASA_OK) {
      jasa_config_free(*out);
      *out = nullptr;
      return status;
    }
  }
  return JASA_OK;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"jasa: throughput maximization for multicast crowd labelling"};
  app.require_subcommand(1);

  ConfigFlags solve_flags;
  CLI::App* solve = app.add_subcommand("solve", "solve one configured instance");
  add_config_flags(solve, solve_flags);

  ConfigFlags sweep_flags;
  std::string sweep_var, out_path;
  double from = 0.0, to = 0.0, step = 1.0;
  CLI::App* sweep = app.add_subcommand("sweep", "average throughput across a parameter range");
  add_config_flags(sweep, sweep_flags);
  sweep->add_option("--sweep-var", sweep_var, "annotators | subchannels | gamma0")->required();
  sweep->add_option("--from", from, "first value")->required();
  sweep->add_option("--to", to, "last value (inclusive)")->required();
  sweep->add_option("--step", step, "increment");
  sweep->add_option("--out", out_path, "CSV destination (stdout when omitted)");

  ConfigFlags validate_flags;
  int fading_cases = 200, tci_cases = 200;
  CLI::App* validate = app.add_subcommand("validate", "run the oracle-equivalence suite");
  add_config_flags(validate, validate_flags, /*seed_only=*/true);
  validate->add_option("--fading-cases", fading_cases, "fading instances to check");
  validate->add_option("--tci-cases", tci_cases, "channel-inversion instances to check");

  CLI11_PARSE(app, argc, argv);

  if (solve->parsed()) {
    jasa_config* config = nullptr;
    jasa_status status = load_config(solve_flags, &config);
    if (status != JASA_OK) return fail(status);
    jasa_result* result = nullptr;
    status = jasa_solve(config, &result);
    jasa_config_free(config);
    if (status != JASA_OK) return fail(status);
    std::fputs(jasa_result_text(result), stdout);
    jasa_result_free(result);
    return 0;
  }

  if (sweep->parsed()) {
    jasa_config* config = nullptr;
    jasa_status status = load_config(sweep_flags, &config);
    if (status != JASA_OK) return fail(status);
    if (out_path.empty()) {
      char* csv = nullptr;
      status = jasa_sweep(config, sweep_var.c_str(), from, to, step, &csv);
      jasa_config_free(config);
      if (status != JASA_OK) return fail(status);
      std::fputs(csv, stdout);
      jasa_string_free(csv);
    } else {
      status = jasa_sweep_to_file(config, sweep_var.c_str(), from, to, step, out_path.c_str());
      jasa_config_free(config);
      if (status != JASA_OK) return fail(status);
      std::fprintf(stderr, "wrote %s\n", out_path.c_str());
    }
    return 0;
  }

  unsigned long long seed = 1;
  if (!validate_flags.seed.empty()) seed = std::stoull(validate_flags.seed);
  char* report = nullptr;
  int failures = 0;
  const jasa_status status = jasa_validate(seed, fading_cases, tci_cases, &report, &failures);
  if (status != JASA_OK) return fail(status);
  std::fputs(report, stdout);
  jasa_string_free(report);
  return failures == 0 ? 0 : 1;
}
