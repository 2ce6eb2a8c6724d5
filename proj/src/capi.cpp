#include "jasa/jasa.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <new>
#include <string>

#include "config.hpp"
#include "experiment.hpp"
#include "types.hpp"

namespace {

thread_local std::string g_last_error;

jasa_status record_error(jasa_status status, const char* what) {
  g_last_error = what ? what : "unknown error";
  return status;
}

/// Run a callable, translating the library's exception taxonomy onto the
/// C status codes.
template <typename Fn>
jasa_status guarded(Fn&& fn) {
  try {
    fn();
    return JASA_OK;
  } catch (const jasa::config_error& err) {
    return record_error(JASA_ERROR_CONFIG, err.what());
  } catch (const jasa::guard_error& err) {
    return record_error(JASA_ERROR_GUARD, err.what());
  } catch (const std::invalid_argument& err) {
    return record_error(JASA_ERROR_INVALID_ARGUMENT, err.what());
  } catch (const std::bad_alloc&) {
    return record_error(JASA_ERROR_INTERNAL, "out of memory");
  } catch (const std::exception& err) {
    return record_error(JASA_ERROR_INTERNAL, err.what());
  } catch (...) {
    return record_error(JASA_ERROR_INTERNAL, "unknown error");
  }
}

char* copy_string(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

}  // namespace

struct jasa_config_s {
  jasa::ExperimentConfig config;
};

struct jasa_result_s {
  int throughput = 0;
  std::string text;
};

extern "C" {

const char* jasa_version(void) { return "1.0.0"; }

const char* jasa_status_name(jasa_status status) {
  switch (status) {
    case JASA_OK: return "ok";
    case JASA_ERROR_INVALID_ARGUMENT: return "invalid argument";
    case JASA_ERROR_CONFIG: return "config error";
    case JASA_ERROR_GUARD: return "size guard violation";
    case JASA_ERROR_IO: return "io error";
    case JASA_ERROR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* jasa_last_error(void) { return g_last_error.c_str(); }

jasa_status jasa_config_load(const char* path, jasa_config** out) {
  if (!path || !out) return record_error(JASA_ERROR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] { *out = new jasa_config_s{jasa::load_config_file(path)}; });
}

jasa_status jasa_config_parse(const char* json_text, jasa_config** out) {
  if (!json_text || !out) return record_error(JASA_ERROR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] { *out = new jasa_config_s{jasa::parse_config(json_text)}; });
}

void jasa_config_free(jasa_config* config) { delete config; }

jasa_status jasa_config_set(jasa_config* config, const char* key, const char* value) {
  if (!config || !key || !value)
    return record_error(JASA_ERROR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { jasa::apply_config_override(config->config, key, value); });
}

jasa_status jasa_solve(const jasa_config* config, jasa_result** out) {
  if (!config || !out) return record_error(JASA_ERROR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    const jasa::SolveOutcome outcome = jasa::run_solve(config->config);
    *out = new jasa_result_s{outcome.solution.throughput,
                             jasa::render_outcome(config->config, outcome)};
  });
}

jasa_status jasa_result_throughput(const jasa_result* result, int* out) {
  if (!result || !out) return record_error(JASA_ERROR_INVALID_ARGUMENT, "null argument");
  *out = result->throughput;
  return JASA_OK;
}

const char* jasa_result_text(const jasa_result* result) {
  return result ? result->text.c_str() : "";
}

void jasa_result_free(jasa_result* result) { delete result; }

jasa_status jasa_sweep(const jasa_config* config, const char* variable, double from, double to,
                       double step, char** out_csv) {
  if (!config || !variable || !out_csv)
    return record_error(JASA_ERROR_INVALID_ARGUMENT, "null argument");
  *out_csv = nullptr;
  return guarded([&] {
    const auto rows =
        jasa::run_sweep(config->config, variable, jasa::sweep_values(from, to, step));
    *out_csv = copy_string(jasa::sweep_csv(rows));
  });
}

jasa_status jasa_sweep_to_file(const jasa_config* config, const char* variable, double from,
                               double to, double step, const char* path) {
  if (!config || !variable || !path)
    return record_error(JASA_ERROR_INVALID_ARGUMENT, "null argument");
  char* csv = nullptr;
  const jasa_status status = jasa_sweep(config, variable, from, to, step, &csv);
  if (status != JASA_OK) return status;
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    jasa_string_free(csv);
    return record_error(JASA_ERROR_IO, "cannot open output file");
  }
  file << csv;
  jasa_string_free(csv);
  if (!file.good()) return record_error(JASA_ERROR_IO, "write failed");
  return JASA_OK;
}

void jasa_string_free(char* text) { std::free(text); }

jasa_status jasa_validate(unsigned long long seed, int fading_cases, int tci_cases,
                          char** out_report, int* out_failures) {
  if (!out_report || !out_failures)
    return record_error(JASA_ERROR_INVALID_ARGUMENT, "null argument");
  if (fading_cases < 0 || tci_cases < 0)
    return record_error(JASA_ERROR_INVALID_ARGUMENT, "case counts must be non-negative");
  *out_report = nullptr;
  *out_failures = 0;
  return guarded([&] {
    const jasa::ValidationReport report = jasa::run_validation(seed, fading_cases, tci_cases);
    *out_report = copy_string(report.text);
    *out_failures = report.fading_failures + report.tci_failures;
  });
}

}  // extern "C"
