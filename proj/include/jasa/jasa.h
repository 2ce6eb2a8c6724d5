/*
 * jasa — joint annotator and sub-channel allocation.
 *
 * C interface to the solver library: opaque handles, integer status codes,
 * and a per-thread error message. Every object returned through an out
 * parameter is owned by the caller and released with the matching *_free.
 */

#ifndef JASA_JASA_H
#define JASA_JASA_H

#include <stddef.h>

#if defined(_WIN32)
#define JASA_API __declspec(dllexport)
#else
#define JASA_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum jasa_status {
  JASA_OK = 0,
  JASA_ERROR_INVALID_ARGUMENT = 1, /* precondition violated */
  JASA_ERROR_CONFIG = 2,           /* malformed or rejected configuration */
  JASA_ERROR_GUARD = 3,            /* brute-force size guard refused the instance */
  JASA_ERROR_IO = 4,               /* file could not be read or written */
  JASA_ERROR_INTERNAL = 5
} jasa_status;

typedef struct jasa_config_s jasa_config;
typedef struct jasa_result_s jasa_result;

JASA_API const char* jasa_version(void);
JASA_API const char* jasa_status_name(jasa_status status);

/* Message describing the most recent failure on the calling thread. Valid
 * until the next failing call on the same thread. */
JASA_API const char* jasa_last_error(void);

/* Configuration ----------------------------------------------------------- */

JASA_API jasa_status jasa_config_load(const char* path, jasa_config** out);
JASA_API jasa_status jasa_config_parse(const char* json_text, jasa_config** out);
JASA_API void jasa_config_free(jasa_config* config);

/* Point override for one field. Keys: "mode", "trials", "seed",
 * "cluster_size_override" (comma-separated sizes). */
JASA_API jasa_status jasa_config_set(jasa_config* config, const char* key, const char* value);

/* Solving ------------------------------------------------------------------ */

/* Solve the configured instance with the configured mode and seed. */
JASA_API jasa_status jasa_solve(const jasa_config* config, jasa_result** out);

JASA_API jasa_status jasa_result_throughput(const jasa_result* result, int* out);
/* Deterministic structured-text report; owned by the result handle. */
JASA_API const char* jasa_result_text(const jasa_result* result);
JASA_API void jasa_result_free(jasa_result* result);

/* Sweeps ------------------------------------------------------------------- */

/* Run every configured algorithm over variable in {"annotators",
 * "subchannels", "gamma0"} across the inclusive arithmetic range, averaging
 * over the configured trial count. The CSV is returned as a malloc'd string
 * released with jasa_string_free. */
JASA_API jasa_status jasa_sweep(const jasa_config* config, const char* variable, double from,
                                double to, double step, char** out_csv);

/* Same, writing the CSV to a file. */
JASA_API jasa_status jasa_sweep_to_file(const jasa_config* config, const char* variable,
                                        double from, double to, double step, const char* path);

JASA_API void jasa_string_free(char* text);

/* Validation --------------------------------------------------------------- */

/* Run the oracle-equivalence suite on seeded random instances. The report is
 * malloc'd (release with jasa_string_free); *out_failures receives the number
 * of disagreeing cases. */
JASA_API jasa_status jasa_validate(unsigned long long seed, int fading_cases, int tci_cases,
                                   char** out_report, int* out_failures);

#ifdef __cplusplus
}
#endif

#endif /* JASA_JASA_H */
