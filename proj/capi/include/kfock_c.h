/* C interface to the kfock field-simulation core.
 *
 * Every object is an opaque handle created and destroyed by this library.
 * Functions return KFOCK_OK on success; on failure they return an error
 * code and leave a message retrievable with kfock_last_error() (thread
 * local). Strings returned by accessor functions are owned by the handle
 * they were obtained from and stay valid until it is destroyed.
 */

#ifndef KFOCK_C_H
#define KFOCK_C_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define KFOCK_API __declspec(dllexport)
#else
#define KFOCK_API __attribute__((visibility("default")))
#endif

#if defined(__cplusplus)
extern "C" {
#endif

typedef enum kfock_status {
  KFOCK_OK = 0,
  KFOCK_ERR_INVALID_ARGUMENT = 1,
  KFOCK_ERR_DOMAIN = 2,
  KFOCK_ERR_PARSE = 3,
  KFOCK_ERR_IO = 4,
  KFOCK_ERR_INTERNAL = 5
} kfock_status;

typedef struct kfock_scenario kfock_scenario;
typedef struct kfock_results kfock_results;

KFOCK_API const char* kfock_version(void);

/* Message describing the most recent failure on this thread ("" if none). */
KFOCK_API const char* kfock_last_error(void);

/* Scenario lifecycle ------------------------------------------------------ */

KFOCK_API kfock_status kfock_scenario_parse(const char* json_text, kfock_scenario** out);
KFOCK_API kfock_status kfock_scenario_parse_file(const char* path, kfock_scenario** out);
KFOCK_API void kfock_scenario_destroy(kfock_scenario* scenario);

/* Runs the scenario's requests in order. `request_filter` restricts
 * execution to requests of one type (and synthesizes a default request of
 * that type if the scenario lists none); pass NULL to run everything.
 * When `use_seed_override` is nonzero, `seed` replaces the scenario seed. */
KFOCK_API kfock_status kfock_scenario_run(const kfock_scenario* scenario,
                                          const char* request_filter, int use_seed_override,
                                          uint64_t seed, kfock_results** out);

/* Results ------------------------------------------------------------------ */

KFOCK_API void kfock_results_destroy(kfock_results* results);

/* 1 when every verification-type request met its tolerance, else 0. */
KFOCK_API int kfock_results_all_passed(const kfock_results* results);

/* Number of result records. */
KFOCK_API size_t kfock_results_count(const kfock_results* results);

/* Request label and wall-clock seconds of record `index`. The label pointer
 * is owned by the results handle. Out-of-range indices yield NULL / 0. */
KFOCK_API const char* kfock_results_request(const kfock_results* results, size_t index);
KFOCK_API double kfock_results_elapsed_seconds(const kfock_results* results, size_t index);

/* Deterministic JSON document of all result records. */
KFOCK_API const char* kfock_results_json(kfock_results* results);

/* CSV of field-eval tables; empty string when no such request ran. */
KFOCK_API const char* kfock_results_csv(kfock_results* results);

/* Direct utilities --------------------------------------------------------- */

/* sqrt((2 pi)^3 * 2 |k|); fails with KFOCK_ERR_DOMAIN at k = 0. */
KFOCK_API kfock_status kfock_normalization_factor(double kx, double ky, double kz, double* out);

/* Amplitude-scale calibration: the conventional value 4 sqrt(hbar/(eps0 c))
 * and the self-consistent value 2 sqrt(hbar/(eps0 c)) that makes the
 * classical and quantum coherent energies coincide. */
KFOCK_API kfock_status kfock_calibrate(double hbar, double c, double epsilon0,
                                       double* lambda_l_paper, double* lambda_l_self_consistent);

#if defined(__cplusplus)
}
#endif

#endif /* KFOCK_C_H */
