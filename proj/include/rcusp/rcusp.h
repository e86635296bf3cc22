/*
 * C API for the rcusp library: time-table filtering, solving and benchmark
 * runs for cumulative scheduling with per-activity delay slack.
 *
 * All objects are opaque handles created and destroyed by the library.
 * Functions return rcusp_status; on any non-OK status rcusp_last_error()
 * holds a human-readable message for the calling thread.
 */

#ifndef RCUSP_RCUSP_H
#define RCUSP_RCUSP_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define RCUSP_API __declspec(dllexport)
#else
#define RCUSP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rcusp_status {
  RCUSP_OK = 0,
  RCUSP_ERR_PARSE = 1,   /* malformed input or bad argument values */
  RCUSP_INFEASIBLE = 2,  /* propagation failed or no solution exists */
  RCUSP_VIOLATION = 3,   /* fixpoint verification found violations */
  RCUSP_TIMEOUT = 4,     /* solve hit its deadline */
  RCUSP_ERR_IO = 5,      /* file could not be read or written */
  RCUSP_ERR_INVALID = 6  /* null handle or out-of-contract call */
} rcusp_status;

RCUSP_API const char* rcusp_status_name(rcusp_status status);

/* Message for the last failing call on this thread; empty string if none. */
RCUSP_API const char* rcusp_last_error(void);

RCUSP_API const char* rcusp_version(void);

/* ---- instances ---------------------------------------------------- */

typedef struct rcusp_instance rcusp_instance;

/* Text format, line oriented: first `n C H`, then n lines
 * `p h k s_min s_max`; `#` starts a comment. */
RCUSP_API rcusp_status rcusp_instance_from_text(const char* text,
                                                rcusp_instance** out);
RCUSP_API rcusp_status rcusp_instance_from_file(const char* path,
                                                rcusp_instance** out);
/* The returned text must be released with rcusp_text_free. */
RCUSP_API rcusp_status rcusp_instance_to_text(const rcusp_instance* instance,
                                              char** out_text);
RCUSP_API rcusp_status rcusp_instance_to_file(const rcusp_instance* instance,
                                              const char* path);
RCUSP_API void rcusp_text_free(char* text);
RCUSP_API void rcusp_instance_free(rcusp_instance* instance);

RCUSP_API int32_t rcusp_instance_activity_count(const rcusp_instance* instance);
RCUSP_API int64_t rcusp_instance_capacity(const rcusp_instance* instance);
RCUSP_API int64_t rcusp_instance_horizon(const rcusp_instance* instance);

/* Any output pointer may be NULL when the field is not wanted. */
RCUSP_API rcusp_status rcusp_instance_activity(const rcusp_instance* instance,
                                               int32_t index, int64_t* duration,
                                               int64_t* height, int64_t* slack,
                                               int64_t* start_min,
                                               int64_t* start_max);

/* Fills caller-owned arrays of length n with the initial bounds. */
RCUSP_API rcusp_status rcusp_instance_initial_bounds(const rcusp_instance* instance,
                                                     int64_t* start_min,
                                                     int64_t* start_max);

/* ---- generation ---------------------------------------------------- */

typedef enum rcusp_slack_mode {
  RCUSP_SLACK_FIXED = 0,  /* every activity gets slack_value */
  RCUSP_SLACK_AVERAGE = 1 /* uniform on {1, ..., 2*slack_value - 1} */
} rcusp_slack_mode;

typedef struct rcusp_gen_params {
  int32_t activity_count;
  int64_t duration_min, duration_max;
  int64_t height_min, height_max;
  int64_t capacity;
  rcusp_slack_mode slack_mode;
  int64_t slack_value;
  uint64_t seed;
} rcusp_gen_params;

RCUSP_API rcusp_status rcusp_instance_generate(const rcusp_gen_params* params,
                                               rcusp_instance** out);

/* ---- propagation --------------------------------------------------- */

/* start_min/start_max are caller-owned arrays of length n holding the
 * current bounds; on RCUSP_OK they hold the tightened bounds. Returns
 * RCUSP_INFEASIBLE when filtering proves there is no solution (array
 * contents are then unspecified). any_change may be NULL. */
RCUSP_API rcusp_status rcusp_propagate(const rcusp_instance* instance,
                                       int64_t* start_min, int64_t* start_max,
                                       int* any_change);

/* Runs both fixpoint verifiers on the given bounds. violation_count may be
 * NULL. Returns RCUSP_VIOLATION when any instant is overloaded. */
RCUSP_API rcusp_status rcusp_verify_fixpoint(const rcusp_instance* instance,
                                             const int64_t* start_min,
                                             const int64_t* start_max,
                                             int32_t* violation_count);

/* ---- solving -------------------------------------------------------- */

typedef enum rcusp_solve_mode {
  RCUSP_MODE_RCUMULATIVE = 0, /* full constraint with slack reservations */
  RCUSP_MODE_CUMULATIVE = 1,  /* slacks ignored */
  RCUSP_MODE_NAIVE = 2        /* slacks folded into durations */
} rcusp_solve_mode;

typedef struct rcusp_solve_options {
  rcusp_solve_mode mode;
  int optimal;            /* 0: first solution, 1: branch and bound */
  double timeout_seconds; /* <= 0: no limit */
} rcusp_solve_options;

typedef struct rcusp_solve_stats {
  int64_t nodes;
  int64_t failures;
  int64_t propagations;
  double seconds;
  int proven; /* optimality (or completion) proven */
  int found;  /* a solution or incumbent is available */
} rcusp_solve_stats;

/* starts is a caller-owned array of length n; filled when a solution or
 * incumbent exists. Returns RCUSP_OK on success, RCUSP_INFEASIBLE when no
 * solution exists, RCUSP_TIMEOUT on deadline (starts/objective still filled
 * when stats->found is set). objective and stats may be NULL. */
RCUSP_API rcusp_status rcusp_solve(const rcusp_instance* instance,
                                   const rcusp_solve_options* options,
                                   int64_t* starts, int64_t* objective,
                                   rcusp_solve_stats* stats);

/* ---- benchmarks ------------------------------------------------------ */

typedef struct rcusp_scaling_params {
  const int32_t* sizes;
  int32_t size_count;
  const rcusp_solve_mode* modes; /* reported as cumulative/rcumulative/decomposition */
  int32_t mode_count;
  uint64_t seed;
  double timeout_seconds;
} rcusp_scaling_params;

/* First-solution times per (size, mode); CSV columns n,mode,seconds,nodes,
 * seconds = -1.000000 marks a timeout. */
RCUSP_API rcusp_status rcusp_bench_scaling(const rcusp_scaling_params* params,
                                           const char* csv_path);

typedef struct rcusp_compare_params {
  int32_t instance_count;
  int32_t activity_count;
  int64_t capacity;
  int64_t duration_min, duration_max;
  int64_t height_min, height_max;
  const double* ratios;
  int32_t ratio_count;
  uint64_t seed;
  double timeout_seconds;
} rcusp_compare_params;

/* Optimal robust versus naive makespans; CSV columns
 * ratio,min_deviation_pct,avg_deviation_pct,max_deviation_pct,worse,better,solved. */
RCUSP_API rcusp_status rcusp_bench_compare(const rcusp_compare_params* params,
                                           const char* csv_path);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* RCUSP_RCUSP_H */
