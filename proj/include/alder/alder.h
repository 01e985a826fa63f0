/* C interface to the alder partition-inequality library. */
#ifndef ALDER_ALDER_H
#define ALDER_ALDER_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define ALDER_API __declspec(dllexport)
#else
#define ALDER_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum alder_status {
    ALDER_OK = 0,
    ALDER_ERR_INVALID_ARGUMENT = 1,
    ALDER_ERR_OUT_OF_RANGE = 2,
    ALDER_ERR_IO = 3,
    ALDER_ERR_INTERNAL = 4
} alder_status;

typedef enum alder_format { ALDER_FORMAT_JSON = 0, ALDER_FORMAT_CSV = 1, ALDER_FORMAT_HUMAN = 2 } alder_format;

typedef struct alder_session alder_session;
typedef struct alder_report alder_report;

/* Grid arguments. Every field is optional; NULL or 0 means unset.
 * Ranges are "7", "1..20", "2,3,5" or mixtures such as "1..3,9".
 * When n is unset the n axis is 1..n_max, and n_max defaults to 2000 for
 * a = 1 grids and 1200 otherwise. */
typedef struct alder_args {
    const char* a;
    const char* d;
    const char* N;
    const char* n;
    const char* s;
    int64_t n_max;
    /* Part set for count kind "rho": "T", "S" or "custom". */
    const char* set;
    int64_t modulus;
    const char* residues;   /* "1,5" */
    const char* exclusions; /* "5" */
} alder_args;

typedef struct alder_tally {
    int64_t ok, holds, fails, out_of_hypothesis, skipped;
} alder_tally;

ALDER_API const char* alder_version(void);
/* Message for the last failing call on this thread; "" if none. */
ALDER_API const char* alder_last_error(void);

ALDER_API alder_status alder_session_new(alder_session** out);
ALDER_API void alder_session_free(alder_session* session);
ALDER_API alder_status alder_session_set_jobs(alder_session* session, int jobs);
/* NULL disables the on-disk table cache. */
ALDER_API alder_status alder_session_set_cache_dir(alder_session* session, const char* dir);
ALDER_API alder_status alder_session_set_force(alder_session* session, int force);
ALDER_API alder_status alder_session_set_enumeration_horizon(alder_session* session, int64_t horizon);

/* kind: q, Q, Qm, Qmm, rho, g, l, delta, delta_m, delta_mm. */
ALDER_API alder_status alder_count(alder_session* session, const char* kind, const alder_args* args,
                                   alder_report** out);
/* theorem: shift, littlelemon, gen-kp, gen-dkst, anchors, xy-diff, ceiling,
 * a-to-1, modified-st, t-monotone. */
ALDER_API alder_status alder_verify(alder_session* session, const char* theorem, const alder_args* args,
                                    alder_report** out);
ALDER_API alder_status alder_inject(alder_session* session, const alder_args* args, alder_report** out);
/* kind: delta, delta-m, delta-mm, shift. */
ALDER_API alder_status alder_search(alder_session* session, const char* kind, const alder_args* args,
                                    alder_report** out);

/* Writes a malloc'd string; release it with alder_string_free. */
ALDER_API alder_status alder_report_render(const alder_report* report, alder_format format, int timing, char** out);
/* 0 when no in-hypothesis cell fails, 1 otherwise. */
ALDER_API int alder_report_exit_code(const alder_report* report);
ALDER_API size_t alder_report_cell_count(const alder_report* report);
ALDER_API alder_status alder_report_tally(const alder_report* report, alder_tally* out);
ALDER_API void alder_report_free(alder_report* report);

/* Exact decimal value of a single count; kind rho counts over S_d^N. */
ALDER_API alder_status alder_count_value(const char* kind, int64_t a, int64_t d, int64_t N, int64_t n, char** out);

ALDER_API void alder_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
