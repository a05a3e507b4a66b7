/*
 * traceform C API.
 *
 * Exact integral trace forms of tame cyclic number fields: canonical Gram
 * matrices, discriminants, signatures, circulant coefficient tables,
 * isometry decisions, and cyclotomic certification, behind opaque handles.
 *
 * Conventions:
 *   - every function returning tf_status reports TF_OK (0) on success;
 *   - objects created by tf_*_create / tf_*_compute are released with the
 *     matching tf_*_free; strings returned as char* are released with
 *     tf_string_free;
 *   - big integers cross the boundary as decimal strings;
 *   - tf_last_error_message() describes the most recent failure on the
 *     calling thread.
 */

#ifndef TRACEFORM_H
#define TRACEFORM_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define TRACEFORM_API __declspec(dllexport)
#else
#define TRACEFORM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tf_status {
    TF_OK = 0,
    TF_ERROR_ARGUMENT = 1,           /* null pointer, bad size, bad range */
    TF_ERROR_NON_PRIME = 2,          /* a listed prime is composite */
    TF_ERROR_WILD_RAMIFICATION = 3,  /* p divides e or the degree */
    TF_ERROR_BAD_CONGRUENCE = 4,     /* p != 1 (mod e) */
    TF_ERROR_BAD_LCM = 5,            /* lcm of the indices != degree */
    TF_ERROR_DUPLICATE_PRIME = 6,    /* a prime is listed twice */
    TF_ERROR_UNSUPPORTED_DEGREE = 7, /* no closed form for this degree */
    TF_ERROR_OVERFLOW = 8,           /* value does not fit the requested type */
    TF_ERROR_INTERNAL = 9
} tf_status;

/* Stable name of a status value ("BadLcm", "WildRamification", ...). */
TRACEFORM_API const char* tf_status_name(tf_status status);

/* Detail message for the last failing call on this thread ("" if none). */
TRACEFORM_API const char* tf_last_error_message(void);

TRACEFORM_API void tf_string_free(char* s);

/* ------------------------------------------------------------------ */
/* Field specs                                                         */

typedef struct tf_spec tf_spec;

/*
 * Validate ramification data and build a spec handle. `primes` and
 * `indices` are parallel arrays of length `count`; the primes are sorted
 * ascending on ingest. On error no handle is produced.
 */
TRACEFORM_API tf_status tf_spec_create(int64_t degree, const int64_t* primes,
                                       const int64_t* indices, size_t count, tf_spec** out);
TRACEFORM_API void tf_spec_free(tf_spec* spec);

TRACEFORM_API int64_t tf_spec_degree(const tf_spec* spec);
TRACEFORM_API size_t tf_spec_ramified_count(const tf_spec* spec);
TRACEFORM_API int64_t tf_spec_prime(const tf_spec* spec, size_t i);
TRACEFORM_API int64_t tf_spec_ramification_index(const tf_spec* spec, size_t i);

/* Conductor and discriminant as decimal strings. */
TRACEFORM_API char* tf_spec_conductor(const tf_spec* spec);
TRACEFORM_API char* tf_spec_discriminant(const tf_spec* spec);

/* Signature (r1 + r2, r2) of the trace form: positive and negative index. */
TRACEFORM_API void tf_spec_signature(const tf_spec* spec, int64_t* positives,
                                     int64_t* negatives);

/* 1 when the trace forms are isometric (equal degree and discriminant). */
TRACEFORM_API int tf_isometric(const tf_spec* a, const tf_spec* b);

/* ------------------------------------------------------------------ */
/* Gram matrices                                                       */

typedef struct tf_gram tf_gram;

TRACEFORM_API tf_status tf_gram_compute(const tf_spec* spec, tf_gram** out);
TRACEFORM_API void tf_gram_free(tf_gram* gram);

TRACEFORM_API int64_t tf_gram_dim(const tf_gram* gram);
TRACEFORM_API char* tf_gram_entry(const tf_gram* gram, int64_t i, int64_t j);

/* Row-major int64 entries; TF_ERROR_OVERFLOW if any entry does not fit. */
TRACEFORM_API tf_status tf_gram_entries_i64(const tf_gram* gram, int64_t* out, size_t len);

TRACEFORM_API int tf_gram_equal(const tf_gram* a, const tf_gram* b);

/* ------------------------------------------------------------------ */
/* Circulant coefficient tables                                        */

typedef struct tf_coeffs tf_coeffs;

/* Table read off the expanded circulant; defined for every valid spec. */
TRACEFORM_API tf_status tf_coeffs_compute(const tf_spec* spec, tf_coeffs** out);

/* Closed-form table; TF_ERROR_UNSUPPORTED_DEGREE outside odd / 2^k / 1. */
TRACEFORM_API tf_status tf_coeffs_closed_form(const tf_spec* spec, tf_coeffs** out);

TRACEFORM_API void tf_coeffs_free(tf_coeffs* coeffs);
TRACEFORM_API size_t tf_coeffs_size(const tf_coeffs* coeffs);
TRACEFORM_API int64_t tf_coeffs_divisor(const tf_coeffs* coeffs, size_t i);
TRACEFORM_API char* tf_coeffs_value(const tf_coeffs* coeffs, size_t i);
TRACEFORM_API int64_t tf_coeffs_epsilon(const tf_coeffs* coeffs);

/* ------------------------------------------------------------------ */
/* Cyclotomic certification                                            */

typedef struct tf_report tf_report;

/*
 * Check gram_matrix against the Gauss-period oracle over `trials`
 * realizations. Completing the run returns TF_OK even when a mismatch was
 * found; inspect tf_report_pass.
 */
TRACEFORM_API tf_status tf_certify(const tf_spec* spec, int64_t trials, uint64_t seed,
                                   tf_report** out);
TRACEFORM_API void tf_report_free(tf_report* report);

TRACEFORM_API int tf_report_pass(const tf_report* report);
TRACEFORM_API int64_t tf_report_trials(const tf_report* report);
TRACEFORM_API uint64_t tf_report_seed(const tf_report* report);
TRACEFORM_API int64_t tf_report_failed_trial(const tf_report* report); /* -1 on pass */
TRACEFORM_API size_t tf_report_root_count(const tf_report* report);
TRACEFORM_API int64_t tf_report_failed_root(const tf_report* report, size_t i);

/* ------------------------------------------------------------------ */
/* Enumeration                                                         */

typedef struct tf_speclist tf_speclist;

TRACEFORM_API tf_status tf_enumerate(int64_t degree, int64_t max_conductor, tf_speclist** out);
TRACEFORM_API void tf_speclist_free(tf_speclist* list);
TRACEFORM_API size_t tf_speclist_size(const tf_speclist* list);

/* Borrowed pointer, valid while the list lives. */
TRACEFORM_API const tf_spec* tf_speclist_at(const tf_speclist* list, size_t i);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* TRACEFORM_H */
