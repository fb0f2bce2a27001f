/*
 * C interface to the galoislab shared library.
 *
 * Exact computation of generalized Galois numbers, Rogers-Szego expansions,
 * q-multinomial coefficients, permutation statistics, and the derived
 * moment/cumulant reports. All big values cross the boundary as decimal
 * strings ("p/q" for rationals); structured reports cross as JSON or CSV
 * strings. Strings returned through char** are heap-allocated and must be
 * released with gl_string_free; polynomials through gl_poly** with
 * gl_poly_free.
 *
 * Every function returns GL_OK on success. On failure the out-parameters
 * are untouched and gl_last_error() carries a thread-local description.
 */

#ifndef GALOISLAB_H
#define GALOISLAB_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define GL_API __declspec(dllexport)
#else
#define GL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gl_status {
    GL_OK = 0,
    GL_ERROR_INVALID_ARGUMENT = 1,
    GL_ERROR_CAP_EXCEEDED = 2,
    GL_ERROR_NULL_POINTER = 3,
    GL_ERROR_INTERNAL = 4
} gl_status;

/* Opaque polynomial in q with arbitrary-precision integer coefficients. */
typedef struct gl_poly gl_poly;

GL_API const char* gl_version(void);
GL_API const char* gl_status_name(gl_status status);
GL_API const char* gl_last_error(void);

GL_API void gl_string_free(char* s);
GL_API void gl_poly_free(gl_poly* poly);

/* Cap on combinatorially large expansions; initialized from the
 * GALOIS_LAB_MAX_CELLS environment variable (default 10^7). */
GL_API uint64_t gl_get_max_cells(void);
GL_API gl_status gl_set_max_cells(uint64_t cap);

/* --- polynomial constructors ------------------------------------------- */

/* Generalized Galois number G_N^(r) by the flag recurrence (r >= 1). */
GL_API gl_status gl_galois_number(uint32_t N, uint32_t r, gl_poly** out);
/* Same value through the descent-weighted inversion statistic (r >= 2). */
GL_API gl_status gl_galois_via_macmahon(uint32_t N, uint32_t r, gl_poly** out);
GL_API gl_status gl_q_factorial(uint32_t k, gl_poly** out);
GL_API gl_status gl_q_binomial(uint32_t n, int64_t k, gl_poly** out);
GL_API gl_status gl_q_multinomial(uint32_t N, const uint32_t* parts, size_t n_parts,
                                  gl_poly** out);

/* --- polynomial inspection --------------------------------------------- */

/* Degree, -1 for the zero polynomial. */
GL_API gl_status gl_poly_degree(const gl_poly* poly, int64_t* out);
/* Decimal coefficient of q^exponent. */
GL_API gl_status gl_poly_coefficient(const gl_poly* poly, uint64_t exponent, char** out);
/* Ascending-power text form, e.g. "3 + 2*q + q^2". */
GL_API gl_status gl_poly_to_text(const gl_poly* poly, char** out);
/* JSON array of decimal coefficient strings. */
GL_API gl_status gl_poly_to_json(const gl_poly* poly, char** out);
/* Exact evaluation at a rational point given as "p" or "p/q". */
GL_API gl_status gl_poly_eval(const gl_poly* poly, const char* rational, char** out);

/* --- reports ------------------------------------------------------------ */

/* Rogers-Szego expansion H_N^(r): JSON list of {composition, coefficients}
 * in lexicographic composition order. */
GL_API gl_status gl_rogers_szego_json(uint32_t N, uint32_t r, char** out);
/* Descent/inversion table of S_N as CSV rows "N,t,exponent,coefficient". */
GL_API gl_status gl_descent_inv_table_csv(uint32_t N, char** out);
/* Normality diagnostics for G_N^(r): exact moments plus the Kolmogorov
 * distance to the standard normal CDF at 10^-precision_digits. */
GL_API gl_status gl_normality_report_json(uint32_t N, uint32_t r, uint32_t precision_digits,
                                          char** out);
GL_API gl_status gl_normality_report_csv_row(uint32_t N, uint32_t r,
                                             uint32_t precision_digits, char** out);
GL_API const char* gl_normality_csv_header(void);
/* Degree-shift data and basic specialization polynomial. */
GL_API gl_status gl_demazure_report_json(uint32_t N, uint32_t r, char** out);
/* Asymptotic linear q-ary code counts (q a prime power). */
GL_API gl_status gl_code_asymptotics_json(uint32_t n, uint64_t q, char** out);
/* Sup-norm gap between N!/r^N * G_N^(r) and the q-factorial, as "p/q". */
GL_API gl_status gl_mahonian_gap(uint32_t N, uint32_t r, char** out);
/* The t-deformed polynomial as text in q and t. */
GL_API gl_status gl_deformed_galois_text(uint32_t N, uint32_t r, char** out);

/* --- verification -------------------------------------------------------- */

/* Runs a named invariant suite: identity, oracle, moments, cumulants,
 * stanley, demazure, codes. Zero-valued bounds select per-suite defaults.
 * *passed receives 1 when every check passed. The report is JSON when
 * as_json is nonzero, plain text otherwise. */
GL_API gl_status gl_verify_suite(const char* suite, uint32_t N_max, uint32_t r_max,
                                 uint32_t q, uint32_t j_max, uint32_t order, uint32_t n_max,
                                 int as_json, char** report, int* passed);

#ifdef __cplusplus
}
#endif

#endif /* GALOISLAB_H */
