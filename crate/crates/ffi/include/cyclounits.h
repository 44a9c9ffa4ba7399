#ifndef CYCLOUNITS_H
#define CYCLOUNITS_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Which of the four shapes a classification has.
typedef enum CuClassKind {
  // Every `n`.
  CU_CLASS_KIND_ALL = 0,
  // No `n`.
  CU_CLASS_KIND_EMPTY = 1,
  // Infinitely many `n`: residues modulo a fixed modulus.
  CU_CLASS_KIND_INFINITE = 2,
  // Finitely many `n`: a bound plus the members found by scanning.
  CU_CLASS_KIND_FINITE = 3,
} CuClassKind;

// Result of every fallible call.
typedef enum CuStatus {
  CU_STATUS_OK = 0,
  CU_STATUS_NULL_POINTER = 1,
  CU_STATUS_INVALID_UTF8 = 2,
  CU_STATUS_PARSE = 3,
  CU_STATUS_INVALID_INPUT = 4,
  CU_STATUS_SIZE_LIMIT = 5,
  CU_STATUS_ARITHMETIC = 6,
  CU_STATUS_INTERNAL = 7,
  CU_STATUS_PANIC = 8,
} CuStatus;

// Opaque result of [`cu_classify`].
typedef struct CuClassification CuClassification;

// Opaque integer polynomial.
typedef struct CuPoly CuPoly;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the most recent failure on this thread, or null. The pointer
// stays valid until the next `cu_` call on this thread.
const char *cu_last_error_message(void);

// Library version as a static NUL-terminated string.
const char *cu_version(void);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` must be null or a string returned by this library, not yet freed.
void cu_string_free(char *s);

// Parses an expression such as `x^2-x+1` or `coeffs: 1,-1,1`.
//
// # Safety
// `text` must be a NUL-terminated string; `out` must be writable.
enum CuStatus cu_poly_parse(const char *text, struct CuPoly **out);

// Builds a polynomial from `len` coefficients, constant term first.
//
// # Safety
// `coeffs` must point to `len` readable values (or be null with `len == 0`);
// `out` must be writable.
enum CuStatus cu_poly_from_coeffs(const int64_t *coeffs, size_t len, struct CuPoly **out);

// The `m`-th cyclotomic polynomial.
//
// # Safety
// `out` must be writable.
enum CuStatus cu_poly_cyclotomic(uint64_t m, struct CuPoly **out);

// Releases a polynomial. Null is ignored.
//
// # Safety
// `p` must be null or a handle from this library, not yet freed.
void cu_poly_free(struct CuPoly *p);

// Degree of `p`, or -1 for the zero polynomial.
//
// # Safety
// `p` must be a live handle; `out` must be writable.
enum CuStatus cu_poly_degree(const struct CuPoly *p, int64_t *out);

// Canonical text form, e.g. `1-x+x^2`. Free with [`cu_string_free`].
//
// # Safety
// `p` must be a live handle; `out` must be writable.
enum CuStatus cu_poly_to_string(const struct CuPoly *p, char **out);

// Decides whether `f` evaluated at an `n`-th root of `a` is a unit.
// `resultant_out` may be null; otherwise it receives the decimal norm.
//
// # Safety
// `f` must be a live handle; `is_unit` must be writable; `resultant_out`
// must be null or writable.
enum CuStatus cu_check_units(const struct CuPoly *f,
                             uint64_t n,
                             int64_t a,
                             bool *is_unit,
                             char **resultant_out);

// Bezout certificate `p*f + q*(x^n - a) = 1`. When `f` is not a unit,
// `is_unit` is false and both outputs are set to null.
//
// # Safety
// `f` must be a live handle; the three out-pointers must be writable.
enum CuStatus cu_certificate(const struct CuPoly *f,
                             uint64_t n,
                             int64_t a,
                             bool *is_unit,
                             struct CuPoly **p_out,
                             struct CuPoly **q_out);

// Whether `f` defines generic units. When it does, `modulus` receives the
// lcm of the cyclotomic indices; otherwise 0.
//
// # Safety
// `f` must be a live handle; both out-pointers must be writable.
enum CuStatus cu_is_generic(const struct CuPoly *f, bool *generic, uint64_t *modulus);

// Decides `Φ_m(a) = 1` and `Φ_m(a) = -1` without evaluating.
//
// # Safety
// Both out-pointers must be writable.
enum CuStatus cu_phi_class(uint64_t m, int64_t a, bool *plus_one, bool *minus_one);

// Upper bound on the number of `n` when that set is finite, as a decimal
// string. Free with [`cu_string_free`].
//
// # Safety
// `f` must be a live handle; `out` must be writable.
enum CuStatus cu_bound(const struct CuPoly *f, int64_t a, char **out);

// Classifies all `n` at once. Finite sets are scanned over `1..=scan_limit`.
//
// # Safety
// `f` must be a live handle; `out` must be writable.
enum CuStatus cu_classify(const struct CuPoly *f,
                          int64_t a,
                          uint64_t scan_limit,
                          struct CuClassification **out);

// Releases a classification. Null is ignored.
//
// # Safety
// `c` must be null or a handle from this library, not yet freed.
void cu_classification_free(struct CuClassification *c);

// Shape of the classification.
//
// # Safety
// `c` must be a live handle; `out` must be writable.
enum CuStatus cu_classification_kind(const struct CuClassification *c, enum CuClassKind *out);

// Residue modulus for `Infinite`, 0 otherwise.
//
// # Safety
// `c` must be a live handle; `out` must be writable.
enum CuStatus cu_classification_modulus(const struct CuClassification *c, uint64_t *out);

// Residues for `Infinite`, scanned members for `Finite`, empty otherwise.
// The array is owned by the handle and lives as long as it does.
//
// # Safety
// `c` must be a live handle; both out-pointers must be writable.
enum CuStatus cu_classification_values(const struct CuClassification *c,
                                       const uint64_t **values,
                                       size_t *len);

// Count bound for `Finite` as a decimal string, null otherwise.
//
// # Safety
// `c` must be a live handle; `out` must be writable.
enum CuStatus cu_classification_bound(const struct CuClassification *c, char **out);

// Whether `n` is in the set. For `Finite` this reflects the scan only.
//
// # Safety
// `c` must be a live handle; `out` must be writable.
enum CuStatus cu_classification_contains(const struct CuClassification *c, uint64_t n, bool *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CYCLOUNITS_H */
