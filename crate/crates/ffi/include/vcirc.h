#ifndef VCIRC_H
#define VCIRC_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Singleton-bound class of a half-rate code.
 */
typedef enum VcCodeClass {
  VC_CODE_CLASS_EXTREMAL = 0,
  VC_CODE_CLASS_NEAR_EXTREMAL = 1,
  VC_CODE_CLASS_ORDINARY = 2,
  VC_CODE_CLASS_BOUND_VIOLATING = 3,
} VcCodeClass;

/**
 * Result codes shared by every fallible function.
 */
typedef enum VcStatus {
  VC_STATUS_OK = 0,
  VC_STATUS_NULL_POINTER = 1,
  VC_STATUS_INVALID_ARGUMENT = 2,
  VC_STATUS_OUT_OF_RANGE = 3,
  VC_STATUS_LENGTH_MISMATCH = 4,
  VC_STATUS_FIELD_MISMATCH = 5,
  VC_STATUS_NOT_VECTOR_CIRCULANT = 6,
  VC_STATUS_TRIVIAL_CODE = 7,
  VC_STATUS_ENUMERATION_GUARD = 8,
  VC_STATUS_SEARCH_GUARD = 9,
  VC_STATUS_BUFFER_TOO_SMALL = 10,
  VC_STATUS_INTERNAL = 11,
  VC_STATUS_PANIC = 12,
} VcStatus;

/**
 * Opaque additive code handle.
 */
typedef struct VcCode VcCode;

/**
 * Opaque finite field handle.
 */
typedef struct VcField VcField;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or NULL. The pointer
 * stays valid until the next vcirc call on the same thread.
 */
const char *vc_last_error_message(void);

/**
 * Creates GF(p^m) with the built-in reduction polynomial.
 *
 * # Safety
 * `out` must be a valid pointer to writable storage for one handle.
 */
enum VcStatus vc_field_new(uint32_t p, uint32_t m, struct VcField **out);

/**
 * Creates GF(p^m) with an explicit monic reduction polynomial of `m + 1`
 * coefficients, lowest degree first.
 *
 * # Safety
 * `modulus` must point to `m + 1` readable bytes; `out` as in [`vc_field_new`].
 */
enum VcStatus vc_field_new_with_modulus(uint32_t p,
                                        uint32_t m,
                                        const uint8_t *modulus,
                                        struct VcField **out);

/**
 * Releases a field handle. NULL is ignored.
 *
 * # Safety
 * `field` must come from a vcirc constructor and not be freed twice.
 */
void vc_field_free(struct VcField *field);

/**
 * Field order q, or 0 for NULL.
 *
 * # Safety
 * `field` must be NULL or a live handle.
 */
uint32_t vc_field_order(const struct VcField *field);

/**
 * `*out = a + b`.
 *
 * # Safety
 * `field` must be a live handle and `out` writable.
 */
enum VcStatus vc_field_add(const struct VcField *field, uint8_t a, uint8_t b, uint8_t *out);

/**
 * `*out = a * b`.
 *
 * # Safety
 * As [`vc_field_add`].
 */
enum VcStatus vc_field_mul(const struct VcField *field, uint8_t a, uint8_t b, uint8_t *out);

/**
 * `*out = 1 / a`; `VC_STATUS_OUT_OF_RANGE` for `a = 0`.
 *
 * # Safety
 * As [`vc_field_add`].
 */
enum VcStatus vc_field_inv(const struct VcField *field, uint8_t a, uint8_t *out);

/**
 * One lambda-vector-cyclic shift of `v` into `out` (all of length `n`).
 *
 * # Safety
 * `lambda`, `v` readable and `out` writable for `n` bytes.
 */
enum VcStatus vc_vector_cyclic_shift(const struct VcField *field,
                                     const uint8_t *lambda,
                                     const uint8_t *v,
                                     size_t n,
                                     uint8_t *out);

/**
 * `cir_lambda(v)` into the row-major `n * n` buffer `out`.
 *
 * # Safety
 * `lambda`, `v` readable for `n` bytes; `out` writable for `n * n` bytes.
 */
enum VcStatus vc_vec_circulant(const struct VcField *field,
                               const uint8_t *lambda,
                               const uint8_t *v,
                               size_t n,
                               uint8_t *out);

/**
 * `T_lambda` into the row-major `n * n` buffer `out`.
 *
 * # Safety
 * `lambda` readable for `n` bytes; `out` writable for `n * n` bytes.
 */
enum VcStatus vc_companion_matrix(const struct VcField *field,
                                  const uint8_t *lambda,
                                  size_t n,
                                  uint8_t *out);

/**
 * Whether `T_lambda` is invertible.
 *
 * # Safety
 * `lambda` readable for `n` bytes; `out` writable.
 */
enum VcStatus vc_is_companion_invertible(const struct VcField *field,
                                         const uint8_t *lambda,
                                         size_t n,
                                         bool *out);

/**
 * Whether the row-major `n * n` matrix is lambda-vector-circulant.
 *
 * # Safety
 * `lambda` readable for `n` bytes, `matrix` for `n * n`; `out` writable.
 */
enum VcStatus vc_is_vector_circulant(const struct VcField *field,
                                     const uint8_t *lambda,
                                     size_t n,
                                     const uint8_t *matrix,
                                     bool *out);

/**
 * Product of two residues in `F[x] / <x^n - lambda(x)>`. Residues are
 * coefficient vectors of length `n`, lowest degree first.
 *
 * # Safety
 * `lambda`, `a`, `b` readable and `out` writable for `n` bytes.
 */
enum VcStatus vc_quotient_mul(const struct VcField *field,
                              const uint8_t *lambda,
                              size_t n,
                              const uint8_t *a,
                              const uint8_t *b,
                              uint8_t *out);

/**
 * The additive code over GF(4) generated by `cir_lambda(v)`.
 *
 * # Safety
 * `lambda`, `v` readable for `n` bytes; `out` writable.
 */
enum VcStatus vc_code_new(const uint8_t *lambda, const uint8_t *v, size_t n, struct VcCode **out);

/**
 * The additive span of the rows of a row-major `rows * cols` GF(4) matrix.
 *
 * # Safety
 * `data` readable for `rows * cols` bytes; `out` writable.
 */
enum VcStatus vc_code_from_generator(const uint8_t *data,
                                     size_t rows,
                                     size_t cols,
                                     struct VcCode **out);

/**
 * Releases a code handle. NULL is ignored.
 *
 * # Safety
 * `code` must come from a vcirc constructor and not be freed twice.
 */
void vc_code_free(struct VcCode *code);

/**
 * Code length n (0 for NULL).
 *
 * # Safety
 * `code` must be NULL or a live handle.
 */
size_t vc_code_length(const struct VcCode *code);

/**
 * Binary dimension k (0 for NULL).
 *
 * # Safety
 * `code` must be NULL or a live handle.
 */
size_t vc_code_dimension(const struct VcCode *code);

/**
 * Minimum distance; `VC_STATUS_TRIVIAL_CODE` when k = 0.
 *
 * # Safety
 * `code` live, `out` writable.
 */
enum VcStatus vc_code_min_distance(const struct VcCode *code, size_t *out);

/**
 * Weight distribution `W[0..=n]` into `out`, which must hold `len >= n + 1`
 * entries.
 *
 * # Safety
 * `code` live, `out` writable for `len` entries.
 */
enum VcStatus vc_code_weight_distribution(const struct VcCode *code, uint64_t *out, size_t len);

/**
 * Position of an `(n, 2^k, d)` code relative to `d <= floor(n/2) + 1`.
 */
enum VcCodeClass vc_classify(size_t n, size_t k, size_t d);

/**
 * Recomputes the built-in table of best vector-circulant codes.
 *
 * # Safety
 * `passed` and `total` writable.
 */
enum VcStatus vc_verify_default_table(size_t *passed, size_t *total);

/**
 * Runs a search and returns its JSON record in `*out_json`, to be released
 * with [`vc_string_free`]. `mode` is `"exhaustive"` or `"random"`.
 *
 * # Safety
 * `mode` must be a NUL-terminated string; `out_json` writable.
 */
enum VcStatus vc_search_json(size_t n,
                             const char *mode,
                             uint64_t seed,
                             uint64_t budget,
                             size_t workers,
                             bool allow_large,
                             char **out_json);

/**
 * Releases a string returned by vcirc. NULL is ignored.
 *
 * # Safety
 * `s` must come from a vcirc function and not be freed twice.
 */
void vc_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* VCIRC_H */
