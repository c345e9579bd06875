#ifndef EQCOB_H
#define EQCOB_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum {
  /**
   * Coefficient of `b_k`.
   */
  EQCOB_KIND_SINGLE = 0,
  /**
   * Coefficient of `b_{k-1} b_1`.
   */
  EQCOB_KIND_SPLIT = 1,
} EqcobKind;

typedef enum {
  EQCOB_STATUS_OK = 0,
  EQCOB_STATUS_INVALID_ARGUMENT = 1,
  EQCOB_STATUS_NULL_POINTER = 2,
  EQCOB_STATUS_INCONCLUSIVE = 3,
  EQCOB_STATUS_COMPUTATION_FAILED = 4,
  EQCOB_STATUS_PANIC = 5,
} EqcobStatus;

/**
 * A proven indecomposability certificate.
 */
typedef struct EqcobCertificate EqcobCertificate;

/**
 * A Milnor manifold class with its η-image.
 */
typedef struct EqcobClass EqcobClass;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static NUL-terminated string.
 */
const char *eqcob_version(void);

/**
 * Message of the last failure on this thread; empty if none. Valid until
 * the next failing call on the same thread.
 */
const char *eqcob_last_error_message(void);

/**
 * Builds `H(m, n)`. `hom` is null for the standard `(Z_2)^n` action or a
 * subset list such as `"1;2;3,4"`; `rank` is 0 to infer it.
 *
 * # Safety
 * `hom` is null or a NUL-terminated string; `out` is writable.
 */
EqcobStatus eqcob_class_new(uint32_t m,
                            uint32_t n,
                            const char *hom,
                            uint32_t rank,
                            EqcobClass **out);

/**
 * # Safety
 * `handle` is null or came from [`eqcob_class_new`] and is not used again.
 */
void eqcob_class_free(EqcobClass *handle);

/**
 * Degree `m + n - 1` of the class.
 *
 * # Safety
 * `handle` is a live handle; `out` is writable.
 */
EqcobStatus eqcob_class_degree(const EqcobClass *handle, uint32_t *out);

/**
 * Rank of the acting group.
 *
 * # Safety
 * `handle` is a live handle; `out` is writable.
 */
EqcobStatus eqcob_class_rank(const EqcobClass *handle, uint32_t *out);

/**
 * Number of monomials in η.
 *
 * # Safety
 * `handle` is a live handle; `out` is writable.
 */
EqcobStatus eqcob_class_monomial_count(const EqcobClass *handle, size_t *out);

/**
 * # Safety
 * `handle` is a live handle; `out` is writable.
 */
EqcobStatus eqcob_class_is_nonbounding(const EqcobClass *handle, bool *out);

/**
 * η as text, e.g. `Y{1}Y{2}Y{3}+...`. Free with [`eqcob_string_free`].
 *
 * # Safety
 * `handle` is a live handle; `out` is writable.
 */
EqcobStatus eqcob_class_to_string(const EqcobClass *handle, char **out);

/**
 * Searches for a certificate. With `k_min = k_max = 0` the default policy
 * is used; otherwise every `k` in `k_min..=k_max`. Returns
 * `EQCOB_STATUS_INCONCLUSIVE` with `*out = NULL` if none fires.
 *
 * # Safety
 * `handle` is a live handle; `out` is writable.
 */
EqcobStatus eqcob_certify(const EqcobClass *handle,
                          uint32_t k_min,
                          uint32_t k_max,
                          EqcobCertificate **out);

/**
 * # Safety
 * `cert` is null or came from [`eqcob_certify`] and is not used again.
 */
void eqcob_certificate_free(EqcobCertificate *cert);

/**
 * # Safety
 * `cert` is a live handle; `out` is writable.
 */
EqcobStatus eqcob_certificate_k(const EqcobCertificate *cert, uint32_t *out);

/**
 * # Safety
 * `cert` is a live handle; `out` is writable.
 */
EqcobStatus eqcob_certificate_kind(const EqcobCertificate *cert, EqcobKind *out);

/**
 * The witness coefficient as `numerator / (form)...`. Free with
 * [`eqcob_string_free`].
 *
 * # Safety
 * `cert` is a live handle; `out` is writable.
 */
EqcobStatus eqcob_certificate_witness(const EqcobCertificate *cert, char **out);

/**
 * The certificate document in the CLI JSON schema. Free with
 * [`eqcob_string_free`].
 *
 * # Safety
 * `cert` is a live handle; `out` is writable.
 */
EqcobStatus eqcob_certificate_to_json(const EqcobCertificate *cert, char **out);

/**
 * Recomputes the witness of a JSON certificate. `*out` is false when the
 * document parses but does not check out.
 *
 * # Safety
 * `json` is a NUL-terminated string; `out` is writable.
 */
EqcobStatus eqcob_recheck_json(const char *json, bool *out);

/**
 * # Safety
 * `s` is null or a string returned by this library, not freed before.
 */
void eqcob_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* EQCOB_H */
