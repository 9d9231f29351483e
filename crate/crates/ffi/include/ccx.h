#ifndef CCX_H
#define CCX_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every fallible call.
 */
typedef enum CcxStatus {
  CCX_STATUS_OK = 0,
  CCX_STATUS_NULL_ARGUMENT = 1,
  CCX_STATUS_INVALID_UTF8 = 2,
  CCX_STATUS_PARSE = 3,
  CCX_STATUS_UNKNOWN_VERTEX = 4,
  CCX_STATUS_NOT_CUBING = 5,
  CCX_STATUS_INVALID_MAP = 6,
  CCX_STATUS_FAILED = 7,
  CCX_STATUS_PANIC = 8,
} CcxStatus;

typedef enum CcxVerdict {
  CCX_VERDICT_ELLIPTIC = 0,
  CCX_VERDICT_HYPERBOLIC = 1,
  CCX_VERDICT_INVERSION = 2,
  CCX_VERDICT_INDETERMINATE = 3,
} CcxVerdict;

/**
 * A finite cube complex.
 */
typedef struct CcxComplex CcxComplex;

/**
 * An automorphism of a particular complex.
 */
typedef struct CcxMap CcxMap;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread; empty after success.
 * The pointer stays valid until the next call on this thread.
 */
const char *ccx_last_error(void);

/**
 * Releases a string returned by this library.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void ccx_string_free(char *s);

/**
 * Parses a CCX document.
 *
 * # Safety
 * `ccx` must be a NUL-terminated string and `out_complex` a valid pointer.
 */
enum CcxStatus ccx_complex_parse(const char *ccx, struct CcxComplex **out_complex);

/**
 * # Safety
 * `c` must be null or a handle from this library not yet freed.
 */
void ccx_complex_free(struct CcxComplex *c);

/**
 * # Safety
 * `c` must be a live handle and `out_count` a valid pointer.
 */
enum CcxStatus ccx_complex_vertex_count(const struct CcxComplex *c, size_t *out_count);

/**
 * Sets `*out_is_cubing` to whether all cubing checks pass.
 *
 * # Safety
 * `c` must be a live handle and `out_is_cubing` a valid pointer.
 */
enum CcxStatus ccx_complex_validate(const struct CcxComplex *c, bool *out_is_cubing);

/**
 * Edge-path distance between two vertices named by token.
 *
 * # Safety
 * `c` must be a live handle, `u` and `v` NUL-terminated strings and
 * `out_distance` a valid pointer.
 */
enum CcxStatus ccx_complex_distance(const struct CcxComplex *c,
                                    const char *u,
                                    const char *v,
                                    size_t *out_distance);

/**
 * Canonical CCX text; free with [`ccx_string_free`].
 *
 * # Safety
 * `c` must be a live handle and `out_text` a valid pointer.
 */
enum CcxStatus ccx_complex_emit(const struct CcxComplex *c, char **out_text);

/**
 * The cubical subdivision as a new handle.
 *
 * # Safety
 * `c` must be a live handle and `out_complex` a valid pointer.
 */
enum CcxStatus ccx_complex_subdivide(const struct CcxComplex *c, struct CcxComplex **out_complex);

/**
 * Parses an AUT document against `c`.
 *
 * # Safety
 * `c` must be a live handle, `aut` a NUL-terminated string and `out_map`
 * a valid pointer.
 */
enum CcxStatus ccx_map_parse(const struct CcxComplex *c, const char *aut, struct CcxMap **out_map);

/**
 * # Safety
 * `m` must be null or a handle from this library not yet freed.
 */
void ccx_map_free(struct CcxMap *m);

/**
 * Classifies `m` acting on `c`. `max_power = 0` checks inversions up to
 * the order of the map. `out_report` may be null; otherwise it receives the
 * verdict line and certificate, one fact per line.
 *
 * # Safety
 * `c` and `m` must be live handles, `m` parsed against `c`; `out_verdict`
 * must be valid and `out_report` null or valid.
 */
enum CcxStatus ccx_classify(const struct CcxComplex *c,
                            const struct CcxMap *m,
                            size_t max_power,
                            enum CcxVerdict *out_verdict,
                            char **out_report);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CCX_H */
