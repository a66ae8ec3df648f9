#ifndef BLENDSMITH_H
#define BLENDSMITH_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every fallible call.
 */
typedef enum BsStatus {
  BS_STATUS_OK = 0,
  BS_STATUS_NULL_ARGUMENT = 1,
  BS_STATUS_INVALID_UTF8 = 2,
  BS_STATUS_RESOURCE = 3,
  BS_STATUS_PIPELINE = 4,
  BS_STATUS_INVALID_REQUEST = 5,
  BS_STATUS_INTERNAL = 6,
} BsStatus;

/**
 * Loaded resource store. Immutable after loading, so one handle may be
 * shared across threads.
 */
typedef struct BsEngine BsEngine;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Loads the resource directory at `dir` and stores a new handle in `*out`.
 *
 * # Safety
 * `dir` must be a NUL-terminated string and `out` a valid pointer.
 */
enum BsStatus bs_engine_load(const char *dir, struct BsEngine **out);

/**
 * Releases a handle from [`bs_engine_load`]. Null is ignored.
 *
 * # Safety
 * `engine` must come from [`bs_engine_load`] and not be used afterwards.
 */
void bs_engine_free(struct BsEngine *engine);

/**
 * Runs generation for a JSON `GenerationRequest` and writes the JSON
 * response to `*out_json`.
 *
 * # Safety
 * `engine` must be a live handle; `request_json` NUL-terminated; `out_json` valid.
 */
enum BsStatus bs_engine_generate(const struct BsEngine *engine,
                                 const char *request_json,
                                 char **out_json);

/**
 * Re-scores previously returned names under new weights (JSON `RerankRequest`).
 *
 * # Safety
 * `request_json` NUL-terminated; `out_json` valid.
 */
enum BsStatus bs_rerank(const char *request_json, char **out_json);

/**
 * Appeal of four normalized features (readability, pronounceability,
 * memorability, uniqueness) under four weights in the same order.
 *
 * # Safety
 * `features` and `weights` must point to four doubles; `out` must be valid.
 */
enum BsStatus bs_appeal(const double *features, const double *weights, double *out);

/**
 * Kendall tau-a between two orderings of the same `n` names.
 *
 * # Safety
 * `order_a` and `order_b` must each point to `n` NUL-terminated strings.
 */
enum BsStatus bs_kendall_tau(const char *const *order_a,
                             const char *const *order_b,
                             size_t n,
                             double *out);

/**
 * nDCG of `n` graded relevances listed in system order.
 *
 * # Safety
 * `relevances` must point to `n` doubles; `out` must be valid.
 */
enum BsStatus bs_ndcg(const double *relevances, size_t n, double *out);

/**
 * Message for the last failed call on this thread, or null after a
 * success. Valid until the next call on the same thread.
 */
const char *bs_last_error(void);

/**
 * Releases a string returned through an out-parameter. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void bs_string_free(char *s);

/**
 * Library version as a static NUL-terminated string.
 */
const char *bs_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BLENDSMITH_H */
