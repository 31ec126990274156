#ifndef TWOFOLD_H
#define TWOFOLD_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every fallible call.
 */
typedef enum TfStatus {
  TF_STATUS_OK = 0,
  TF_STATUS_NULL_POINTER = 1,
  TF_STATUS_INVALID_VERTEX = 2,
  TF_STATUS_PARSE = 3,
  TF_STATUS_UNKNOWN_FIXTURE = 4,
  TF_STATUS_INVALID_PARAMETER = 5,
  TF_STATUS_SIZE_MISMATCH = 6,
  TF_STATUS_CAP_EXCEEDED = 7,
  TF_STATUS_NOT_A_GRAPH = 8,
  TF_STATUS_NOT_BIPARTITE = 9,
  TF_STATUS_NOT_CONNECTED = 10,
  TF_STATUS_BUFFER_TOO_SMALL = 11,
  TF_STATUS_INVALID_UTF8 = 12,
  TF_STATUS_FAILED = 13,
  TF_STATUS_PANIC = 14,
} TfStatus;

/**
 * Opaque graph handle.
 */
typedef struct TfGraph TfGraph;

/**
 * Group orders of a stability report; orders saturate at `UINT64_MAX`.
 */
typedef struct TfStabilityReport {
  bool stable;
  uint64_t aut_order;
  uint64_t tf_aut_order;
  uint64_t cdc_aut_order;
  uint64_t index;
} TfStabilityReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Static description of a status code. Never null.
 */
const char *tf_status_message(enum TfStatus status);

/**
 * Message of the last failure on this thread; empty if none. Valid until the
 * next failing call on the same thread.
 */
const char *tf_last_error(void);

/**
 * Edgeless graph on `n` vertices.
 */
struct TfGraph *tf_graph_new(size_t n);

/**
 * # Safety
 * `g` must be null or a handle from this library that has not been freed.
 */
void tf_graph_free(struct TfGraph *g);

/**
 * Adds the arc `(tail, head)`; adding an existing arc is a no-op.
 *
 * # Safety
 * `g` must be a live handle.
 */
enum TfStatus tf_graph_add_arc(struct TfGraph *g, size_t tail, size_t head);

/**
 * Parses `mg v1` text into a new handle stored in `*out`.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` writable.
 */
enum TfStatus tf_graph_parse(const char *text, struct TfGraph **out);

/**
 * Named fixture such as `petersen` or `cycle(6)`.
 *
 * # Safety
 * `name` must be a NUL-terminated string and `out` writable.
 */
enum TfStatus tf_graph_fixture(const char *name, struct TfGraph **out);

/**
 * # Safety
 * `g` must be a live handle.
 */
size_t tf_graph_vertex_count(const struct TfGraph *g);

/**
 * # Safety
 * `g` must be a live handle.
 */
size_t tf_graph_arc_count(const struct TfGraph *g);

/**
 * Whether `(tail, head)` is an arc; false for a null handle.
 *
 * # Safety
 * `g` must be a live handle.
 */
bool tf_graph_has_arc(const struct TfGraph *g, size_t tail, size_t head);

/**
 * Canonical `mg v1` text; release with `tf_string_free`. Null on failure.
 *
 * # Safety
 * `g` must be a live handle.
 */
char *tf_graph_to_string(const struct TfGraph *g);

/**
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void tf_string_free(char *s);

/**
 * Incidence double cover (`2n` vertices, side `s` vertex `u` at `s*n + u`).
 *
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum TfStatus tf_graph_idc(const struct TfGraph *g, struct TfGraph **out);

/**
 * Alternating double cover with isolated cover vertices removed.
 *
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum TfStatus tf_graph_adc(const struct TfGraph *g, struct TfGraph **out);

/**
 * Canonical double cover.
 *
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum TfStatus tf_graph_cdc(const struct TfGraph *g, struct TfGraph **out);

/**
 * Searches for a TF-isomorphism. On success `*found` says whether one
 * exists; if so, `alpha` and `beta` (each of length `len`, at least the
 * vertex count) receive the two maps as image arrays.
 *
 * # Safety
 * Handles must be live; `alpha` and `beta` must hold `len` elements.
 */
enum TfStatus tf_find_tf_isomorphism(const struct TfGraph *g,
                                     const struct TfGraph *h,
                                     size_t *alpha,
                                     size_t *beta,
                                     size_t len,
                                     bool *found);

/**
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum TfStatus tf_is_stable(const struct TfGraph *g, struct TfStabilityReport *out);

/**
 * Graphs sharing the neighbourhood family of a connected non-bipartite
 * graph, counted up to isomorphism.
 *
 * # Safety
 * `g` must be a live handle; `total` and `including_self` writable.
 */
enum TfStatus tf_count_reconstructions(const struct TfGraph *g,
                                       size_t *total,
                                       bool *including_self);

/**
 * Number of classes of the arc relation and of frontier vertices.
 *
 * # Safety
 * `g` must be a live handle; outputs writable.
 */
enum TfStatus tf_arc_classes(const struct TfGraph *g, size_t *class_count, size_t *frontier_count);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TWOFOLD_H */
