#ifndef DCC_SPECTRAL_H
#define DCC_SPECTRAL_H

/* Generated by cbindgen from crates/ffi/src. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every fallible call.
 */
typedef enum {
  DCC_STATUS_OK = 0,
  /**
   * A required pointer argument was NULL.
   */
  DCC_STATUS_NULL_POINTER = 1,
  /**
   * A string argument was not valid UTF-8.
   */
  DCC_STATUS_INVALID_UTF8 = 2,
  /**
   * graph6 input could not be decoded.
   */
  DCC_STATUS_PARSE = 3,
  /**
   * An argument was outside its domain (vertex, tolerance, family parameter, order).
   */
  DCC_STATUS_INVALID_ARGUMENT = 4,
  /**
   * The graph does not meet a precondition (empty, acyclic, disconnected).
   */
  DCC_STATUS_INVALID_GRAPH = 5,
  /**
   * A numerical routine failed to converge or find a root.
   */
  DCC_STATUS_NUMERICAL = 6,
  /**
   * A panic was caught at the boundary.
   */
  DCC_STATUS_INTERNAL = 7,
} DccStatus;

typedef enum {
  DCC_TARGET_CHORDED = 0,
  DCC_TARGET_DCC = 1,
  DCC_TARGET_DCC1 = 2,
  DCC_TARGET_K1P4 = 3,
} DccTarget;

typedef enum {
  DCC_THEOREM_DCC = 0,
  DCC_THEOREM_DCC1 = 1,
  DCC_THEOREM_K1P4 = 2,
  DCC_THEOREM_LEMMA_EDGE_DCC = 3,
  DCC_THEOREM_LEMMA_EDGE_DCC1 = 4,
} DccTheorem;

/**
 * Opaque graph handle.
 */
typedef struct DccGraph DccGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or NULL after a
 * successful one. Valid until the next call into the library on the same
 * thread; do not free.
 */
const char *dcc_last_error_message(void);

/**
 * Library version as a static string.
 */
const char *dcc_version(void);

/**
 * Releases a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void dcc_string_free(char *s);

/**
 * Decodes a graph6 string (at most 64 vertices).
 *
 * # Safety
 * `graph6` must be a NUL-terminated string; `out` must be writable.
 */
DccStatus dcc_graph_from_graph6(const char *graph6, DccGraph **out);

/**
 * Builds a graph on `n` vertices from `edge_count` pairs stored flat in
 * `edges` (`2 * edge_count` entries). `edges` may be NULL when
 * `edge_count` is 0.
 *
 * # Safety
 * `edges` must point to `2 * edge_count` readable values; `out` must be writable.
 */
DccStatus dcc_graph_from_edges(size_t n, const size_t *edges, size_t edge_count, DccGraph **out);

/**
 * Builds a named family member. Parameters equal to 0 are treated as
 * unset. `name` takes the same spellings as the command line (`K11m`,
 * `Hnr`, `K1_rK3`, ...).
 *
 * # Safety
 * `name` must be a NUL-terminated string; `out` must be writable.
 */
DccStatus dcc_family_build(const char *name,
                           size_t n,
                           size_t r,
                           size_t t,
                           size_t k,
                           DccGraph **out);

/**
 * Releases a graph. NULL is ignored.
 *
 * # Safety
 * `g` must come from this library and not have been freed.
 */
void dcc_graph_free(DccGraph *g);

/**
 * Number of vertices; 0 for NULL.
 *
 * # Safety
 * `g` must be NULL or a live handle.
 */
size_t dcc_graph_order(const DccGraph *g);

/**
 * Number of edges; 0 for NULL.
 *
 * # Safety
 * `g` must be NULL or a live handle.
 */
size_t dcc_graph_edge_count(const DccGraph *g);

/**
 * graph6 encoding of `g`. Free with `dcc_string_free`.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
DccStatus dcc_graph_to_graph6(const DccGraph *g, char **out);

/**
 * Canonical graph6 form: equal for two graphs exactly when they are
 * isomorphic. Free with `dcc_string_free`.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
DccStatus dcc_graph_canonical_form(const DccGraph *g, char **out);

/**
 * Spectral radius of the adjacency matrix, to tolerance `tol`.
 *
 * # Safety
 * `g` must be a live handle; `rho` must be writable.
 */
DccStatus dcc_graph_spectral_radius(const DccGraph *g, double tol, double *rho);

/**
 * Perron vector of a connected graph, written into `buf` of length `len`
 * (at least the order of `g`).
 *
 * # Safety
 * `g` must be a live handle; `buf` must hold `len` writable doubles.
 */
DccStatus dcc_graph_perron_vector(const DccGraph *g, double tol, double *buf, size_t len);

/**
 * Searches `g` for `target`. `found` receives 1 or 0. When `witness_json`
 * is non-NULL it receives the witness as JSON (free with
 * `dcc_string_free`), or NULL when nothing was found. Cycle targets give
 * `{"cycle":[...],"chords":[[u,v],...]}`; `DCC_TARGET_K1P4` gives
 * `{"hub":h,"path":[a,b,c,d]}`.
 *
 * # Safety
 * `g` must be a live handle; `found` must be writable; `witness_json` must
 * be NULL or writable.
 */
DccStatus dcc_graph_detect(const DccGraph *g,
                           DccTarget target,
                           int32_t *found,
                           char **witness_json);

/**
 * Runs the exhaustive check for `theorem` at order `n` with `jobs` worker
 * threads (0 picks the default). `verified` receives 1 or 0; when
 * `report_json` is non-NULL it receives the full report as JSON.
 *
 * # Safety
 * `verified` must be writable; `report_json` must be NULL or writable.
 */
DccStatus dcc_verify_theorem(DccTheorem theorem,
                             size_t n,
                             size_t jobs,
                             int32_t *verified,
                             char **report_json);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* DCC_SPECTRAL_H */
