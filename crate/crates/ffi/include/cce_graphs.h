#ifndef CCE_GRAPHS_H
#define CCE_GRAPHS_H

/* Generated by cbindgen from cce-graphs-ffi. Do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Outcome of a fallible call.
 */
typedef enum {
  CCE_STATUS_OK = 0,
  CCE_STATUS_NULL_POINTER = 1,
  CCE_STATUS_INVALID_UTF8 = 2,
  CCE_STATUS_PARSE_ERROR = 3,
  CCE_STATUS_INVALID_INPUT = 4,
  CCE_STATUS_NOT_REALIZABLE = 5,
  CCE_STATUS_PRECONDITION_FAILED = 6,
} CceStatus;

/**
 * Why a component multiset was accepted or rejected.
 */
typedef enum {
  CCE_REASON_ALL_GOOD = 0,
  CCE_REASON_SINGLE_NONTRIVIAL_PATH = 1,
  CCE_REASON_NOT_PATHS_AND_CYCLES = 2,
  CCE_REASON_HOLE_FORBIDDEN = 3,
} CceReason;

/**
 * Opaque digraph handle.
 */
typedef struct CceDigraph CceDigraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread, or NULL when the
 * last call succeeded. The pointer stays valid until the next failing
 * call on the same thread; do not free it.
 */
const char *cce_last_error_message(void);

/**
 * Parses the digraph text format (`digraph <n>` header, one `<u> <v>`
 * arc per line) into a new handle stored in `*out`.
 *
 * # Safety
 * `text` must point to a NUL-terminated string and `out` to writable
 * storage for one pointer.
 */
CceStatus cce_digraph_parse(const char *text, CceDigraph **out);

/**
 * Builds a digraph on vertices `1..=n` from `count` arcs given as
 * parallel tail/head arrays.
 *
 * # Safety
 * `tails` and `heads` must point to `count` readable u32 values each
 * (or be NULL when `count` is 0); `out` must be writable.
 */
CceStatus cce_digraph_from_arcs(uint32_t n,
                                const uint32_t *tails,
                                const uint32_t *heads,
                                uintptr_t count,
                                CceDigraph **out);

/**
 * Releases a handle returned by this library. NULL is a no-op.
 *
 * # Safety
 * `d` must be a pointer previously returned by this library and not yet
 * freed.
 */
void cce_digraph_free(CceDigraph *d);

/**
 * Number of vertices, or 0 for NULL.
 *
 * # Safety
 * `d` must be NULL or a live handle.
 */
uint32_t cce_digraph_vertex_count(const CceDigraph *d);

/**
 * Number of arcs, or 0 for NULL.
 *
 * # Safety
 * `d` must be NULL or a live handle.
 */
uintptr_t cce_digraph_arc_count(const CceDigraph *d);

/**
 * The digraph in its text format. Free with [`cce_string_free`];
 * NULL on NULL input.
 *
 * # Safety
 * `d` must be NULL or a live handle.
 */
char *cce_digraph_to_text(const CceDigraph *d);

/**
 * Releases a string returned by this library. NULL is a no-op.
 *
 * # Safety
 * `s` must be a string previously returned by this library and not yet
 * freed.
 */
void cce_string_free(char *s);

/**
 * Writes into `*out` whether every vertex satisfies the degree caps.
 *
 * # Safety
 * `d` must be a live handle and `out` writable.
 */
CceStatus cce_digraph_is_bounded(const CceDigraph *d, uint32_t max_in, uint32_t max_out, bool *out);

/**
 * Writes into `*out` whether the digraph has no directed cycle.
 *
 * # Safety
 * `d` must be a live handle and `out` writable.
 */
CceStatus cce_digraph_is_acyclic(const CceDigraph *d, bool *out);

/**
 * Writes into `*out` whether no single-arc deletion preserves the CCE
 * graph. Fails with `PRECONDITION_FAILED` unless the digraph is acyclic
 * with in/outdegrees at most 2.
 *
 * # Safety
 * `d` must be a live handle and `out` writable.
 */
CceStatus cce_digraph_is_minimal(const CceDigraph *d, bool *out);

/**
 * A new handle for the digraph with every arc reversed; NULL on NULL.
 *
 * # Safety
 * `d` must be NULL or a live handle.
 */
CceDigraph *cce_digraph_reverse(const CceDigraph *d);

/**
 * A new handle for the disjoint union; the second block is relabeled
 * past the first. NULL if either input is NULL.
 *
 * # Safety
 * `a` and `b` must be NULL or live handles.
 */
CceDigraph *cce_digraph_disjoint_union(const CceDigraph *a, const CceDigraph *b);

/**
 * The CCE graph in the undirected text format (`graph <n>` header).
 * Free with [`cce_string_free`]; NULL on NULL input.
 *
 * # Safety
 * `d` must be NULL or a live handle.
 */
char *cce_cce_graph_text(const CceDigraph *d);

/**
 * The competition graph in the undirected text format.
 *
 * # Safety
 * `d` must be NULL or a live handle.
 */
char *cce_competition_graph_text(const CceDigraph *d);

/**
 * The component multiset of the CCE graph, e.g. `C3 + 6xP1`. NULL (with
 * an error message) when some component is neither a path nor a cycle.
 *
 * # Safety
 * `d` must be NULL or a live handle.
 */
char *cce_cce_spec_text(const CceDigraph *d);

/**
 * Decides whether the multiset written in `spec` (grammar `C3 + 6xP1`)
 * is realizable as the CCE graph of a digraph with in/outdegrees at most
 * 2; with `interval`, additionally requires an interval realization.
 * Writes the verdict and its reason.
 *
 * # Safety
 * `spec` must be NUL-terminated; `answer` and `reason` must be writable.
 */
CceStatus cce_recognize(const char *spec, bool interval, bool *answer, CceReason *reason);

/**
 * Builds a witness digraph whose CCE graph realizes the multiset in
 * `spec` exactly; `NOT_REALIZABLE` when the multiset is rejected.
 *
 * # Safety
 * `spec` must be NUL-terminated and `out` writable.
 */
CceStatus cce_synthesize(const char *spec, CceDigraph **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CCE_GRAPHS_H */
