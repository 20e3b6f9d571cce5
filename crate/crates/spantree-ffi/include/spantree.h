#ifndef SPANTREE_H
#define SPANTREE_H

/* Generated by cbindgen from spantree-ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Success.
#define ST_OK 0

// A required pointer argument was null.
#define ST_ERR_NULL -1

// Arguments were out of domain (bad sizes, bad edge list, bad string).
#define ST_ERR_INVALID -2

// The output buffer is too small; retry with the returned capacity.
#define ST_ERR_BUFFER -3

// Opaque graph handle.
typedef struct StGraph StGraph;

// Opaque listing handle; yields spanning trees one at a time.
typedef struct StListing StListing;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Copies the last error message on this thread into `buf` (NUL-terminated,
// truncating). Returns the full message length in bytes.
//
// # Safety
// `buf` must point to `cap` writable bytes, or be null (query length only).
size_t st_last_error(char *buf, size_t cap);

// Complete graph K_n.
struct StGraph *st_graph_complete(uint32_t n);

// Complete bipartite graph K_{m,n} on parts {1..m} and {m+1..m+n}.
struct StGraph *st_graph_bipartite(uint32_t m, uint32_t n);

// Fan graph: hub 1 plus the path 2-3-...-n.
struct StGraph *st_graph_fan(uint32_t n);

// Wheel graph: fan plus the closing rim edge.
struct StGraph *st_graph_wheel(uint32_t n);

// The Petersen graph (10 vertices, 15 edges).
struct StGraph *st_graph_petersen(void);

// Custom graph over vertices 1..=n from `edge_count` (u, v) pairs laid out
// flat as u0, v0, u1, v1, ...
//
// # Safety
// `edges` must point to `2 * edge_count` readable u32 values.
struct StGraph *st_graph_custom(uint32_t n, const uint32_t *edges, size_t edge_count);

// # Safety
// `graph` must come from a graph constructor and not be freed twice.
void st_graph_free(struct StGraph *graph);

// Vertex count, or ST_ERR_NULL.
//
// # Safety
// `graph` must be a live graph handle or null.
int64_t st_graph_vertex_count(const struct StGraph *graph);

// Edge count, or ST_ERR_NULL.
//
// # Safety
// `graph` must be a live graph handle or null.
int64_t st_graph_edge_count(const struct StGraph *graph);

// Writes the exact spanning-tree count as a decimal string. Returns the
// length in bytes excluding the NUL, or ST_ERR_BUFFER when `cap` is too
// small (the required capacity is the return of a null-buffer call plus 1).
//
// # Safety
// `graph` must be a live graph handle; `buf` must hold `cap` writable bytes
// or be null.
int64_t st_tree_count(const struct StGraph *graph, char *buf, size_t cap);

// Pivot Gray code listing for K_n: consecutive trees exchange edges around
// a common vertex, in constant amortized time per tree.
struct StListing *st_listing_pivot(uint32_t n);

// Edge-exchange listing for an arbitrary connected graph.
//
// # Safety
// `graph` must be a live graph handle.
struct StListing *st_listing_edge_exchange(const struct StGraph *graph);

// Edge-exchange listing starting from an explicit tree given in compact
// form (character i is the parent of vertex i+2; 'a' = 10).
//
// # Safety
// `graph` must be a live graph handle; `compact_start` a NUL-terminated
// string.
struct StListing *st_listing_edge_exchange_from(const struct StGraph *graph, const char *compact_start);

// Constant-amortized-time edge-exchange listing for K_{m,n}.
struct StListing *st_listing_bipartite(uint32_t m, uint32_t n);

// Advances the listing. Returns 1 with the tree's compact string written to
// `buf`, 0 when the listing is exhausted, or a negative status code.
//
// # Safety
// `listing` must be a live listing handle; `buf` must hold `cap` writable
// bytes.
int st_listing_next(struct StListing *listing, char *buf, size_t cap);

// Endpoints of the edge exchange that produced the latest tree, as
// (removed_u, removed_v, added_u, added_v); all -1 for the first tree.
//
// # Safety
// `listing` must be a live listing handle; `out` must hold four i32 slots.
int st_listing_delta(const struct StListing *listing, int32_t *out);

// Trees produced so far.
//
// # Safety
// `listing` must be a live listing handle or null.
uint64_t st_listing_emitted(const struct StListing *listing);

// Instrumented primitive-operation counter for the run so far.
//
// # Safety
// `listing` must be a live listing handle or null.
uint64_t st_listing_work(const struct StListing *listing);

// # Safety
// `listing` must come from a listing constructor and not be freed twice.
void st_listing_free(struct StListing *listing);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SPANTREE_H */
