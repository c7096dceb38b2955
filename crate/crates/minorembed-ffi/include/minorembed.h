#ifndef MINOREMBED_H
#define MINOREMBED_H

/* Generated by cbindgen from minorembed-ffi; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every fallible entry point.
 */
typedef enum me_status {
  MeStatusOk = 0,
  /**
   * A required pointer argument was null.
   */
  MeStatusNullPointer = 1,
  /**
   * An argument was out of range (bad vertex id, zero-size graph, ...).
   */
  MeStatusBadArgument = 2,
  /**
   * The guest has more vertices than the host.
   */
  MeStatusGuestTooLarge = 3,
  /**
   * The heuristic finished without a valid embedding; the returned
   * handle holds the best overlapping decomposition instead.
   */
  MeStatusNoEmbedding = 4,
  /**
   * The output buffer was too small.
   */
  MeStatusBufferTooSmall = 5,
  /**
   * Internal invariant failure (a bug; never expected).
   */
  MeStatusInternal = 6,
} me_status;

/**
 * Opaque result handle: one chain of host vertices per guest vertex.
 */
typedef struct me_embedding me_embedding;

/**
 * Opaque edge-list builder for a host or guest graph.
 */
typedef struct me_graph me_graph;

/**
 * Embedder parameters; obtain defaults from `me_params_default`.
 */
typedef struct me_params {
  uint64_t seed;
  uint32_t tries;
  uint32_t patience;
  uint32_t max_rounds;
  bool localized;
  bool randomize_order;
  bool root_sampling;
  double sampling_scale;
} me_params;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

struct me_params me_params_default(void);

/**
 * Create an empty graph with `vertex_count` vertices. Returns null when
 * `vertex_count` is zero. Free with `me_graph_free`.
 */
struct me_graph *me_graph_new(uint32_t vertex_count);

/**
 * Create a Chimera C(m,n,l) host. Returns null when any dimension is zero.
 */
struct me_graph *me_graph_chimera(uint32_t m, uint32_t n, uint32_t l);

/**
 * Add an undirected edge. Self-loops and duplicates are tolerated and
 * collapsed when the graph is used.
 */
enum me_status me_graph_add_edge(struct me_graph *graph, uint32_t u, uint32_t v);

uint32_t me_graph_vertex_count(const struct me_graph *graph);

/**
 * # Safety
 * `graph` must be a handle from this library, not yet freed.
 */
void me_graph_free(struct me_graph *graph);

/**
 * Embed guest `h` into host `g`. On `ME_STATUS_OK` the embedding in
 * `*out` is verifier-checked; on `ME_STATUS_NO_EMBEDDING` it holds the
 * best decomposition reached (chains may overlap). Free with
 * `me_embedding_free`.
 */
enum me_status me_embed(const struct me_graph *g,
                        const struct me_graph *h,
                        const struct me_params *params,
                        struct me_embedding **out);

/**
 * 1 when the handle holds a verifier-checked embedding, 0 for a
 * decomposition.
 */
int32_t me_embedding_is_valid(const struct me_embedding *embedding);

/**
 * Number of chains (= guest vertex count).
 */
uint32_t me_embedding_chain_count(const struct me_embedding *embedding);

/**
 * Length of chain `index`, or 0 when the handle or index is invalid.
 */
uint32_t me_embedding_chain_len(const struct me_embedding *embedding, uint32_t index);

/**
 * Copy chain `index` into `buffer` (capacity `capacity` vertex ids),
 * sorted ascending. `written` receives the chain length.
 */
enum me_status me_embedding_chain_copy(const struct me_embedding *embedding,
                                       uint32_t index,
                                       uint32_t *buffer,
                                       size_t capacity,
                                       size_t *written);

/**
 * # Safety
 * `embedding` must be a handle from this library, not yet freed.
 */
void me_embedding_free(struct me_embedding *embedding);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MINOREMBED_H */
