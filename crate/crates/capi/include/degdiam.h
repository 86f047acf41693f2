/* C interface for the degdiam construction and certification library. */

#ifndef DEGDIAM_H
#define DEGDIAM_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Outcome of a fallible call.
 */
typedef enum {
  /**
   * The call succeeded.
   */
  DD_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  DD_STATUS_NULL_ARGUMENT = 1,
  /**
   * A numeric argument lies outside the function's domain.
   */
  DD_STATUS_INVALID_ARGUMENT = 2,
  /**
   * A construction's parameter inequality does not hold.
   */
  DD_STATUS_PRECONDITION = 3,
  /**
   * The construction would exceed the vertex budget.
   */
  DD_STATUS_BUDGET_EXCEEDED = 4,
  /**
   * Text input does not parse; the message names line and defect.
   */
  DD_STATUS_PARSE_ERROR = 5,
  /**
   * An internal panic was caught at the boundary.
   */
  DD_STATUS_PANIC = 6,
} DdStatus;

/**
 * A constructed graph together with its claims and witnesses. Release
 * with dd_construction_free.
 */
typedef struct DdConstruction DdConstruction;

/**
 * Graph handle. Create with dd_graph_parse or dd_construction_graph,
 * release with dd_graph_free.
 */
typedef struct DdGraph DdGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failing call on this thread, empty if none
 * failed yet. The pointer stays valid until the next failing call on the
 * same thread; do not free it.
 */
const char *dd_last_error_message(void);

/**
 * Releases a string returned by this library. Null is ignored.
 */
void dd_string_free(char *s);

/**
 * Parses an edge list ("n m" header, one "u v" line per edge) into a new
 * graph handle.
 */
DdStatus dd_graph_parse(const char *text, DdGraph **out);

/**
 * Releases a graph handle. Null is ignored.
 */
void dd_graph_free(DdGraph *g);

/**
 * Writes the graph back out in canonical edge-list form.
 */
DdStatus dd_graph_edge_list(const DdGraph *g, char **out);

/**
 * Number of vertices; 0 if the handle is null.
 */
uint64_t dd_graph_vertex_count(const DdGraph *g);

/**
 * Number of edges; 0 if the handle is null.
 */
uint64_t dd_graph_edge_count(const DdGraph *g);

/**
 * Largest vertex degree; 0 if the handle is null.
 */
uint64_t dd_graph_max_degree(const DdGraph *g);

/**
 * Smallest vertex degree; 0 if the handle is null.
 */
uint64_t dd_graph_min_degree(const DdGraph *g);

/**
 * Writes the diameter to `out`, or -1 when the graph is disconnected (or
 * empty) and has no finite diameter.
 */
DdStatus dd_graph_diameter(const DdGraph *g, int64_t *out);

/**
 * True iff every vertex pair lies within distance `k`. Cheaper than
 * computing the diameter when only a threshold matters.
 */
DdStatus dd_graph_diameter_at_most(const DdGraph *g, uint32_t k, bool *out);

/**
 * True iff the graph contains a triangle.
 */
DdStatus dd_graph_has_triangle(const DdGraph *g, bool *out);

/**
 * Exact arboricity, by matroid-partition search. Cost grows with the
 * densest subgraph, so expect seconds on graphs past a few thousand
 * vertices.
 */
DdStatus dd_graph_arboricity(const DdGraph *g, uint64_t *out);

/**
 * Word graph on r symbols and words of length k: r^k vertices, degree at
 * most 2r, diameter exactly k.
 */
DdStatus dd_construct_debruijn(uint64_t r, uint32_t k, uint64_t max_vertices, DdConstruction **out);

/**
 * Average degree at most d, maximum degree at most delta, diameter at
 * most k.
 */
DdStatus dd_construct_avg_degree(uint64_t d,
                                 uint32_t k,
                                 uint64_t delta,
                                 uint64_t max_vertices,
                                 DdConstruction **out);

/**
 * Arboricity at most b (with a star-forest witness), maximum degree at
 * most delta, diameter at most the even k.
 */
DdStatus dd_construct_arboricity(uint64_t b,
                                 uint32_t k,
                                 uint64_t delta,
                                 uint64_t max_vertices,
                                 DdConstruction **out);

/**
 * Arboricity at most b and diameter at most 2.
 */
DdStatus dd_construct_arboricity_diam2(uint64_t b,
                                       uint64_t delta,
                                       uint64_t max_vertices,
                                       DdConstruction **out);

/**
 * Treewidth at most t (with an elimination-order witness) and odd
 * diameter at most k.
 */
DdStatus dd_construct_treewidth_odd(uint64_t t,
                                    uint32_t k,
                                    uint64_t delta,
                                    uint64_t max_vertices,
                                    DdConstruction **out);

/**
 * Treewidth at most t (with an elimination-order witness) and even
 * diameter at most k.
 */
DdStatus dd_construct_treewidth_even(uint64_t t,
                                     uint32_t k,
                                     uint64_t delta,
                                     uint64_t max_vertices,
                                     DdConstruction **out);

/**
 * Properly 3-colourable family of maximum degree at most delta and
 * diameter at most k.
 */
DdStatus dd_construct_three_colourable(uint64_t delta,
                                       uint32_t k,
                                       uint64_t max_vertices,
                                       DdConstruction **out);

/**
 * Triangle-free 3-colourable family of maximum degree at most delta and
 * diameter at most k (k at least 4).
 */
DdStatus dd_construct_triangle_free(uint64_t delta,
                                    uint32_t k,
                                    uint64_t max_vertices,
                                    DdConstruction **out);

/**
 * Triangle-free modular-shift family of diameter exactly 2.
 */
DdStatus dd_construct_zp2(uint64_t delta, uint64_t max_vertices, DdConstruction **out);

/**
 * Triangle-free modular-shift family of diameter exactly 3.
 */
DdStatus dd_construct_zp3(uint64_t delta, uint64_t max_vertices, DdConstruction **out);

/**
 * Releases a construction handle. Null is ignored.
 */
void dd_construction_free(DdConstruction *res);

/**
 * Copies the constructed graph into a new independent handle.
 */
DdStatus dd_construction_graph(const DdConstruction *res, DdGraph **out);

/**
 * JSON object with the construction's family name, parameters, sizes,
 * claims, and the kinds of witnesses it carries.
 */
DdStatus dd_construction_metadata_json(const DdConstruction *res, char **out);

/**
 * Re-derives every claim from the graph alone and writes the verdict to
 * `out_pass`. When the verdict is false the failing checks are listed in
 * the last-error message; the call itself still returns ok.
 */
DdStatus dd_construction_certify(const DdConstruction *res, bool *out_pass);

/**
 * Full certification report as JSON: overall pass flag plus one
 * name/pass/detail record per check.
 */
DdStatus dd_construction_certify_json(const DdConstruction *res, char **out);

/**
 * Largest vertex count any graph of maximum degree delta (at least 3) and
 * diameter k can have, as a decimal string.
 */
DdStatus dd_bound_moore(uint64_t delta, uint32_t k, char **out);

/**
 * Vertex-count bound for graphs of minimum degree at least min_degree,
 * maximum degree delta, diameter k.
 */
DdStatus dd_bound_min_degree(uint64_t min_degree, uint64_t delta, uint32_t k, char **out);

/**
 * Vertex-count bound for graphs of average degree at most num/den,
 * maximum degree delta, diameter k. The value is a rational, formatted
 * "p/q" when not integral.
 */
DdStatus dd_bound_avg_degree(uint64_t num, uint64_t den, uint64_t delta, uint32_t k, char **out);

/**
 * Vertex-count bound for graphs of arboricity at most b, diameter k,
 * maximum degree delta.
 */
DdStatus dd_bound_arboricity(uint64_t b, uint32_t k, uint64_t delta, char **out);

/**
 * Vertex-count bound for graphs in which every subgraph has a balanced
 * separator of at most s vertices, with maximum degree delta and
 * diameter k.
 */
DdStatus dd_bound_separation(uint64_t s, uint64_t delta, uint32_t k, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* DEGDIAM_H */
