/* radiotorus: radio labelings of the torus graphs C_n [] C_n.
 *
 * C interface of the shared library. All functions return rt_status unless
 * noted; rt_last_error() gives a human-readable detail message for the most
 * recent failure on the calling thread. Objects returned through out
 * parameters are owned by the caller and released with the matching *_free.
 */

#ifndef RADIOTORUS_H
#define RADIOTORUS_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rt_status {
  RT_OK = 0,
  RT_ERROR_INVALID_ARGUMENT = 1, /* null pointer or malformed value */
  RT_ERROR_UNSUPPORTED_ORDER = 2, /* n in {0, 2}: no construction applies */
  RT_ERROR_DOMAIN = 3,            /* out-of-range input, bad graph, ... */
  RT_ERROR_PARSE = 4,             /* rejected DIMACS text */
  RT_ERROR_NOMEM = 5,
  RT_ERROR_INTERNAL = 6
} rt_status;

/* Opaque handles. */
typedef struct rt_labeling rt_labeling;       /* labeling of C_n [] C_n */
typedef struct rt_report rt_report;           /* radio-condition violations */
typedef struct rt_graph rt_graph;             /* graph + distance matrix */
typedef struct rt_certificate rt_certificate; /* exact-search result */

/* One violating pair: vertices (u_a, u_b) and (v_a, v_b) with
 * distance + |label difference| short of diameter + 1 by `deficit`. */
typedef struct rt_violation {
  int32_t u_a, u_b;
  int32_t v_a, v_b;
  int32_t distance;
  int64_t label_diff;
  int64_t deficit;
} rt_violation;

const char* rt_status_message(rt_status status);
const char* rt_last_error(void);

/* ---- torus metric -------------------------------------------------- */

/* diam(C_n [] C_n) = 2 * floor(n/2). */
rt_status rt_torus_diameter(int32_t n, int32_t* out);

/* Sum of the two cyclic coordinate distances. Coordinates must already lie
 * in [0, n). */
rt_status rt_torus_distance(int32_t n, int32_t a1, int32_t b1, int32_t a2,
                            int32_t b2, int32_t* out);

/* Index of the diagonal containing (a, b): (a - b) mod n. */
rt_status rt_torus_diagonal(int32_t n, int32_t a, int32_t b, int32_t* out);

/* ---- closed forms --------------------------------------------------- */

/* The radio number of C_n [] C_n. Fails with RT_ERROR_UNSUPPORTED_ORDER for
 * n in {0, 2}. */
rt_status rt_radio_number(int32_t n, int64_t* out);

/* Matching span lower bound, computed from the label-gap argument. */
rt_status rt_lower_bound(int32_t n, int64_t* out);

/* Forced gap between every second label (k+2 even n, k+1 odd n); n >= 3. */
rt_status rt_min_label_gap(int32_t n, int64_t* out);

/* Brute-force max of d(u,v)+d(v,w)+d(u,w) over vertex triples; n >= 3. */
rt_status rt_max_triple_distance_sum(int32_t n, int32_t* out);

/* Published closed-form values exposed for comparison with the exact
 * search; never asserted by the library itself. */
rt_status rt_cycle_radio_number_reference(int32_t m, int64_t* out);
rt_status rt_complete_product_radio_number_reference(int32_t m, int32_t p,
                                                     int64_t* out);

/* ---- labelings ------------------------------------------------------ */

/* Builds the optimal construction for C_n [] C_n (span == radio number). */
rt_status rt_labeling_build(int32_t n, rt_labeling** out);

/* Wraps an arbitrary n x n label matrix (row-major; entry [a][b] labels
 * vertex (a, b)); labels must be >= 1. */
rt_status rt_labeling_from_matrix(int32_t n, const int64_t* labels,
                                  rt_labeling** out);

void rt_labeling_free(rt_labeling* labeling);

int32_t rt_labeling_n(const rt_labeling* labeling);
rt_status rt_labeling_span(const rt_labeling* labeling, int64_t* out);

/* Copies the n*n row-major label matrix into `out`. */
rt_status rt_labeling_matrix(const rt_labeling* labeling, int64_t* out);

/* Checks the radio condition for every vertex pair. With pruned != 0, scans
 * in label order and skips pairs whose label difference already settles the
 * condition; the report is identical either way. */
rt_status rt_labeling_verify(const rt_labeling* labeling, int32_t pruned,
                             rt_report** out);

size_t rt_report_size(const rt_report* report);
rt_status rt_report_get(const rt_report* report, size_t index,
                        rt_violation* out);
void rt_report_free(rt_report* report);

/* ---- graphs and the exact solver ------------------------------------ */

/* 0-indexed endpoint pairs, edges[2*i], edges[2*i + 1]. The graph must be
 * simple and connected. */
rt_status rt_graph_from_edges(int32_t vertex_count, const int32_t* edges,
                              size_t edge_count, rt_graph** out);

/* DIMACS-like text: `c` comments, `p edge V E`, then E lines `e u v`. */
rt_status rt_graph_from_dimacs(const char* text, rt_graph** out);

rt_status rt_graph_torus(int32_t n, rt_graph** out);
rt_status rt_graph_cycle(int32_t m, rt_graph** out);
rt_status rt_graph_complete(int32_t m, rt_graph** out);
rt_status rt_graph_complete_product(int32_t m, int32_t p, rt_graph** out);

void rt_graph_free(rt_graph* graph);
int32_t rt_graph_vertex_count(const rt_graph* graph);
rt_status rt_graph_diameter(const rt_graph* graph, int32_t* out);
rt_status rt_graph_distance(const rt_graph* graph, int32_t u, int32_t v,
                            int32_t* out);

typedef struct rt_search_config {
  int64_t node_limit;       /* search-tree node budget, >= 1 */
  int32_t fix_first_vertex; /* nonzero pins vertex 0 first; sound only for
                               vertex-transitive graphs */
  const int64_t* warm_start_labels; /* NULL, or vertex_count labels of a
                                       valid labeling used as the initial
                                       incumbent */
} rt_search_config;

/* Branch-and-bound search for the radio number of `graph`. With a NULL
 * config, runs with the default node budget, no symmetry breaking, and no
 * warm start. The certificate's span is exact when the search exhausted the
 * tree, otherwise the best upper bound found within the budget. */
rt_status rt_exact_radio_number(const rt_graph* graph,
                                const rt_search_config* config,
                                rt_certificate** out);

void rt_certificate_free(rt_certificate* certificate);
int64_t rt_certificate_span(const rt_certificate* certificate);
int32_t rt_certificate_exhausted(const rt_certificate* certificate);
int64_t rt_certificate_nodes(const rt_certificate* certificate);

/* Copies the witness labeling (one label per vertex id) into `out`. */
rt_status rt_certificate_labels(const rt_certificate* certificate,
                                int64_t* out);

#ifdef __cplusplus
}
#endif

#endif /* RADIOTORUS_H */
