#ifndef BLOCKEQ_H
#define BLOCKEQ_H

/* C interface to the blockeq library: equitable colouring of block graphs. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(BLOCKEQ_BUILDING)
#    define BQ_API __declspec(dllexport)
#  else
#    define BQ_API __declspec(dllimport)
#  endif
#else
#  define BQ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct bq_graph bq_graph;
typedef struct bq_coloring bq_coloring;

typedef enum bq_status {
  BQ_OK = 0,
  BQ_ERR_PARSE = 1,
  BQ_ERR_INVALID_ARGUMENT = 2,
  BQ_ERR_NOT_BLOCK_GRAPH = 3,
  BQ_ERR_NOT_CHORDAL = 4,
  BQ_ERR_PRECONDITION = 5,
  BQ_ERR_INTERNAL = 6,
  /* The requested k admits no equitable colouring. */
  BQ_INFEASIBLE = 7,
  /* The search budget ran out before a decision. */
  BQ_UNKNOWN = 8
} bq_status;

typedef enum bq_format { BQ_FORMAT_AUTO = 0, BQ_FORMAT_EDGE_LIST = 1, BQ_FORMAT_DIMACS = 2 } bq_format;

typedef enum bq_class {
  BQ_CLASS_AUTO = 0,
  BQ_CLASS_WELLCOVERED,
  BQ_CLASS_BLNK,
  BQ_CLASS_B3LE3,
  BQ_CLASS_ALPHA1,
  BQ_CLASS_ALPHA2,
  BQ_CLASS_EXACT
} bq_class;

typedef enum bq_verdict {
  BQ_VALID_EQUITABLE = 0,
  BQ_VALID_NOT_EQUITABLE = 1,
  BQ_IMPROPER = 2
} bq_verdict;

typedef enum bq_feasibility { BQ_FEASIBLE = 0, BQ_NOT_FEASIBLE = 1, BQ_UNDECIDED = 2 } bq_feasibility;

BQ_API const char* bq_version(void);
/* Message of the last failure on this thread; never NULL. */
BQ_API const char* bq_last_error(void);
/* Frees any string returned through a char** out-parameter. */
BQ_API void bq_string_free(char* s);

/* Graphs */
BQ_API bq_status bq_graph_parse(const char* text, bq_format format, bq_graph** out);
BQ_API bq_status bq_graph_create(size_t n, bq_graph** out);
BQ_API bq_status bq_graph_add_edge(bq_graph* g, uint32_t u, uint32_t v);
BQ_API void bq_graph_free(bq_graph* g);
BQ_API size_t bq_graph_order(const bq_graph* g);
BQ_API size_t bq_graph_size(const bq_graph* g);
/* Edge i (0 <= i < size) in sorted order, u < v. */
BQ_API bq_status bq_graph_edge(const bq_graph* g, size_t i, uint32_t* u, uint32_t* v);
/* Input label of a vertex: the index itself, or the 1-based DIMACS id. */
BQ_API int64_t bq_graph_label(const bq_graph* g, uint32_t v);
BQ_API bq_status bq_graph_to_edge_list(const bq_graph* g, char** out);
BQ_API bq_status bq_graph_is_block_graph(const bq_graph* g, int* out);
BQ_API bq_status bq_graph_canonical_code(const bq_graph* g, char** out);

/* Generators */
BQ_API bq_status bq_generate_blnk(int n, int k, int l, bq_graph** out);
/* k-clique with k + 1 pendant K_{k+1} at every vertex. */
BQ_API bq_status bq_generate_pendant_family(int k, bq_graph** out);
/* Recipe JSON: {"base": b, "ops": [{"host": v, "s": s, "pendants": [...]}]} */
BQ_API bq_status bq_generate_wellcovered(const char* recipe_json, bq_graph** out);
BQ_API bq_status bq_random_recipe(uint64_t seed, int max_omega, int max_n, char** recipe_json);
BQ_API bq_status bq_decompose_wellcovered(const bq_graph* g, char** recipe_json);

/* Bounds report as JSON. With budget >= 0 the exact chi_= is included;
 * pass a negative budget to skip it. */
BQ_API bq_status bq_bounds(const bq_graph* g, double budget_seconds, char** out);

/* Colourings */
BQ_API bq_status bq_coloring_create(int k, const int* colours, size_t n, bq_coloring** out);
BQ_API void bq_coloring_free(bq_coloring* c);
BQ_API int bq_coloring_colors(const bq_coloring* c);
BQ_API size_t bq_coloring_order(const bq_coloring* c);
BQ_API int bq_coloring_color_of(const bq_coloring* c, uint32_t v);
/* {k, classes, sizes}; g (may be NULL) supplies vertex labels. */
BQ_API bq_status bq_coloring_json(const bq_coloring* c, const bq_graph* g, char** out);
BQ_API bq_status bq_check(const bq_graph* g, const bq_coloring* c, bq_verdict* verdict);

/* Colours g with the chosen class algorithm. k <= 0 picks the class
 * default. info receives {"class", "reason", ...structure}; may be NULL. */
BQ_API bq_status bq_color(const bq_graph* g, bq_class cls, int k, double budget_seconds,
                          bq_coloring** out, char** info);

/* Exact decision for one k; witness is set when feasible and non-NULL. */
BQ_API bq_status bq_exact(const bq_graph* g, int k, double budget_seconds,
                          bq_feasibility* result, bq_coloring** witness);

BQ_API bq_status bq_spectrum(const bq_graph* g, int k_max, double budget_seconds, int jobs,
                             char** out);

/* Verification record of one connected block graph. */
BQ_API bq_status bq_verify_graph(const bq_graph* g, double budget_seconds, int spectrum,
                                 char** out);

typedef void (*bq_record_callback)(const char* record_json, void* user);

/* Sweeps every connected block graph with n <= n_max; cb gets one JSON
 * record per graph. summary receives the per-n counts. Returns
 * BQ_INFEASIBLE when a violation turns up; the summary carries it. */
BQ_API bq_status bq_verify(int n_max, int jobs, double budget_seconds, int spectrum,
                           bq_record_callback cb, void* user, char** summary);

#ifdef __cplusplus
}
#endif

#endif
