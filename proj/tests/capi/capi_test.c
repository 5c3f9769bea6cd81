/* Exercises the shared library through its C header only. */

#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "blockeq.h"

static int failures = 0;

#define EXPECT(cond)                                              \
  do {                                                            \
    if (!(cond)) {                                                \
      fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                 \
    }                                                             \
  } while (0)

static const char* bowtie = "5\n0 1\n0 2\n1 2\n0 3\n0 4\n3 4\n";

static void graphs(void) {
  bq_graph* g = NULL;
  bq_graph* h = NULL;
  char* code_g = NULL;
  char* code_h = NULL;
  int block = 0;
  uint32_t u = 0, v = 0;

  EXPECT(bq_graph_parse(bowtie, BQ_FORMAT_AUTO, &g) == BQ_OK);
  EXPECT(bq_graph_order(g) == 5);
  EXPECT(bq_graph_size(g) == 6);
  EXPECT(bq_graph_edge(g, 0, &u, &v) == BQ_OK && u == 0 && v == 1);
  EXPECT(bq_graph_edge(g, 6, &u, &v) == BQ_ERR_INVALID_ARGUMENT);
  EXPECT(bq_graph_is_block_graph(g, &block) == BQ_OK && block == 1);

  /* Same bowtie, DIMACS with the centre last. */
  EXPECT(bq_graph_parse("p edge 5 6\ne 5 1\ne 5 2\ne 1 2\ne 5 3\ne 5 4\ne 3 4\n",
                        BQ_FORMAT_AUTO, &h) == BQ_OK);
  EXPECT(bq_graph_label(h, 4) == 5);
  EXPECT(bq_graph_canonical_code(g, &code_g) == BQ_OK);
  EXPECT(bq_graph_canonical_code(h, &code_h) == BQ_OK);
  EXPECT(code_g && code_h && strcmp(code_g, code_h) == 0);
  bq_string_free(code_g);
  bq_string_free(code_h);
  bq_graph_free(g);
  bq_graph_free(h);

  g = NULL;
  EXPECT(bq_graph_parse("3\n0 1\n1 7\n", BQ_FORMAT_EDGE_LIST, &g) == BQ_ERR_PARSE);
  EXPECT(g == NULL);
  EXPECT(strncmp(bq_last_error(), "line 3", 6) == 0);
  EXPECT(bq_graph_parse(NULL, BQ_FORMAT_AUTO, &g) == BQ_ERR_INVALID_ARGUMENT);

  EXPECT(bq_graph_create(4, &g) == BQ_OK);
  EXPECT(bq_graph_add_edge(g, 0, 1) == BQ_OK);
  EXPECT(bq_graph_add_edge(g, 1, 2) == BQ_OK);
  EXPECT(bq_graph_add_edge(g, 2, 3) == BQ_OK);
  EXPECT(bq_graph_add_edge(g, 3, 0) == BQ_OK);
  EXPECT(bq_graph_add_edge(g, 3, 3) == BQ_ERR_INVALID_ARGUMENT);
  EXPECT(bq_graph_is_block_graph(g, &block) == BQ_OK && block == 0);
  EXPECT(bq_graph_canonical_code(g, &code_g) == BQ_ERR_NOT_BLOCK_GRAPH);
  bq_graph_free(g);
}

static void colourings(void) {
  bq_graph* g = NULL;
  bq_coloring* c = NULL;
  char* info = NULL;
  bq_verdict verdict = BQ_IMPROPER;
  int k;

  EXPECT(bq_generate_blnk(3, 3, 3, &g) == BQ_OK);
  EXPECT(bq_graph_order(g) == 63);
  EXPECT(bq_color(g, BQ_CLASS_AUTO, 0, 10.0, &c, &info) == BQ_OK);
  EXPECT(info && strstr(info, "\"class\":\"blnk\"") != NULL);
  EXPECT(bq_check(g, c, &verdict) == BQ_OK && verdict == BQ_VALID_EQUITABLE);
  EXPECT(bq_coloring_colors(c) == 3);
  bq_string_free(info);
  bq_coloring_free(c);
  c = NULL;
  EXPECT(bq_color(g, BQ_CLASS_BLNK, 4, 10.0, &c, NULL) != BQ_OK);
  EXPECT(c == NULL);
  bq_graph_free(g);

  {
    const int good[3] = {1, 2, 3};
    const int bad[3] = {1, 2, 4};
    EXPECT(bq_coloring_create(3, bad, 3, &c) == BQ_ERR_INVALID_ARGUMENT);
    EXPECT(bq_coloring_create(3, good, 3, &c) == BQ_OK);
    EXPECT(bq_coloring_order(c) == 3);
    EXPECT(bq_coloring_color_of(c, 2) == 3);
    EXPECT(bq_graph_parse("3\n0 1\n1 2\n0 2\n", BQ_FORMAT_EDGE_LIST, &g) == BQ_OK);
    EXPECT(bq_check(g, c, &verdict) == BQ_OK && verdict == BQ_VALID_EQUITABLE);
    EXPECT(bq_coloring_json(c, g, &info) == BQ_OK);
    EXPECT(strstr(info, "\"sizes\":[1,1,1]") != NULL);
    bq_string_free(info);
    bq_coloring_free(c);
    bq_graph_free(g);
  }

  /* Tight pendant family: lower bound 3, no equitable 3-colouring. */
  {
    bq_feasibility f = BQ_UNDECIDED;
    char* bounds = NULL;
    EXPECT(bq_generate_pendant_family(2, &g) == BQ_OK);
    EXPECT(bq_graph_order(g) == 14);
    EXPECT(bq_bounds(g, 10.0, &bounds) == BQ_OK);
    EXPECT(strstr(bounds, "\"lower\":3") && strstr(bounds, "\"chi_eq\":4"));
    bq_string_free(bounds);
    EXPECT(bq_exact(g, 3, 10.0, &f, &c) == BQ_OK && f == BQ_NOT_FEASIBLE && c == NULL);
    EXPECT(bq_exact(g, 4, 10.0, &f, &c) == BQ_OK && f == BQ_FEASIBLE && c != NULL);
    EXPECT(bq_check(g, c, &verdict) == BQ_OK && verdict == BQ_VALID_EQUITABLE);
    bq_coloring_free(c);
    c = NULL;
    EXPECT(bq_color(g, BQ_CLASS_EXACT, 3, 10.0, &c, NULL) == BQ_INFEASIBLE);
    bq_graph_free(g);
  }

  /* Well-covered recipes survive a decompose round trip. */
  for (k = 0; k < 20; ++k) {
    char* recipe = NULL;
    char* back = NULL;
    char* code_a = NULL;
    char* code_b = NULL;
    bq_graph* h = NULL;
    EXPECT(bq_random_recipe((uint64_t)k, 5, 30, &recipe) == BQ_OK);
    EXPECT(bq_generate_wellcovered(recipe, &g) == BQ_OK);
    EXPECT(bq_decompose_wellcovered(g, &back) == BQ_OK);
    EXPECT(bq_generate_wellcovered(back, &h) == BQ_OK);
    EXPECT(bq_graph_canonical_code(g, &code_a) == BQ_OK);
    EXPECT(bq_graph_canonical_code(h, &code_b) == BQ_OK);
    EXPECT(strcmp(code_a, code_b) == 0);
    EXPECT(bq_color(g, BQ_CLASS_WELLCOVERED, 7, 10.0, &c, NULL) == BQ_OK);
    EXPECT(bq_check(g, c, &verdict) == BQ_OK && verdict == BQ_VALID_EQUITABLE);
    bq_coloring_free(c);
    bq_string_free(recipe);
    bq_string_free(back);
    bq_string_free(code_a);
    bq_string_free(code_b);
    bq_graph_free(g);
    bq_graph_free(h);
  }
  EXPECT(bq_generate_wellcovered("{\"base\": 2, \"ops\": [{\"host\": 0}]}", &g) ==
         BQ_ERR_PARSE);
}

static void counter(const char* record, void* user) {
  if (strstr(record, "\"verdict\"")) ++*(int*)user;
}

static void verification(void) {
  bq_graph* g = NULL;
  char* out = NULL;
  int records = 0;

  EXPECT(bq_graph_parse("6\n0 3\n0 4\n0 5\n1 3\n1 4\n1 5\n2 3\n2 4\n2 5\n", BQ_FORMAT_AUTO, &g) ==
         BQ_OK);
  EXPECT(bq_spectrum(g, 6, 10.0, 1, &out) == BQ_OK);
  EXPECT(strstr(out, "\"gaps\":[3]") != NULL);
  bq_string_free(out);
  EXPECT(bq_verify_graph(g, 10.0, 0, &out) == BQ_ERR_NOT_BLOCK_GRAPH);
  bq_graph_free(g);

  EXPECT(bq_verify(6, 2, 10.0, 0, counter, &records, &out) == BQ_OK);
  EXPECT(records == 1 + 1 + 2 + 4 + 9 + 22);
  EXPECT(strstr(out, "\"violations\":0") != NULL);
  bq_string_free(out);
}

int main(void) {
  EXPECT(bq_version() != NULL);
  graphs();
  colourings();
  verification();
  if (failures) fprintf(stderr, "%d failure(s)\n", failures);
  else printf("capi: all checks passed\n");
  return failures ? 1 : 0;
}
