#include "blockeq.h"

#include <cstring>
#include <random>
#include <string>

#include "blockeq/bounds.hpp"
#include "blockeq/canonical.hpp"
#include "blockeq/coloring.hpp"
#include "blockeq/json_io.hpp"
#include "blockeq/small_alpha.hpp"
#include "blockeq/structured.hpp"
#include "blockeq/verifier.hpp"
#include "blockeq/wellcovered.hpp"

using namespace blockeq;
using nlohmann::json;

struct bq_graph {
  Graph graph;
  std::vector<std::int64_t> labels;
  std::vector<Edge> edges;

  void refresh() { edges = graph.edges(); }
};

struct bq_coloring {
  Coloring coloring;
};

namespace {

thread_local std::string last_error;

bq_status fail(bq_status s, std::string msg) {
  last_error = std::move(msg);
  return s;
}

bq_status status_of(ErrorKind k) {
  switch (k) {
    case ErrorKind::parse: return BQ_ERR_PARSE;
    case ErrorKind::invalid_argument: return BQ_ERR_INVALID_ARGUMENT;
    case ErrorKind::not_block_graph: return BQ_ERR_NOT_BLOCK_GRAPH;
    case ErrorKind::not_chordal: return BQ_ERR_NOT_CHORDAL;
    case ErrorKind::precondition: return BQ_ERR_PRECONDITION;
    case ErrorKind::internal: return BQ_ERR_INTERNAL;
  }
  return BQ_ERR_INTERNAL;
}

// Runs body, translating exceptions into status codes.
template <class Body>
bq_status guarded(Body body) {
  try {
    last_error.clear();
    return body();
  } catch (const Error& e) {
    return fail(status_of(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(BQ_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(BQ_ERR_INTERNAL, e.what());
  }
}

char* dup(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

bq_graph* wrap(Graph g) {
  auto* h = new bq_graph{std::move(g), {}, {}};
  h->labels.resize(h->graph.order());
  for (std::size_t i = 0; i < h->labels.size(); ++i) h->labels[i] = static_cast<std::int64_t>(i);
  h->refresh();
  return h;
}

#define BQ_REQUIRE(cond, msg) \
  if (!(cond)) return fail(BQ_ERR_INVALID_ARGUMENT, msg)

SearchOptions search(double budget) { return SearchOptions{budget > 0 ? budget : 0.0}; }

bool connected_block(const Graph& g) {
  return g.order() > 0 && is_connected(g) && is_block_graph(g);
}

struct Colored {
  Coloring coloring;
  json info;
};

// Each try_* returns nullopt when the class does not apply to (g, k).
std::optional<Colored> try_blnk(const Graph& g, int k, bool strict) {
  auto p = structured::recognize_blnk(g);
  if (!p) {
    if (strict) throw Error(ErrorKind::precondition, "graph is not B_l(n,k)");
    return std::nullopt;
  }
  if (k > 0 && k != p->n) {
    if (strict)
      throw Error(ErrorKind::invalid_argument, "B_l(n,k) colouring uses exactly n colours");
    return std::nullopt;
  }
  json info{{"class", "blnk"},
            {"reason", "matches B_l(n,k) with n=" + std::to_string(p->n) + ", k=" +
                           std::to_string(p->k) + ", l=" + std::to_string(p->l)},
            {"structure", io::blnk_json(*p)}};
  return Colored{structured::color_blnk(g, *p), std::move(info)};
}

std::optional<Colored> try_b3le3(const Graph& g, int k, bool strict) {
  if (!structured::recognize_b3le3(g)) {
    if (strict) throw Error(ErrorKind::precondition, "graph is not in B(3, <=3)");
    return std::nullopt;
  }
  if (k > 0 && k != 4) {
    if (strict) throw Error(ErrorKind::invalid_argument, "B(3, <=3) colouring uses 4 colours");
    return std::nullopt;
  }
  auto r = structured::color_b3le3(g);
  json info{{"class", "b3le3"},
            {"reason", "all blocks are triangles, every vertex in at most three"},
            {"type", io::ttype_json(r.type)}};
  return Colored{std::move(r.coloring), std::move(info)};
}

std::optional<Colored> try_alpha1(const Graph& g, int k, bool strict) {
  auto s = small_alpha::recognize_alpha_min_1(g);
  if (!s) {
    if (strict) throw Error(ErrorKind::precondition, "graph has no universal vertex");
    return std::nullopt;
  }
  const int chi = small_alpha::chi_eq_star(*s);
  if (k > 0 && k != chi) {
    if (strict)
      throw Error(ErrorKind::invalid_argument,
                  "star-of-cliques colouring uses exactly " + std::to_string(chi) + " colours");
    return std::nullopt;
  }
  json info{{"class", "alpha1"},
            {"reason", "alpha_min = 1: star of cliques around vertex " + std::to_string(s->center)},
            {"structure", io::star_json(*s)}};
  return Colored{small_alpha::color_alpha_min_1(*s), std::move(info)};
}

std::optional<Colored> try_alpha2(const Graph& g, int k, bool strict) {
  auto st = small_alpha::recognize_alpha_min_2(g);
  if (!st) {
    if (strict) throw Error(ErrorKind::precondition, "graph is not an alpha_min = 2 block graph");
    return std::nullopt;
  }
  const int lower = conjecture_bounds(g).lower;
  if (k > 0 && k != lower) {
    if (strict)
      throw Error(ErrorKind::invalid_argument,
                  "alpha_min = 2 colouring is defined for k = " + std::to_string(lower));
    return std::nullopt;
  }
  json info{{"class", "alpha2"},
            {"reason", "alpha_min = 2 star with an extra clique"},
            {"structure", io::alpha2_json(*st)}};
  return Colored{small_alpha::color_alpha_min_2(g, *st, lower), std::move(info)};
}

std::optional<Colored> try_wellcovered(const Graph& g, int k, bool strict) {
  if (!connected_block(g) || !is_well_covered(g)) {
    if (strict) throw Error(ErrorKind::precondition, "graph is not a well-covered block graph");
    return std::nullopt;
  }
  const int w = omega(g, block_decomposition(g));
  if (k > 0 && k < w) {
    if (strict)
      throw Error(ErrorKind::precondition, "k is below omega = " + std::to_string(w));
    return std::nullopt;
  }
  json info{{"class", "wellcovered"}, {"reason", "alpha_min = alpha"}};
  return Colored{wellcovered::color_well_covered(g, k > 0 ? k : w), std::move(info)};
}

}  // namespace

extern "C" {

const char* bq_version(void) { return "1.0.0"; }

const char* bq_last_error(void) { return last_error.c_str(); }

void bq_string_free(char* s) { delete[] s; }

bq_status bq_graph_parse(const char* text, bq_format format, bq_graph** out) {
  BQ_REQUIRE(text && out, "null argument");
  return guarded([&] {
    const std::string_view view(text);
    const GraphFormat fmt = format == BQ_FORMAT_AUTO      ? detect_format(view)
                            : format == BQ_FORMAT_DIMACS ? GraphFormat::dimacs
                                                         : GraphFormat::edge_list;
    auto parsed = parse_graph(view, fmt);
    auto* h = wrap(std::move(parsed.graph));
    h->labels = std::move(parsed.labels);
    *out = h;
    return BQ_OK;
  });
}

bq_status bq_graph_create(size_t n, bq_graph** out) {
  BQ_REQUIRE(out, "null argument");
  return guarded([&] {
    *out = wrap(Graph(n));
    return BQ_OK;
  });
}

bq_status bq_graph_add_edge(bq_graph* g, uint32_t u, uint32_t v) {
  BQ_REQUIRE(g, "null graph");
  return guarded([&] {
    g->graph.add_edge(u, v);
    g->refresh();
    return BQ_OK;
  });
}

void bq_graph_free(bq_graph* g) { delete g; }

size_t bq_graph_order(const bq_graph* g) { return g ? g->graph.order() : 0; }

size_t bq_graph_size(const bq_graph* g) { return g ? g->graph.size() : 0; }

bq_status bq_graph_edge(const bq_graph* g, size_t i, uint32_t* u, uint32_t* v) {
  BQ_REQUIRE(g && u && v, "null argument");
  BQ_REQUIRE(i < g->edges.size(), "edge index out of range");
  *u = g->edges[i].first;
  *v = g->edges[i].second;
  return BQ_OK;
}

int64_t bq_graph_label(const bq_graph* g, uint32_t v) {
  if (!g || v >= g->labels.size()) return -1;
  return g->labels[v];
}

bq_status bq_graph_to_edge_list(const bq_graph* g, char** out) {
  BQ_REQUIRE(g && out, "null argument");
  return guarded([&] {
    *out = dup(to_edge_list(g->graph));
    return BQ_OK;
  });
}

bq_status bq_graph_is_block_graph(const bq_graph* g, int* out) {
  BQ_REQUIRE(g && out, "null argument");
  return guarded([&] {
    *out = is_block_graph(g->graph) ? 1 : 0;
    return BQ_OK;
  });
}

bq_status bq_graph_canonical_code(const bq_graph* g, char** out) {
  BQ_REQUIRE(g && out, "null argument");
  return guarded([&] {
    *out = dup(canonical_code(g->graph).code);
    return BQ_OK;
  });
}

bq_status bq_generate_blnk(int n, int k, int l, bq_graph** out) {
  BQ_REQUIRE(out, "null argument");
  return guarded([&] {
    *out = wrap(structured::generate_blnk({n, k, l}));
    return BQ_OK;
  });
}

bq_status bq_generate_pendant_family(int k, bq_graph** out) {
  BQ_REQUIRE(out, "null argument");
  return guarded([&] {
    *out = wrap(verifier::pendant_family(k));
    return BQ_OK;
  });
}

bq_status bq_generate_wellcovered(const char* recipe_json, bq_graph** out) {
  BQ_REQUIRE(recipe_json && out, "null argument");
  return guarded([&] {
    json j;
    try {
      j = json::parse(recipe_json);
    } catch (const json::exception& e) {
      throw Error(ErrorKind::parse, std::string("recipe is not JSON: ") + e.what());
    }
    *out = wrap(wellcovered::generate(io::recipe_from_json(j)));
    return BQ_OK;
  });
}

bq_status bq_random_recipe(uint64_t seed, int max_omega, int max_n, char** recipe_json) {
  BQ_REQUIRE(recipe_json, "null argument");
  return guarded([&] {
    std::mt19937_64 rng(seed);
    *recipe_json = dup(io::recipe_json(wellcovered::random_recipe(rng, max_omega, max_n)).dump());
    return BQ_OK;
  });
}

bq_status bq_decompose_wellcovered(const bq_graph* g, char** recipe_json) {
  BQ_REQUIRE(g && recipe_json, "null argument");
  return guarded([&] {
    auto d = wellcovered::decompose(g->graph);
    if (!d) return fail(BQ_ERR_PRECONDITION, "graph is not well-covered");
    json j = io::recipe_json(d->recipe);
    j["order"] = d->order;
    *recipe_json = dup(j.dump());
    return BQ_OK;
  });
}

bq_status bq_bounds(const bq_graph* g, double budget_seconds, char** out) {
  BQ_REQUIRE(g && out, "null argument");
  return guarded([&] {
    auto r = conjecture_bounds(g->graph);
    if (budget_seconds >= 0) r.chi_eq = chi_equitable(g->graph, search(budget_seconds)).value;
    *out = dup(io::bounds_json(r, g->graph).dump());
    return BQ_OK;
  });
}

bq_status bq_coloring_create(int k, const int* colours, size_t n, bq_coloring** out) {
  BQ_REQUIRE(out && (colours || n == 0), "null argument");
  return guarded([&] {
    std::vector<int> a(colours, colours + n);
    *out = new bq_coloring{Coloring(k, std::move(a), static_cast<std::size_t>(k) > n)};
    return BQ_OK;
  });
}

void bq_coloring_free(bq_coloring* c) { delete c; }

int bq_coloring_colors(const bq_coloring* c) { return c ? c->coloring.colors() : 0; }

size_t bq_coloring_order(const bq_coloring* c) { return c ? c->coloring.order() : 0; }

int bq_coloring_color_of(const bq_coloring* c, uint32_t v) {
  if (!c || v >= c->coloring.order()) return 0;
  return c->coloring.color_of(v);
}

bq_status bq_coloring_json(const bq_coloring* c, const bq_graph* g, char** out) {
  BQ_REQUIRE(c && out, "null argument");
  return guarded([&] {
    std::span<const std::int64_t> labels;
    if (g && g->labels.size() == c->coloring.order()) labels = g->labels;
    *out = dup(io::coloring_json(c->coloring, labels).dump());
    return BQ_OK;
  });
}

bq_status bq_check(const bq_graph* g, const bq_coloring* c, bq_verdict* verdict) {
  BQ_REQUIRE(g && c && verdict, "null argument");
  BQ_REQUIRE(g->graph.order() == c->coloring.order(), "colouring and graph sizes differ");
  return guarded([&] {
    switch (check(g->graph, c->coloring).verdict) {
      case Verdict::valid_equitable: *verdict = BQ_VALID_EQUITABLE; break;
      case Verdict::valid_not_equitable: *verdict = BQ_VALID_NOT_EQUITABLE; break;
      case Verdict::improper: *verdict = BQ_IMPROPER; break;
    }
    return BQ_OK;
  });
}

bq_status bq_color(const bq_graph* g, bq_class cls, int k, double budget_seconds,
                   bq_coloring** out, char** info) {
  BQ_REQUIRE(g && out, "null argument");
  return guarded([&]() -> bq_status {
    const Graph& graph = g->graph;
    BQ_REQUIRE(graph.order() > 0, "empty graph");
    const bool strict = cls != BQ_CLASS_AUTO;
    std::optional<Colored> result;
    json skipped = json::array();

    auto attempt = [&](bq_class which, auto fn, const char* name) {
      if (result || (strict && cls != which)) return;
      result = fn(graph, k, strict);
      if (!result) skipped.push_back(name);
    };
    attempt(BQ_CLASS_BLNK, try_blnk, "blnk");
    attempt(BQ_CLASS_B3LE3, try_b3le3, "b3le3");
    attempt(BQ_CLASS_ALPHA1, try_alpha1, "alpha1");
    attempt(BQ_CLASS_ALPHA2, try_alpha2, "alpha2");
    attempt(BQ_CLASS_WELLCOVERED, try_wellcovered, "wellcovered");

    if (!result) {
      if (k > 0) {
        auto r = exact_equitable(graph, k, search(budget_seconds));
        if (r.status == Feasibility::infeasible)
          return fail(BQ_INFEASIBLE, "no equitable " + std::to_string(k) + "-colouring exists");
        if (r.status == Feasibility::unknown)
          return fail(BQ_UNKNOWN, "search budget exhausted at k = " + std::to_string(k));
        result = Colored{std::move(*r.coloring),
                         {{"class", "exact"}, {"reason", "backtracking search at the given k"}}};
      } else {
        auto chi = chi_equitable(graph, search(budget_seconds));
        if (!chi.value)
          return fail(BQ_UNKNOWN, "search budget exhausted before chi_= was settled");
        result = Colored{std::move(*chi.witness),
                         {{"class", "exact"},
                          {"reason", "backtracking search for the smallest k"},
                          {"infeasible_k", chi.infeasible}}};
      }
    }
    if (!strict) result->info["skipped"] = skipped;
    *out = new bq_coloring{std::move(result->coloring)};
    if (info) *info = dup(result->info.dump());
    return BQ_OK;
  });
}

bq_status bq_exact(const bq_graph* g, int k, double budget_seconds, bq_feasibility* result,
                   bq_coloring** witness) {
  BQ_REQUIRE(g && result, "null argument");
  return guarded([&] {
    auto r = exact_equitable(g->graph, k, search(budget_seconds));
    *result = r.status == Feasibility::feasible     ? BQ_FEASIBLE
              : r.status == Feasibility::infeasible ? BQ_NOT_FEASIBLE
                                                    : BQ_UNDECIDED;
    if (witness) *witness = r.coloring ? new bq_coloring{std::move(*r.coloring)} : nullptr;
    return BQ_OK;
  });
}

bq_status bq_spectrum(const bq_graph* g, int k_max, double budget_seconds, int jobs,
                      char** out) {
  BQ_REQUIRE(g && out, "null argument");
  return guarded([&] {
    auto s = spectrum(g->graph, k_max, search(budget_seconds), jobs);
    *out = dup(io::spectrum_json(s).dump());
    return BQ_OK;
  });
}

bq_status bq_verify_graph(const bq_graph* g, double budget_seconds, int spectrum_flag,
                          char** out) {
  BQ_REQUIRE(g && out, "null argument");
  return guarded([&] {
    verifier::VerifyOptions opts;
    opts.budget_seconds = budget_seconds;
    opts.spectrum = spectrum_flag != 0;
    auto rec = verifier::verify_graph(g->graph, opts);
    *out = dup(io::record_json(static_cast<int>(g->graph.order()), rec).dump());
    return BQ_OK;
  });
}

bq_status bq_verify(int n_max, int jobs, double budget_seconds, int spectrum_flag,
                    bq_record_callback cb, void* user, char** summary) {
  return guarded([&] {
    verifier::VerifyOptions opts;
    opts.budget_seconds = budget_seconds;
    opts.jobs = jobs;
    opts.spectrum = spectrum_flag != 0;
    verifier::RecordSink sink;
    if (cb)
      sink = [&](int n, const verifier::VerificationRecord& r) {
        cb(io::record_json(n, r).dump().c_str(), user);
      };
    auto s = verifier::verify_conjecture(n_max, opts, sink);
    if (summary) *summary = dup(io::summary_json(s).dump());
    return s.violations() > 0 ? fail(BQ_INFEASIBLE, "conjecture violation found") : BQ_OK;
  });
}

}  // extern "C"
