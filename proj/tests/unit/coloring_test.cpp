#include <random>

#include "doctest.h"
#include "oracles.hpp"

#include "blockeq/bounds.hpp"
#include "blockeq/coloring.hpp"
#include "blockeq/verifier.hpp"
#include "blockeq/wellcovered.hpp"

using namespace blockeq;

namespace {

Graph bowtie() {
  Graph g(5);
  g.add_clique(std::vector<Vertex>{0, 1, 2});
  g.add_clique(std::vector<Vertex>{0, 3, 4});
  return g;
}

}  // namespace

TEST_CASE("coloring construction") {
  CHECK_THROWS_AS(Coloring(2, {1, 3}), Error);
  CHECK_THROWS_AS(Coloring(0, {}), Error);
  Coloring c(3, {1, 2, 2, 3});
  CHECK(c.class_sizes() == std::vector<std::size_t>{1, 2, 1});
  CHECK(c.classes() == std::vector<VertexSet>{{0}, {1, 2}, {3}});
  CHECK(c.permuted(std::vector<int>{3, 1, 2}).assignment()[0] == 3);
  CHECK_FALSE(Coloring(3, {1, 1}).is_equitable());
  CHECK(Coloring(3, {1, 2}, true).is_equitable());
}

TEST_CASE("checker verdicts") {
  CHECK(check(Graph::complete(3), Coloring(3, {1, 2, 3})).verdict == Verdict::valid_equitable);

  Graph p3 = Graph::from_edges(3, std::vector<Edge>{{0, 1}, {1, 2}});
  auto bad = check(p3, Coloring(1, {1, 1, 1}));
  CHECK(bad.verdict == Verdict::improper);
  REQUIRE(bad.witness);
  CHECK(p3.adjacent(bad.witness->first, bad.witness->second));

  CHECK(check(bowtie(), Coloring(3, {1, 2, 3, 2, 3})).verdict == Verdict::valid_equitable);
  CHECK(check(p3, Coloring(3, {1, 2, 1})).verdict == Verdict::valid_not_equitable);
  CHECK_THROWS_AS(check(p3, Coloring(2, {1, 2})), Error);
}

TEST_CASE("exact search agrees with exhaustive enumeration") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 150; ++i) {
    const auto n = 1 + static_cast<std::size_t>(i % 8);
    auto g = i % 3 == 0 ? oracle::random_graph(rng, n, 0.4) : oracle::random_block_graph(rng, n, 4);
    auto a = oracle::masks(g);
    for (int k = 1; k <= 4; ++k) {
      auto r = exact_equitable(g, k);
      const bool expected = k > static_cast<int>(n) || oracle::equitably_colourable(a, k);
      CHECK((r.status == Feasibility::feasible) == expected);
      CHECK(r.status != Feasibility::unknown);
      if (r.coloring) CHECK(check(g, *r.coloring).verdict == Verdict::valid_equitable);
    }
  }
}

TEST_CASE("exact search on the tight pendant family") {
  auto g = verifier::pendant_family(2);
  CHECK(exact_equitable(g, 3).status == Feasibility::infeasible);
  auto four = exact_equitable(g, 4);
  REQUIRE(four.status == Feasibility::feasible);
  CHECK(check(g, *four.coloring).verdict == Verdict::valid_equitable);
  CHECK(chi_equitable(g).value == 4);
}

TEST_CASE("k at or beyond n") {
  auto k5 = exact_equitable(Graph::complete(5), 5);
  REQUIRE(k5.coloring);
  CHECK(k5.coloring->class_sizes() == std::vector<std::size_t>(5, 1));
  auto wide = exact_equitable(Graph::complete(3), 5);
  REQUIRE(wide.coloring);
  CHECK(wide.coloring->allows_empty());
  CHECK(check(Graph::complete(3), *wide.coloring).verdict == Verdict::valid_equitable);
}

TEST_CASE("equitable chromatic numbers") {
  CHECK(chi_equitable(oracle::complete_multipartite({3, 5, 7})).value == 6);
  CHECK(chi_equitable(Graph::from_edges(4, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}})).value == 3);
  CHECK(chi_equitable(Graph::complete(4)).value == 4);

  std::mt19937_64 rng(37);
  for (int i = 0; i < 40; ++i) {
    auto g = oracle::random_chordal(rng, 7, 5);
    CHECK(*chi_equitable(g).value >= clique_number(g));
    CHECK(*chi_equitable(g).value == oracle::chi_equitable(oracle::masks(g)));
  }
}

TEST_CASE("timeouts are reported, not guessed") {
  auto g = oracle::complete_multipartite({3, 5, 7, 9, 11, 13});
  SearchOptions tiny{1e-9};
  // Proving infeasibility here takes about a million nodes.
  auto r = exact_equitable(g, 8, tiny);
  CHECK(r.status == Feasibility::unknown);
  CHECK(r.nodes >= 4096);
  CHECK(exact_equitable(g, 8).status == Feasibility::infeasible);
}

TEST_CASE("clique number") {
  CHECK(clique_number(Graph::complete(6)) == 6);
  CHECK(clique_number(bowtie()) == 3);
  CHECK(clique_number(oracle::complete_multipartite({2, 2, 2})) == 3);
}

TEST_CASE("spectrum and gaps") {
  auto k33 = spectrum(oracle::complete_multipartite({3, 3}), 6);
  CHECK(k33.chi == 2);
  CHECK(k33.feasibility[2] == Feasibility::infeasible);
  CHECK(k33.gaps == std::vector<int>{3});
  CHECK(k33.threshold == 4);

  auto k4 = spectrum(Graph::complete(4), 7, {}, 3);
  for (int k = 1; k <= 7; ++k)
    CHECK((k4.feasibility[static_cast<std::size_t>(k - 1)] == Feasibility::feasible) == (k >= 4));
  CHECK(k4.gaps.empty());

  std::mt19937_64 rng(41);
  for (int i = 0; i < 10; ++i) {
    auto recipe = wellcovered::random_recipe(rng, 4, 14);
    auto g = wellcovered::generate(recipe);
    const int w = omega(g, block_decomposition(g));
    auto s = spectrum(g, w + 5, {}, 2);
    CHECK(s.gaps.empty());
    for (int k = w; k <= w + 5; ++k)
      CHECK(s.feasibility[static_cast<std::size_t>(k - 1)] == Feasibility::feasible);
  }
}
