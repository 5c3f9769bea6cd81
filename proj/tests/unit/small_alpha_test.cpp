#include <random>

#include "doctest.h"
#include "oracles.hpp"

#include "blockeq/bounds.hpp"
#include "blockeq/small_alpha.hpp"
#include "blockeq/verifier.hpp"

using namespace blockeq;
using namespace blockeq::small_alpha;

namespace {

Graph bowtie() {
  Graph g(5);
  g.add_clique(std::vector<Vertex>{0, 1, 2});
  g.add_clique(std::vector<Vertex>{0, 3, 4});
  return g;
}

// Hangs a clique of `size` vertices on `at`; returns the new vertices.
std::vector<Vertex> hang(Graph& g, Vertex at, int size) {
  std::vector<Vertex> c{at};
  for (int i = 1; i < size; ++i) c.push_back(g.add_vertex());
  g.add_clique(c);
  return {c.begin() + 1, c.end()};
}

// Star (3,4,5,5) with a triangle at a simplicial vertex of one K_5.
Graph direct_example() {
  Graph g = star_graph(std::vector<int>{3, 4, 5, 5});
  hang(g, static_cast<Vertex>(g.order() - 1), 3);
  return g;
}

// Star (2,3,4,5); a K_2 bridge leaves a simplicial vertex of the triangle and
// carries a K_4.
Graph bridged_example() {
  Graph g(1);
  std::vector<Vertex> triangle;
  for (int s : {2, 3, 4, 5}) {
    auto fresh = hang(g, 0, s);
    if (s == 3) triangle = fresh;
  }
  const Vertex u = hang(g, triangle.back(), 2).front();
  hang(g, u, 4);
  return g;
}

std::vector<std::size_t> sizes(const Coloring& c) { return c.class_sizes(); }

}  // namespace

TEST_CASE("stars of cliques") {
  auto k4 = recognize_alpha_min_1(Graph::complete(4));
  REQUIRE(k4);
  CHECK(k4->sizes == std::vector<int>{4});

  auto bt = recognize_alpha_min_1(bowtie());
  REQUIRE(bt);
  CHECK(bt->center == 0);
  CHECK(bt->sizes == std::vector<int>{3, 3});
  CHECK(bt->order() == 5);

  auto p4 = Graph::from_edges(4, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
  CHECK_FALSE(recognize_alpha_min_1(p4));
  CHECK_FALSE(recognize_alpha_min_1(oracle::complete_multipartite({2, 2})));

  auto k1 = recognize_alpha_min_1(Graph(1));
  REQUIRE(k1);
  CHECK(k1->sizes.empty());

  auto built = star_graph(std::vector<int>{2, 3, 5});
  CHECK(built.order() == 8);
  CHECK(recognize_alpha_min_1(built)->sizes == std::vector<int>{2, 3, 5});
}

TEST_CASE("multipartite matchings") {
  CHECK(multipartite_matching(std::vector<int>{2, 2}) == 2);
  CHECK(multipartite_matching(std::vector<int>{1, 1, 1}) == 1);
  CHECK(multipartite_matching(std::vector<int>{1, 1}) == 1);
  CHECK(multipartite_matching(std::vector<int>{1, 5}) == 1);

  // Every non-increasing tuple with sum <= 12.
  std::size_t tuples = 0;
  std::vector<int> parts;
  auto rec = [&](auto&& self, int remaining, int cap) -> void {
    if (parts.size() >= 2) {
      std::vector<int> asc(parts.rbegin(), parts.rend());
      auto g = oracle::complete_multipartite(asc);
      CHECK(multipartite_matching(asc) == oracle::max_matching(oracle::masks(g)));
      ++tuples;
    }
    for (int m = std::min(cap, remaining); m >= 1; --m) {
      parts.push_back(m);
      self(self, remaining - m, m);
      parts.pop_back();
    }
  };
  rec(rec, 12, 12);
  CHECK(tuples > 100);
}

TEST_CASE("equitable chromatic number of a star") {
  CHECK(chi_eq_star(*recognize_alpha_min_1(bowtie())) == 3);
  CHECK(chi_eq_star(*recognize_alpha_min_1(star_graph(std::vector<int>{2, 2, 2}))) == 3);
  CHECK(chi_eq_star(*recognize_alpha_min_1(Graph::complete(6))) == 6);
  CHECK(oracle::chi_equitable(oracle::masks(bowtie())) == 3);
}

TEST_CASE("colouring stars") {
  auto bt = bowtie();
  auto c = color_alpha_min_1(*recognize_alpha_min_1(bt));
  CHECK(c.colors() == 3);
  CHECK(c.color_of(0) == 1);
  CHECK(sizes(c) == std::vector<std::size_t>{1, 2, 2});
  CHECK(check(bt, c).verdict == Verdict::valid_equitable);

  auto claw = star_graph(std::vector<int>{2, 2, 2});
  auto cc = color_alpha_min_1(*recognize_alpha_min_1(claw));
  CHECK(cc.color_of(0) == 1);
  CHECK(sizes(cc) == std::vector<std::size_t>{1, 2, 1});
  CHECK(check(claw, cc).verdict == Verdict::valid_equitable);

  auto kn = color_alpha_min_1(*recognize_alpha_min_1(Graph::complete(5)));
  CHECK(sizes(kn) == std::vector<std::size_t>(5, 1));
}

TEST_CASE("alpha_min = 2 recognition") {
  auto a = direct_example();
  CHECK(a.order() == 16);
  auto sa = recognize_alpha_min_2(a);
  REQUIRE(sa);
  CHECK(sa->variant == Variant::direct);
  CHECK(sa->star.sizes == std::vector<int>{3, 4, 5, 5});
  CHECK(sa->star.sizes[sa->l] == 5);
  CHECK(sa->n0 == 3);

  auto b = bridged_example();
  CHECK(b.order() == 15);
  auto sb = recognize_alpha_min_2(b);
  REQUIRE(sb);
  CHECK(sb->variant == Variant::bridged);
  CHECK(sb->star.sizes == std::vector<int>{2, 3, 4, 5});
  CHECK(sb->star.sizes[sb->l] == 3);
  CHECK(sb->n0 == 4);

  CHECK_FALSE(recognize_alpha_min_2(bowtie()));
  CHECK_FALSE(recognize_alpha_min_2(verifier::pendant_family(2)));
}

TEST_CASE("alpha_min = 2 colouring") {
  auto a = direct_example();
  auto ca = color_alpha_min_2(a, *recognize_alpha_min_2(a), 6);
  CHECK(check(a, ca).verdict == Verdict::valid_equitable);
  CHECK(sizes(ca) == std::vector<std::size_t>{2, 3, 3, 3, 3, 2});

  auto b = bridged_example();
  auto rb = conjecture_bounds(b);
  auto cb = color_alpha_min_2(b, *recognize_alpha_min_2(b), rb.lower);
  CHECK(check(b, cb).verdict == Verdict::valid_equitable);

  // Star (2,2) with an edge at a leaf: a path on four vertices.
  auto p = star_graph(std::vector<int>{2, 2});
  hang(p, 2, 2);
  auto sp = recognize_alpha_min_2(p);
  REQUIRE(sp);
  auto cp = color_alpha_min_2(p, *sp, 2);
  CHECK(check(p, cp).verdict == Verdict::valid_equitable);
  CHECK(oracle::chi_equitable(oracle::masks(p)) == 2);

  CHECK_THROWS_AS(color_alpha_min_2(a, *recognize_alpha_min_2(a), 4), Error);
}

TEST_CASE("small alpha_min classes over all block graphs up to 12 vertices") {
  verifier::Enumerator all({{}, 0, 4});
  std::size_t ones = 0, twos = 0;
  for (int n = 1; n <= 12; ++n) {
    for (const auto& e : all.level(n)) {
      const auto& g = e.graph;
      const int am = alpha_min(g);
      auto s1 = recognize_alpha_min_1(g);
      auto s2 = recognize_alpha_min_2(g);
      CHECK(s1.has_value() == (am == 1));
      CHECK(s2.has_value() == (am == 2));
      CHECK_FALSE((s1 && s2));
      if (s1) {
        ++ones;
        auto c = color_alpha_min_1(*s1);
        CHECK(check(g, c).verdict == Verdict::valid_equitable);
        CHECK(c.colors() == chi_eq_star(*s1));
        CHECK(chi_equitable(g).value == chi_eq_star(*s1));
      }
      if (s2) {
        ++twos;
        const int k = conjecture_bounds(g).lower;
        auto c = color_alpha_min_2(g, *s2, k);
        CHECK(check(g, c).verdict == Verdict::valid_equitable);
      }
    }
  }
  CHECK(ones > 50);
  CHECK(twos > 100);
}
