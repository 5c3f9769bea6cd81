#include <random>

#include "doctest.h"
#include "oracles.hpp"

#include "blockeq/bounds.hpp"
#include "blockeq/structured.hpp"
#include "blockeq/verifier.hpp"

using namespace blockeq;
using namespace blockeq::structured;

namespace {

Graph bowtie() {
  Graph g(5);
  g.add_clique(std::vector<Vertex>{0, 1, 2});
  g.add_clique(std::vector<Vertex>{0, 3, 4});
  return g;
}

std::vector<int> counts(const Coloring& c) {
  return {c.class_sizes().begin(), c.class_sizes().end()};
}

std::vector<int> expected_counts(const TType& t) {
  if (t.kind == TKind::T1) return {t.m + 1, t.m, t.m, t.m};
  return {t.m + 1, t.m + 1, t.m + 1, t.m};
}

}  // namespace

TEST_CASE("B_l(n,k) generation") {
  CHECK(generate_blnk({3, 3, 1}) == Graph::complete(3));
  CHECK(generate_blnk({3, 3, 2}).order() == 15);
  CHECK(generate_blnk({3, 3, 3}).order() == 63);
  CHECK(generate_blnk({4, 3, 2}).order() == 28);
  CHECK_THROWS_AS(generate_blnk({2, 3, 1}), Error);
  CHECK_THROWS_AS(generate_blnk({3, 2, 1}), Error);
  CHECK_THROWS_AS(generate_blnk({3, 3, 0}), Error);

  for (BlnkParams p : {BlnkParams{3, 3, 3}, {4, 3, 2}, {3, 4, 3}, {5, 3, 2}}) {
    auto g = generate_blnk(p);
    auto bct = block_decomposition(g);
    for (const auto& b : bct.blocks) CHECK(static_cast<int>(b.size()) == p.n);
    std::vector<int> in_blocks(g.order(), 0);
    for (const auto& b : bct.blocks)
      for (Vertex v : b) ++in_blocks[v];
    for (Vertex c : bct.cut_vertices) CHECK(in_blocks[c] == p.k);

    // All simplicial vertices share one eccentricity.
    auto vc = classify_vertices(g, bct);
    std::optional<int> ecc;
    for (Vertex s : vc.simplicial) {
      auto d = bfs_distances(g, s);
      const int e = *std::max_element(d.begin(), d.end());
      if (!ecc) ecc = e;
      CHECK(e == *ecc);
    }
  }
}

TEST_CASE("B_l(n,k) closed forms") {
  auto f1 = blnk_formulas({3, 3, 1});
  CHECK(f1.size == 3);
  CHECK(f1.alpha == 1);
  CHECK(f1.alpha_min == 1);
  auto f2 = blnk_formulas({3, 3, 2});
  CHECK(f2.size == 15);
  CHECK(f2.alpha == 6);
  CHECK(f2.alpha_min == 5);
  auto f3 = blnk_formulas({3, 3, 3});
  CHECK(f3.size == 63);
  CHECK(f3.alpha == 25);
  CHECK(f3.alpha_min == 24);

  int checked = 0;
  for (int n = 3; n <= 8; ++n)
    for (int k = 3; k <= 8; ++k)
      for (int l = 1; l <= 6; ++l) {
        BlnkParams p{n, k, l};
        auto f = blnk_formulas(p);
        if (f.size > 200) break;
        auto g = generate_blnk(p);
        CHECK(f.size == static_cast<std::int64_t>(g.order()));
        CHECK(f.alpha == static_cast<std::int64_t>(independence_number(g)));
        CHECK(f.alpha_min == alpha_min(g));
        ++checked;
      }
  CHECK(checked >= 20);
}

TEST_CASE("B_l(n,k) lower bound equals omega") {
  for (BlnkParams p : {BlnkParams{3, 3, 2}, {3, 3, 3}, {4, 3, 2}, {3, 4, 2}, {5, 4, 2}}) {
    auto r = conjecture_bounds(generate_blnk(p));
    CHECK(r.lower == p.n);
    CHECK(r.omega == p.n);
  }
}

TEST_CASE("B_l(n,k) strongly equitable colouring") {
  CHECK(counts(color_blnk({3, 3, 1})) == std::vector<int>{1, 1, 1});
  CHECK(counts(color_blnk({3, 3, 3})) == std::vector<int>{21, 21, 21});
  CHECK(counts(color_blnk({4, 3, 2})) == std::vector<int>{7, 7, 7, 7});

  std::mt19937_64 rng(71);
  for (BlnkParams p : {BlnkParams{3, 3, 2}, {3, 3, 3}, {4, 3, 2}, {3, 4, 2}, {4, 4, 2}}) {
    auto g = generate_blnk(p);
    auto c = color_blnk(p);
    CHECK(check(g, c).verdict == Verdict::valid_equitable);
    const auto per = g.order() / static_cast<std::size_t>(p.n);
    CHECK(c.class_sizes() == std::vector<std::size_t>(static_cast<std::size_t>(p.n), per));

    std::vector<Vertex> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    auto shuffled = oracle::relabel(g, perm);
    REQUIRE(recognize_blnk(shuffled) == p);
    auto cs = color_blnk(shuffled, p);
    CHECK(check(shuffled, cs).verdict == Verdict::valid_equitable);
    CHECK(cs.class_sizes() == c.class_sizes());
  }
  CHECK_THROWS_AS(color_blnk(Graph::complete(4), BlnkParams{3, 3, 1}), Error);
}

TEST_CASE("B_l(n,k) recognition") {
  CHECK(recognize_blnk(Graph::complete(5)) == BlnkParams{5, 3, 1});
  CHECK(recognize_blnk(generate_blnk({3, 4, 3})) == BlnkParams{3, 4, 3});
  CHECK_FALSE(recognize_blnk(bowtie()));
  CHECK_FALSE(recognize_blnk(Graph::complete(2)));
  CHECK_FALSE(recognize_blnk(verifier::pendant_family(2)));
}

TEST_CASE("triangle graphs with cut vertices in at most three blocks") {
  CHECK(recognize_b3le3(Graph::complete(3)));
  CHECK(recognize_b3le3(bowtie()));
  CHECK(recognize_b3le3(Graph(1)));
  CHECK_FALSE(recognize_b3le3(Graph::complete(4)));
  CHECK_FALSE(recognize_b3le3(Graph::complete(2)));
  CHECK_FALSE(recognize_b3le3(generate_blnk({3, 4, 2})));
  CHECK(recognize_b3le3(generate_blnk({3, 3, 3})));

  auto k3 = color_b3le3(Graph::complete(3));
  CHECK(k3.type == TType{TKind::T2, 0});
  CHECK(counts(k3.coloring) == std::vector<int>{1, 1, 1, 0});

  auto k1 = color_b3le3(Graph(1));
  CHECK(k1.type == TType{TKind::T1, 0});
  CHECK(counts(k1.coloring) == std::vector<int>{1, 0, 0, 0});

  auto bt = color_b3le3(bowtie(), 1);
  CHECK(bt.coloring.color_of(1) == 1);
  CHECK(bt.type == TType{TKind::T1, 1});
  CHECK_THROWS_AS(color_b3le3(bowtie(), 0), Error);
  CHECK_THROWS_AS(color_b3le3(Graph::complete(4)), Error);
}

TEST_CASE("every small member gets a typed equitable 4-colouring") {
  verifier::Enumerator members({{3}, 3, 1});
  std::size_t total = 0;
  for (int n = 1; n <= 13; n += 2) {
    for (const auto& e : members.level(n)) {
      const auto& g = e.graph;
      REQUIRE(recognize_b3le3(g));
      for (Vertex v = 0; v < g.order(); ++v) {
        if (g.order() > 1 && g.degree(v) != 2) continue;
        auto r = color_b3le3(g, v);
        CHECK(check(g, r.coloring).verdict == Verdict::valid_equitable);
        CHECK(r.coloring.color_of(v) == 1);
        CHECK(counts(r.coloring) == expected_counts(r.type));
        CHECK((r.type.kind == TKind::T1) == (g.order() % 4 == 1));
        ++total;
      }
    }
  }
  CHECK(total > 100);
}

TEST_CASE("an 11-vertex member needs four colours") {
  verifier::Enumerator members({{3}, 3, 1});
  int found = 0;
  for (const auto& e : members.level(11)) {
    auto r = conjecture_bounds(e.graph);
    if (r.lower != 3) continue;
    auto chi = chi_equitable(e.graph);
    REQUIRE(chi.value);
    if (*chi.value == 4) ++found;
    CHECK(*chi.value <= 4);
  }
  CHECK(found >= 1);
}
