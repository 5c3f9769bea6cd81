#include "doctest.h"

#include "blockeq/json_io.hpp"

using namespace blockeq;
using blockeq::io::json;

TEST_CASE("recipe round trip") {
  wellcovered::WCDecomposition r{3, {{0, 2, {3}}, {2, 4, {3, 3, 2}}}};
  auto j = io::recipe_json(r);
  CHECK(j["ops"][1]["pendants"] == json::array({3, 3, 2}));
  CHECK(io::recipe_from_json(j) == r);
  CHECK(io::recipe_from_json(json::parse(R"({"base": 4})")).ops.empty());
  CHECK_THROWS_AS(io::recipe_from_json(json::parse(R"({"ops": []})")), Error);
  CHECK_THROWS_AS(io::recipe_from_json(json::parse(R"({"base": 2, "ops": [{"host": "x"}]})")),
                  Error);
}

TEST_CASE("bounds and colouring objects") {
  auto g = Graph::complete(3);
  auto b = io::bounds_json(conjecture_bounds(g), g);
  CHECK(b["lower"] == 3);
  CHECK(b["chi_eq"].is_null());
  CHECK(b.contains("code"));
  Graph c4 = Graph::from_edges(4, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  BoundsReport empty;
  CHECK_FALSE(io::bounds_json(empty, c4).contains("code"));

  Coloring c(2, {1, 2, 1});
  const std::vector<std::int64_t> labels{10, 20, 30};
  auto cj = io::coloring_json(c, labels);
  CHECK(cj["k"] == 2);
  CHECK(cj["classes"] == json::parse("[[10, 30], [20]]"));
  CHECK(cj["sizes"] == json::array({2, 1}));
}

TEST_CASE("verification records") {
  verifier::VerificationRecord r;
  r.code = {"b2()"};
  r.graph = Graph::complete(2);
  r.bounds = conjecture_bounds(r.graph);
  r.bounds.chi_eq = 2;
  r.verdict = verifier::Outcome::at_lower;
  auto j = io::record_json(2, r);
  CHECK(j["verdict"] == "at_lower");
  CHECK(j["chi_eq"] == 2);
  CHECK_FALSE(j.contains("certificate"));

  r.verdict = verifier::Outcome::violation;
  r.infeasible = {2, 3};
  auto v = io::record_json(2, r);
  CHECK(v["verdict"] == "VIOLATION");
  CHECK(v["certificate"]["edges"] == json::parse("[[0, 1]]"));
  CHECK(v["certificate"]["infeasible_k"] == json::array({2, 3}));

  verifier::VerificationSummary s;
  s.levels.push_back({2, 1, 0, 0, 0, 1, 0});
  s.counterexample = r;
  auto sj = io::summary_json(s);
  CHECK(sj["summary"]["violations"] == 1);
  CHECK(sj["summary"]["counterexample"]["code"] == "b2()");
}

TEST_CASE("structures serialise") {
  CHECK(io::ttype_json({structured::TKind::T2, 3}) == json::parse(R"({"kind": "T2", "m": 3})"));
  CHECK(io::blnk_json({3, 4, 2})["k"] == 4);
  auto s = small_alpha::recognize_alpha_min_1(small_alpha::star_graph(std::vector<int>{2, 3}));
  REQUIRE(s);
  CHECK(io::star_json(*s)["sizes"] == json::array({2, 3}));
  Spectrum sp;
  sp.k_max = 2;
  sp.feasibility = {Feasibility::infeasible, Feasibility::feasible};
  sp.chi = 2;
  CHECK(io::spectrum_json(sp)["feasibility"]["1"] == "infeasible");
  CHECK(io::spectrum_json(sp)["threshold"].is_null());
}
