#pragma once

#include <cstdint>
#include <optional>

#include "blockeq/coloring.hpp"
#include "blockeq/graph.hpp"

namespace blockeq::structured {

// B_l(n, k): K_n, then l - 1 rounds of hanging k - 1 pendant K_n on every
// simplicial vertex.
struct BlnkParams {
  int n = 3;
  int k = 3;
  int l = 1;

  friend bool operator==(const BlnkParams&, const BlnkParams&) = default;
};

void validate(const BlnkParams& p);
Graph generate_blnk(const BlnkParams& p);

struct BlnkFormulas {
  std::int64_t size = 0;
  std::int64_t alpha = 0;
  std::int64_t alpha_min = 0;
};
BlnkFormulas blnk_formulas(const BlnkParams& p);

// Strongly equitable n-colouring built level by level.
Coloring color_blnk(const BlnkParams& p);
// The same colouring on an arbitrarily labelled copy: the centre block gets
// 1..n, every later block the colours missing at its cut vertex. Throws
// precondition unless recognize_blnk(g) == p.
Coloring color_blnk(const Graph& g, const BlnkParams& p);

// Parameters whose B_l(n, k) is isomorphic to g, if any.
std::optional<BlnkParams> recognize_blnk(const Graph& g);

// Connected block graph whose blocks are all triangles and whose vertices lie
// in at most three blocks. K_1 counts as a member.
bool recognize_b3le3(const Graph& g);

enum class TKind { T1, T2 };

// Colour counts with the designated vertex in A:
// T1 = (m+1, m, m, m), T2 = (m+1, m+1, m+1, m).
struct TType {
  TKind kind = TKind::T1;
  int m = 0;

  friend bool operator==(const TType&, const TType&) = default;
};

struct B3le3Coloring {
  Coloring coloring;
  TType type;
};

// Equitable 4-colouring with v coloured 1 (A). v must have degree 2 unless
// g is K_1; when omitted the lowest-index such vertex is used.
B3le3Coloring color_b3le3(const Graph& g, std::optional<Vertex> v = std::nullopt);

}  // namespace blockeq::structured
