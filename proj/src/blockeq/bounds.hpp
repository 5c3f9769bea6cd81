#pragma once

#include <optional>

#include "blockeq/graph.hpp"

namespace blockeq {

// Clique number, independence data and the gap-one bracket of a block graph.
struct BoundsReport {
  int omega = 0;
  int alpha = 0;
  int alpha_min = 0;
  // max(omega, ceil((n + 1) / (alpha_min + 1)))
  int lower = 0;
  // Always lower + 1: the conjectured bracket, even where lower is attained.
  int upper = 0;
  std::optional<int> chi_eq;
};

// Size of the largest block. Throws not_block_graph.
int omega(const Graph& g, const BlockCutTree& bct);

// Largest independent set through v: 1 + alpha(g - N[v]). g must be chordal.
int alpha_v(const Graph& g, Vertex v);
int alpha_min(const Graph& g);
bool is_well_covered(const Graph& g);

// max(omega, ceil((n+1)/(alpha_min+1)))
int conjecture_lower_bound(int n, int omega, int alpha_min);
BoundsReport conjecture_bounds(const Graph& g);

}  // namespace blockeq
