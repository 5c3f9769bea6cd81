#include "blockeq/bounds.hpp"

#include <algorithm>

namespace blockeq {

int omega(const Graph& g, const BlockCutTree& bct) {
  int best = 0;
  for (const auto& block : bct.blocks) {
    for (std::size_t i = 0; i < block.size(); ++i)
      for (std::size_t j = i + 1; j < block.size(); ++j)
        if (!g.adjacent(block[i], block[j]))
          throw Error(ErrorKind::not_block_graph, "graph is not a block graph");
    best = std::max(best, static_cast<int>(block.size()));
  }
  return best;
}

int alpha_v(const Graph& g, Vertex v) {
  VertexSet rest;
  rest.reserve(g.order());
  for (Vertex u = 0; u < g.order(); ++u)
    if (u != v && !g.adjacent(u, v)) rest.push_back(u);
  return 1 + static_cast<int>(independence_number(g.induced(rest)));
}

int alpha_min(const Graph& g) {
  if (g.order() == 0)
    throw Error(ErrorKind::invalid_argument, "alpha_min of the empty graph");
  int best = static_cast<int>(g.order());
  for (Vertex v = 0; v < g.order(); ++v) best = std::min(best, alpha_v(g, v));
  return best;
}

bool is_well_covered(const Graph& g) {
  return alpha_min(g) == static_cast<int>(independence_number(g));
}

int conjecture_lower_bound(int n, int omega, int alpha_min) {
  const int ratio = (n + 1 + alpha_min) / (alpha_min + 1);
  return std::max(omega, ratio);
}

BoundsReport conjecture_bounds(const Graph& g) {
  if (g.order() == 0)
    throw Error(ErrorKind::invalid_argument, "empty graph");
  auto bct = block_decomposition(g);
  BoundsReport r;
  r.omega = omega(g, bct);
  r.alpha = static_cast<int>(independence_number(g));
  r.alpha_min = alpha_min(g);
  r.lower = conjecture_lower_bound(static_cast<int>(g.order()), r.omega,
                                   r.alpha_min);
  r.upper = r.lower + 1;
  return r;
}

}  // namespace blockeq
