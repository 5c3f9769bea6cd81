#pragma once

#include <optional>
#include <span>
#include <vector>

#include "blockeq/coloring.hpp"
#include "blockeq/graph.hpp"

namespace blockeq::small_alpha {

// Cliques sharing one common vertex, B_{n_1,...,n_t}. K_1 is the star with
// no cliques.
struct StarOfCliques {
  Vertex center = 0;
  // Non-decreasing.
  std::vector<int> sizes;
  // cliques[i] has sizes[i] vertices, center included.
  std::vector<VertexSet> cliques;

  std::size_t order() const;
};

// Builds B_{sizes} with the center as vertex 0.
Graph star_graph(std::span<const int> sizes);

std::optional<StarOfCliques> recognize_alpha_min_1(const Graph& g);

// Maximum matching size of the complete multipartite graph K_{m_1,...,m_t}.
int multipartite_matching(std::span<const int> part_sizes);

int chi_eq_star(const StarOfCliques& s);

// Centre alone, then a maximum matching of the complement of G - center as
// pairs, leftovers as singletons.
Coloring color_alpha_min_1(const StarOfCliques& s);

enum class Variant { direct, bridged };

// A star of cliques around x, plus Q_0 glued to a simplicial vertex w of the
// star clique Q_l, either directly or through a K_2 bridge {w, u}.
struct AlphaMin2Structure {
  Variant variant = Variant::direct;
  StarOfCliques star;
  // Index of Q_l in star.cliques / star.sizes.
  std::size_t l = 0;
  int n0 = 0;
  // w: the simplicial vertex of Q_l carrying the attachment.
  Vertex attach_simplicial = 0;
  // u for the bridged variant (the cut vertex of Q_0); w for direct.
  Vertex q0_joint = 0;
  VertexSet q0;
};

std::optional<AlphaMin2Structure> recognize_alpha_min_2(const Graph& g);

// The two-class-start periodic colouring with k colours. Throws precondition
// if k < omega; throws internal if the result is not equitable.
Coloring color_alpha_min_2(const Graph& g, const AlphaMin2Structure& st, int k);

}  // namespace blockeq::small_alpha
