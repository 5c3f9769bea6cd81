#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "blockeq/coloring.hpp"
#include "blockeq/graph.hpp"

namespace blockeq::wellcovered {

// Glue a clique Q of size s to `host`, then hang one pendant clique on every
// vertex of Q except the host. pendant_sizes[i] counts the cut vertex v_i.
struct AttachOp {
  Vertex host = 0;
  int s = 2;
  std::vector<int> pendant_sizes;

  friend bool operator==(const AttachOp&, const AttachOp&) = default;
};

struct WCDecomposition {
  int base_size = 1;
  std::vector<AttachOp> ops;

  friend bool operator==(const WCDecomposition&, const WCDecomposition&) = default;
};

// Vertex numbering of generate(): base clique is 0..base_size-1; each op then
// appends Q's s-1 new vertices followed by every pendant clique's q_i - 1
// simplicial vertices in pendant order.
Graph generate(const WCDecomposition& recipe);

struct Decomposed {
  WCDecomposition recipe;
  // order[i] is the input vertex that generate() numbers i.
  std::vector<Vertex> order;
};

// Strips internal cliques with their pendants until a single clique is left.
// nullopt iff g is not well-covered. Throws for non-block or disconnected g.
std::optional<Decomposed> decompose(const Graph& g);

// Random recipe with every clique of size <= max_omega and at most max_n
// vertices in total.
WCDecomposition random_recipe(std::mt19937_64& rng, int max_omega, int max_n);

// 0-1 matrix, row-major. Rows are the cliques of one attach step, columns the
// colours ordered by `col`.
class ZeroOneMatrix {
 public:
  ZeroOneMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), cells_(rows * cols, 0) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  int at(std::size_t i, std::size_t j) const { return cells_.at(i * cols_ + j); }
  void set(std::size_t i, std::size_t j, int value) {
    cells_.at(i * cols_ + j) = static_cast<unsigned char>(value != 0);
  }

  std::vector<int> row_sums() const;
  std::vector<int> col_sums() const;
  // Column of row i's anti-diagonal cell (0-based): rows - 1 - i.
  std::size_t anti_column(std::size_t i) const { return rows_ - 1 - i; }
  bool has_anti_diagonal() const;
  bool is_modified_ferrers() const;

  friend bool operator==(const ZeroOneMatrix&, const ZeroOneMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<unsigned char> cells_;
};

// Prefix sums of a dominate those of b (both zero-padded). Throws on unequal
// totals.
bool dominates(std::span<const int> a, std::span<const int> b);

ZeroOneMatrix modified_ferrers(std::span<const int> q, std::size_t y);

// b_1 - b_last <= 2, b_i - b_last <= 1 for i >= 2, and |b| >= l.
bool semi_balanced(std::span<const int> b, std::size_t l);

// Moves ones between columns until the column sums equal b, never touching an
// anti-diagonal cell. `steps` receives the number of swaps.
ZeroOneMatrix gale_ryser_transform(ZeroOneMatrix m, std::span<const int> b,
                                   std::size_t* steps = nullptr);

struct TargetVector {
  // Non-increasing colour demands of G - H + v.
  std::vector<int> p;
  // col[i] is the colour (1-based) whose demand is p[i].
  std::vector<int> col;
};

// h_counts[c - 1] is how often colour c occurs in H, v_color the host colour,
// new_total the vertex count of G - H + v.
TargetVector target_vector(std::span<const int> h_counts, int v_color,
                           int new_total);

struct Recolored {
  Coloring coloring;
  TargetVector target;
};

// Swaps colours so that v gets colour 1 and col[0] == 1.
Recolored recolor_for_v(const Coloring& h, Vertex v, const TargetVector& target);

// Equitable k-colouring of a well-covered block graph for any k >= omega.
Coloring color_well_covered(const Graph& g, int k);

}  // namespace blockeq::wellcovered
