#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "blockeq/graph.hpp"

namespace blockeq {

// Vertex colouring with colours 1..k and per-colour class sizes.
class Coloring {
 public:
  Coloring() = default;
  // Throws invalid_argument when a colour lies outside [1, k].
  Coloring(int k, std::vector<int> assignment, bool allow_empty = false);

  int colors() const noexcept { return k_; }
  std::size_t order() const noexcept { return assignment_.size(); }
  int color_of(Vertex v) const { return assignment_.at(v); }
  std::span<const int> assignment() const noexcept { return assignment_; }
  // class_sizes()[c - 1] is the size of colour class c.
  const std::vector<std::size_t>& class_sizes() const noexcept { return sizes_; }
  std::vector<VertexSet> classes() const;

  // Empty classes are only meaningful when k exceeds the vertex count.
  bool allows_empty() const noexcept { return allow_empty_; }
  // Every class has floor(n/k) or ceil(n/k) vertices.
  bool is_equitable() const;

  // Applies perm (perm[c - 1] is the new colour of c) to every vertex.
  Coloring permuted(std::span<const int> perm) const;

 private:
  int k_ = 0;
  std::vector<int> assignment_;
  std::vector<std::size_t> sizes_;
  bool allow_empty_ = false;
};

// Colour i+1 for vertex i; empty classes flagged when k > n.
Coloring rainbow_coloring(std::size_t n, int k);

enum class Verdict { valid_equitable, valid_not_equitable, improper };

struct CheckResult {
  Verdict verdict = Verdict::improper;
  // Monochromatic edge when improper.
  std::optional<Edge> witness;
};

CheckResult check(const Graph& g, const Coloring& c);

enum class Feasibility { feasible, infeasible, unknown };

struct SearchOptions {
  // Wall-clock budget per decision; 0 disables the limit.
  double budget_seconds = 0.0;
};

struct ExactResult {
  Feasibility status = Feasibility::unknown;
  std::optional<Coloring> coloring;
  std::uint64_t nodes = 0;
};

// Decides equitable k-colourability by backtracking. The class sizes are
// forced: n mod k classes of ceil(n/k), the rest floor(n/k).
ExactResult exact_equitable(const Graph& g, int k, const SearchOptions& opts = {});

// Clique number by Bron-Kerbosch with pivoting; fine at desk scale.
int clique_number(const Graph& g);

struct ChiResult {
  // nullopt when a timeout left the answer undetermined.
  std::optional<int> value;
  std::vector<int> unknown;
  // Every k proven infeasible on the way, smallest first.
  std::vector<int> infeasible;
  std::optional<Coloring> witness;
};

ChiResult chi_equitable(const Graph& g, const SearchOptions& opts = {});

struct Spectrum {
  int k_max = 0;
  // feasibility[k - 1] for k in [1, k_max].
  std::vector<Feasibility> feasibility;
  std::optional<int> chi;
  // Smallest k with [k, k_max] all feasible, measured only up to k_max.
  std::optional<int> threshold;
  // Infeasible k strictly between chi and threshold.
  std::vector<int> gaps;
  std::vector<int> unknown;
};

Spectrum spectrum(const Graph& g, int k_max, const SearchOptions& opts = {},
                  int jobs = 1);

}  // namespace blockeq
