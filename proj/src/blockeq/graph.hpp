#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace blockeq {

using Vertex = std::uint32_t;
// Always kept sorted ascending.
using VertexSet = std::vector<Vertex>;
using Edge = std::pair<Vertex, Vertex>;

enum class ErrorKind {
  parse,
  invalid_argument,
  not_block_graph,
  not_chordal,
  precondition,
  internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adj_(n) {}

  static Graph from_edges(std::size_t n, std::span<const Edge> edges);
  static Graph complete(std::size_t n);

  std::size_t order() const noexcept { return adj_.size(); }
  std::size_t size() const noexcept { return edge_count_; }

  const VertexSet& neighbors(Vertex v) const { return adj_.at(v); }
  std::size_t degree(Vertex v) const { return adj_.at(v).size(); }
  bool adjacent(Vertex u, Vertex v) const;

  // Sorted list of edges (u, v) with u < v.
  std::vector<Edge> edges() const;

  Vertex add_vertex();
  // Adds the edge if absent; self-loops and out-of-range endpoints throw.
  void add_edge(Vertex u, Vertex v);
  // Turns the given vertices into a clique.
  void add_clique(std::span<const Vertex> vertices);

  // Subgraph induced by `vertices`; vertex i of the result is vertices[i].
  Graph induced(std::span<const Vertex> vertices) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<VertexSet> adj_;
  std::size_t edge_count_ = 0;
};

struct Hypergraph {
  std::size_t n = 0;
  std::vector<VertexSet> hyperedges;
};

enum class GraphFormat { edge_list, dimacs };

// Parsed input plus the original label of every dense vertex index.
struct ParsedGraph {
  Graph graph;
  std::vector<std::int64_t> labels;
};

ParsedGraph parse_graph(std::string_view text, GraphFormat format);
Hypergraph parse_hypergraph(std::string_view text);
// Picks DIMACS when a `p edge` header is present.
GraphFormat detect_format(std::string_view text);
std::string to_edge_list(const Graph& g);

std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);
// BFS distances from `source`; unreachable vertices get -1.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

// Blocks (maximal 2-connected vertex sets, bridges and isolated vertices
// included) and the block/cut-vertex incidence forest.
struct BlockCutTree {
  std::vector<VertexSet> blocks;
  VertexSet cut_vertices;
  // (block index, cut vertex) pairs.
  std::vector<std::pair<std::size_t, Vertex>> incidence;
  // Indices of the blocks containing each vertex.
  std::vector<std::vector<std::size_t>> vertex_blocks;

  bool is_cut(Vertex v) const { return vertex_blocks.at(v).size() > 1; }
  std::size_t cut_count(std::size_t block) const;
};

BlockCutTree block_decomposition(const Graph& g);
bool is_block_graph(const Graph& g);

struct VertexClasses {
  VertexSet simplicial;
  VertexSet cut;
};
struct BlockClasses {
  std::vector<std::size_t> pendant;
  std::vector<std::size_t> internal;
};

VertexClasses classify_vertices(const Graph& g, const BlockCutTree& bct);
BlockClasses classify_blocks(const BlockCutTree& bct);

// Maximum cardinality search, reversed; nullopt iff g is not chordal.
std::optional<std::vector<Vertex>> perfect_elimination_ordering(const Graph& g);

// Maximum independent set of a chordal graph. Throws not_chordal otherwise.
VertexSet max_independent_set(const Graph& g);
std::size_t independence_number(const Graph& g);

// One vertex per hyperedge, adjacent iff the hyperedges intersect.
Graph line_graph(const Hypergraph& h);

}  // namespace blockeq
