#include "blockeq/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <numeric>
#include <sstream>

namespace blockeq {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::int64_t to_int(std::string_view tok, std::size_t line_no) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw Error(ErrorKind::parse, "line " + std::to_string(line_no) +
                                      ": expected integer, got '" +
                                      std::string(tok) + "'");
  return value;
}

bool skippable(std::string_view line) {
  auto toks = tokenize(line);
  return toks.empty() || toks.front().front() == '#';
}

}  // namespace

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph Graph::complete(std::size_t n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& nu = adj_.at(u);
  return std::binary_search(nu.begin(), nu.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < adj_.size(); ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Vertex Graph::add_vertex() {
  adj_.emplace_back();
  return static_cast<Vertex>(adj_.size() - 1);
}

void Graph::add_edge(Vertex u, Vertex v) {
  if (u >= adj_.size() || v >= adj_.size())
    throw Error(ErrorKind::invalid_argument,
                "edge endpoint out of range: " + std::to_string(u) + " " +
                    std::to_string(v));
  if (u == v)
    throw Error(ErrorKind::invalid_argument,
                "self-loop at vertex " + std::to_string(u));
  auto& nu = adj_[u];
  auto it = std::lower_bound(nu.begin(), nu.end(), v);
  if (it != nu.end() && *it == v) return;
  nu.insert(it, v);
  auto& nv = adj_[v];
  nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
  ++edge_count_;
}

void Graph::add_clique(std::span<const Vertex> vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      add_edge(vertices[i], vertices[j]);
}

Graph Graph::induced(std::span<const Vertex> vertices) const {
  std::vector<std::int64_t> index(adj_.size(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) index.at(vertices[i]) = static_cast<std::int64_t>(i);
  Graph h(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (Vertex w : adj_[vertices[i]])
      if (index[w] > static_cast<std::int64_t>(i))
        h.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(index[w]));
  return h;
}

GraphFormat detect_format(std::string_view text) {
  for (auto line : split_lines(text)) {
    auto toks = tokenize(line);
    if (toks.empty() || toks.front() == "c") continue;
    return (toks.front() == "p") ? GraphFormat::dimacs : GraphFormat::edge_list;
  }
  return GraphFormat::edge_list;
}

ParsedGraph parse_graph(std::string_view text, GraphFormat format) {
  auto lines = split_lines(text);
  ParsedGraph out;
  std::optional<std::size_t> n;

  if (format == GraphFormat::edge_list) {
    for (std::size_t i = 0; i < lines.size(); ++i) {
      if (skippable(lines[i])) continue;
      auto toks = tokenize(lines[i]);
      const std::size_t line_no = i + 1;
      if (!n) {
        if (toks.size() != 1)
          throw Error(ErrorKind::parse, "line " + std::to_string(line_no) +
                                            ": expected vertex count");
        auto value = to_int(toks[0], line_no);
        if (value < 1)
          throw Error(ErrorKind::parse, "line " + std::to_string(line_no) +
                                            ": vertex count must be positive");
        n = static_cast<std::size_t>(value);
        out.graph = Graph(*n);
        continue;
      }
      if (toks.size() != 2)
        throw Error(ErrorKind::parse, "line " + std::to_string(line_no) +
                                          ": expected 'u v'");
      auto u = to_int(toks[0], line_no);
      auto v = to_int(toks[1], line_no);
      if (u < 0 || v < 0 || u >= static_cast<std::int64_t>(*n) ||
          v >= static_cast<std::int64_t>(*n))
        throw Error(ErrorKind::parse, "line " + std::to_string(line_no) +
                                          ": vertex index out of range");
      if (u == v)
        throw Error(ErrorKind::parse,
                    "line " + std::to_string(line_no) + ": self-loop");
      out.graph.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    if (!n) throw Error(ErrorKind::parse, "missing vertex count");
    out.labels.resize(*n);
    std::iota(out.labels.begin(), out.labels.end(), 0);
    return out;
  }

  for (std::size_t i = 0; i < lines.size(); ++i) {
    auto toks = tokenize(lines[i]);
    const std::size_t line_no = i + 1;
    if (toks.empty() || toks.front() == "c" || toks.front().front() == '#')
      continue;
    if (toks.front() == "p") {
      if (n)
        throw Error(ErrorKind::parse,
                    "line " + std::to_string(line_no) + ": duplicate header");
      if (toks.size() != 4 || (toks[1] != "edge" && toks[1] != "col"))
        throw Error(ErrorKind::parse, "line " + std::to_string(line_no) +
                                          ": expected 'p edge n m'");
      auto value = to_int(toks[2], line_no);
      if (value < 1)
        throw Error(ErrorKind::parse, "line " + std::to_string(line_no) +
                                          ": vertex count must be positive");
      to_int(toks[3], line_no);
      n = static_cast<std::size_t>(value);
      out.graph = Graph(*n);
      continue;
    }
    if (toks.front() != "e" || toks.size() != 3)
      throw Error(ErrorKind::parse, "line " + std::to_string(line_no) +
                                        ": expected 'e u v'");
    if (!n)
      throw Error(ErrorKind::parse, "line " + std::to_string(line_no) +
                                        ": edge before 'p edge' header");
    auto u = to_int(toks[1], line_no);
    auto v = to_int(toks[2], line_no);
    if (u < 1 || v < 1 || u > static_cast<std::int64_t>(*n) ||
        v > static_cast<std::int64_t>(*n))
      throw Error(ErrorKind::parse, "line " + std::to_string(line_no) +
                                        ": vertex index out of range");
    if (u == v)
      throw Error(ErrorKind::parse,
                  "line " + std::to_string(line_no) + ": self-loop");
    out.graph.add_edge(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
  }
  if (!n) throw Error(ErrorKind::parse, "missing 'p edge' header");
  out.labels.resize(*n);
  std::iota(out.labels.begin(), out.labels.end(), 1);
  return out;
}

Hypergraph parse_hypergraph(std::string_view text) {
  auto lines = split_lines(text);
  Hypergraph h;
  bool have_n = false;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (skippable(lines[i])) continue;
    auto toks = tokenize(lines[i]);
    const std::size_t line_no = i + 1;
    if (!have_n) {
      if (toks.size() != 1)
        throw Error(ErrorKind::parse, "line " + std::to_string(line_no) +
                                          ": expected vertex count");
      auto value = to_int(toks[0], line_no);
      if (value < 0)
        throw Error(ErrorKind::parse, "line " + std::to_string(line_no) +
                                          ": negative vertex count");
      h.n = static_cast<std::size_t>(value);
      have_n = true;
      continue;
    }
    VertexSet edge;
    for (auto tok : toks) {
      auto v = to_int(tok, line_no);
      if (v < 0 || v >= static_cast<std::int64_t>(h.n))
        throw Error(ErrorKind::parse, "line " + std::to_string(line_no) +
                                          ": vertex index out of range");
      edge.push_back(static_cast<Vertex>(v));
    }
    std::sort(edge.begin(), edge.end());
    edge.erase(std::unique(edge.begin(), edge.end()), edge.end());
    h.hyperedges.push_back(std::move(edge));
  }
  if (!have_n) throw Error(ErrorKind::parse, "missing vertex count");
  return h;
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.order() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  std::vector<int> dist(g.order(), -1);
  std::deque<Vertex> queue{source};
  dist.at(source) = 0;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u))
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
  }
  return dist;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> comps;
  std::vector<bool> seen(g.order(), false);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    VertexSet comp;
    std::vector<Vertex> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (Vertex w : g.neighbors(u))
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool is_connected(const Graph& g) {
  return g.order() > 0 && connected_components(g).size() == 1;
}

std::size_t BlockCutTree::cut_count(std::size_t block) const {
  std::size_t count = 0;
  for (Vertex v : blocks.at(block))
    if (is_cut(v)) ++count;
  return count;
}

// Iterative Hopcroft-Tarjan over an explicit edge stack.
BlockCutTree block_decomposition(const Graph& g) {
  const std::size_t n = g.order();
  BlockCutTree bct;
  bct.vertex_blocks.resize(n);

  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<Edge> edge_stack;
  int timer = 0;

  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;
  };

  auto emit_block = [&](Edge until) {
    VertexSet block;
    while (true) {
      Edge e = edge_stack.back();
      edge_stack.pop_back();
      block.push_back(e.first);
      block.push_back(e.second);
      if (e == until) break;
    }
    std::sort(block.begin(), block.end());
    block.erase(std::unique(block.begin(), block.end()), block.end());
    bct.blocks.push_back(std::move(block));
  };

  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] >= 0) continue;
    if (g.degree(root) == 0) {
      disc[root] = timer++;
      bct.blocks.push_back({root});
      continue;
    }
    std::vector<Frame> stack{{root, root, 0}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& nbrs = g.neighbors(f.v);
      if (f.next < nbrs.size()) {
        Vertex w = nbrs[f.next++];
        if (disc[w] < 0) {
          edge_stack.emplace_back(f.v, w);
          disc[w] = low[w] = timer++;
          stack.push_back({w, f.v, 0});
        } else if (w != f.parent && disc[w] < disc[f.v]) {
          edge_stack.emplace_back(f.v, w);
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      Frame done = f;
      stack.pop_back();
      if (stack.empty()) break;
      Vertex parent = stack.back().v;
      low[parent] = std::min(low[parent], low[done.v]);
      if (low[done.v] >= disc[parent]) emit_block(Edge{parent, done.v});
    }
  }

  for (std::size_t b = 0; b < bct.blocks.size(); ++b)
    for (Vertex v : bct.blocks[b]) bct.vertex_blocks[v].push_back(b);
  for (Vertex v = 0; v < n; ++v)
    if (bct.vertex_blocks[v].size() > 1) bct.cut_vertices.push_back(v);
  for (Vertex v : bct.cut_vertices)
    for (std::size_t b : bct.vertex_blocks[v]) bct.incidence.emplace_back(b, v);
  return bct;
}

bool is_block_graph(const Graph& g) {
  auto bct = block_decomposition(g);
  for (const auto& block : bct.blocks)
    for (std::size_t i = 0; i < block.size(); ++i)
      for (std::size_t j = i + 1; j < block.size(); ++j)
        if (!g.adjacent(block[i], block[j])) return false;
  return true;
}

VertexClasses classify_vertices(const Graph& g, const BlockCutTree& bct) {
  VertexClasses out;
  for (Vertex v = 0; v < g.order(); ++v)
    (bct.is_cut(v) ? out.cut : out.simplicial).push_back(v);
  return out;
}

BlockClasses classify_blocks(const BlockCutTree& bct) {
  BlockClasses out;
  for (std::size_t b = 0; b < bct.blocks.size(); ++b) {
    const std::size_t cuts = bct.cut_count(b);
    if (cuts == 1)
      out.pendant.push_back(b);
    else if (cuts > 0 && cuts == bct.blocks[b].size())
      out.internal.push_back(b);
  }
  return out;
}

std::optional<std::vector<Vertex>> perfect_elimination_ordering(
    const Graph& g) {
  const std::size_t n = g.order();
  // Maximum cardinality search with bucket lists.
  std::vector<int> weight(n, 0);
  std::vector<bool> numbered(n, false);
  std::vector<std::vector<Vertex>> buckets(n + 1);
  for (Vertex v = n; v-- > 0;) buckets[0].push_back(v);
  std::vector<Vertex> mcs;
  mcs.reserve(n);
  int top = 0;
  while (mcs.size() < n) {
    while (top >= 0) {
      auto& bucket = buckets[top];
      while (!bucket.empty() &&
             (numbered[bucket.back()] || weight[bucket.back()] != top))
        bucket.pop_back();
      if (!bucket.empty()) break;
      --top;
    }
    Vertex v = buckets[top].back();
    buckets[top].pop_back();
    numbered[v] = true;
    mcs.push_back(v);
    for (Vertex w : g.neighbors(v))
      if (!numbered[w]) {
        ++weight[w];
        buckets[weight[w]].push_back(w);
        top = std::max(top, weight[w]);
      }
  }
  std::vector<Vertex> peo(mcs.rbegin(), mcs.rend());

  // Verify: for every v, its later neighbours must form a clique; it suffices
  // that the earliest later neighbour sees all the others.
  std::vector<std::size_t> pos(n);
  for (std::size_t i = 0; i < n; ++i) pos[peo[i]] = i;
  for (Vertex v : peo) {
    std::optional<Vertex> parent;
    for (Vertex w : g.neighbors(v))
      if (pos[w] > pos[v] && (!parent || pos[w] < pos[*parent])) parent = w;
    if (!parent) continue;
    for (Vertex w : g.neighbors(v))
      if (pos[w] > pos[v] && w != *parent && !g.adjacent(*parent, w))
        return std::nullopt;
  }
  return peo;
}

VertexSet max_independent_set(const Graph& g) {
  auto peo = perfect_elimination_ordering(g);
  if (!peo) throw Error(ErrorKind::not_chordal, "graph is not chordal");
  std::vector<bool> blocked(g.order(), false);
  VertexSet out;
  for (Vertex v : *peo) {
    if (blocked[v]) continue;
    out.push_back(v);
    for (Vertex w : g.neighbors(v)) blocked[w] = true;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t independence_number(const Graph& g) {
  return max_independent_set(g).size();
}

Graph line_graph(const Hypergraph& h) {
  for (const auto& e : h.hyperedges) {
    if (e.empty())
      throw Error(ErrorKind::invalid_argument, "empty hyperedge");
    for (Vertex v : e)
      if (v >= h.n)
        throw Error(ErrorKind::invalid_argument, "hyperedge vertex out of range");
  }
  Graph g(h.hyperedges.size());
  std::vector<std::vector<Vertex>> incident(h.n);
  for (Vertex i = 0; i < h.hyperedges.size(); ++i)
    for (Vertex v : h.hyperedges[i]) incident[v].push_back(i);
  for (const auto& list : incident) g.add_clique(list);
  return g;
}

}  // namespace blockeq
