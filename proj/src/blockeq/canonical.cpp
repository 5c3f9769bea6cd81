#include "blockeq/canonical.hpp"

#include <algorithm>

namespace blockeq {

namespace {

struct Tree {
  // Nodes [0, blocks) are blocks, the rest cut vertices.
  std::vector<std::string> label;
  std::vector<std::vector<std::size_t>> adj;
};

std::string encode(const Tree& t, std::size_t node, std::size_t parent) {
  std::vector<std::string> children;
  for (std::size_t w : t.adj[node])
    if (w != parent) children.push_back(encode(t, w, node));
  std::sort(children.begin(), children.end());
  std::string out = t.label[node];
  out += '(';
  for (const auto& c : children) out += c;
  out += ')';
  return out;
}

std::vector<std::size_t> centres(const Tree& t) {
  const std::size_t n = t.adj.size();
  if (n <= 2) {
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    return all;
  }
  std::vector<std::size_t> degree(n);
  std::vector<std::size_t> layer;
  for (std::size_t i = 0; i < n; ++i) {
    degree[i] = t.adj[i].size();
    if (degree[i] <= 1) layer.push_back(i);
  }
  std::size_t remaining = n;
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<std::size_t> next;
    for (std::size_t u : layer)
      for (std::size_t w : t.adj[u])
        if (--degree[w] == 1) next.push_back(w);
    layer = std::move(next);
  }
  return layer;
}

}  // namespace

CanonicalCode canonical_code(const Graph& g) {
  if (!is_connected(g))
    throw Error(ErrorKind::precondition, "canonical code needs a connected graph");
  if (!is_block_graph(g))
    throw Error(ErrorKind::not_block_graph, "graph is not a block graph");
  const auto bct = block_decomposition(g);
  Tree t;
  const std::size_t nb = bct.blocks.size();
  for (const auto& block : bct.blocks) t.label.push_back("b" + std::to_string(block.size()));
  t.adj.resize(nb);
  std::vector<std::size_t> cut_node(g.order(), 0);
  for (Vertex v : bct.cut_vertices) {
    cut_node[v] = t.label.size();
    t.label.emplace_back("c");
    t.adj.emplace_back();
  }
  for (auto [b, v] : bct.incidence) {
    t.adj[b].push_back(cut_node[v]);
    t.adj[cut_node[v]].push_back(b);
  }
  CanonicalCode best;
  bool first = true;
  for (std::size_t root : centres(t)) {
    auto code = encode(t, root, root);
    if (first || code < best.code) best.code = std::move(code);
    first = false;
  }
  return best;
}

}  // namespace blockeq
