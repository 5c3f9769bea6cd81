#include "blockeq/small_alpha.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "blockeq/bounds.hpp"

namespace blockeq::small_alpha {

std::size_t StarOfCliques::order() const {
  std::size_t n = 1;
  for (int s : sizes) n += static_cast<std::size_t>(s - 1);
  return n;
}

Graph star_graph(std::span<const int> sizes) {
  Graph g(1);
  for (int s : sizes) {
    if (s < 2) throw Error(ErrorKind::invalid_argument, "star clique size must be >= 2");
    std::vector<Vertex> clique{0};
    for (int i = 1; i < s; ++i) clique.push_back(g.add_vertex());
    g.add_clique(clique);
  }
  return g;
}

namespace {

// Blocks sorted by size, then by smallest vertex.
void sort_cliques(std::vector<VertexSet>& cliques) {
  std::stable_sort(cliques.begin(), cliques.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
}

StarOfCliques make_star(Vertex center, std::vector<VertexSet> cliques) {
  sort_cliques(cliques);
  StarOfCliques s;
  s.center = center;
  for (const auto& c : cliques) s.sizes.push_back(static_cast<int>(c.size()));
  s.cliques = std::move(cliques);
  return s;
}

bool connected_block_graph(const Graph& g) {
  return is_connected(g) && is_block_graph(g);
}

}  // namespace

std::optional<StarOfCliques> recognize_alpha_min_1(const Graph& g) {
  if (!connected_block_graph(g)) return std::nullopt;
  if (g.order() == 1) return StarOfCliques{0, {}, {}};
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) + 1 != g.order()) continue;
    const auto bct = block_decomposition(g);
    std::vector<VertexSet> cliques;
    for (std::size_t b : bct.vertex_blocks[v]) cliques.push_back(bct.blocks[b]);
    return make_star(v, std::move(cliques));
  }
  return std::nullopt;
}

int multipartite_matching(std::span<const int> part_sizes) {
  if (part_sizes.empty()) return 0;
  for (int m : part_sizes)
    if (m < 1) throw Error(ErrorKind::invalid_argument, "part sizes must be >= 1");
  const int largest = *std::max_element(part_sizes.begin(), part_sizes.end());
  const int total = std::accumulate(part_sizes.begin(), part_sizes.end(), 0);
  const int rest = total - largest;
  return largest >= rest ? rest : total / 2;
}

int chi_eq_star(const StarOfCliques& s) {
  if (s.sizes.empty()) return 1;
  const int nt = s.sizes.back();
  int rest = 0;
  for (std::size_t i = 0; i + 1 < s.sizes.size(); ++i) rest += s.sizes[i] - 1;
  if (nt - 1 >= rest) return nt;
  const int n = static_cast<int>(s.order());
  return (n + 2) / 2;
}

Coloring color_alpha_min_1(const StarOfCliques& s) {
  const std::size_t n = s.order();
  std::vector<int> colour(n, 0);
  Vertex max_vertex = s.center;
  for (const auto& c : s.cliques)
    for (Vertex v : c) max_vertex = std::max(max_vertex, v);
  if (static_cast<std::size_t>(max_vertex) + 1 != n)
    throw Error(ErrorKind::invalid_argument, "star cliques do not cover 0..n-1");
  colour[s.center] = 1;

  std::vector<std::vector<Vertex>> parts;
  for (const auto& c : s.cliques) {
    std::vector<Vertex> part;
    for (Vertex v : c)
      if (v != s.center) part.push_back(v);
    parts.push_back(std::move(part));
  }

  std::vector<std::pair<Vertex, Vertex>> pairs;
  std::vector<Vertex> singles;
  if (!parts.empty()) {
    std::size_t big = 0;
    std::size_t total = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      total += parts[i].size();
      if (parts[i].size() > parts[big].size()) big = i;
    }
    if (parts[big].size() >= total - parts[big].size()) {
      // Everything else against the largest part.
      std::size_t next = 0;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i == big) continue;
        for (Vertex v : parts[i]) pairs.emplace_back(parts[big][next++], v);
      }
      for (; next < parts[big].size(); ++next) singles.push_back(parts[big][next]);
    } else {
      // Repeatedly match the two currently largest parts.
      using Entry = std::pair<std::size_t, std::size_t>;  // (remaining, -index)
      auto cmp = [](const Entry& a, const Entry& b) {
        if (a.first != b.first) return a.first < b.first;
        return a.second > b.second;
      };
      std::priority_queue<Entry, std::vector<Entry>, decltype(cmp)> heap(cmp);
      std::vector<std::size_t> used(parts.size(), 0);
      for (std::size_t i = 0; i < parts.size(); ++i) heap.emplace(parts[i].size(), i);
      while (heap.size() >= 2) {
        auto [ra, ia] = heap.top();
        heap.pop();
        auto [rb, ib] = heap.top();
        heap.pop();
        pairs.emplace_back(parts[ia][used[ia]++], parts[ib][used[ib]++]);
        if (ra > 1) heap.emplace(ra - 1, ia);
        if (rb > 1) heap.emplace(rb - 1, ib);
      }
      if (!heap.empty()) {
        const std::size_t i = heap.top().second;
        for (std::size_t j = used[i]; j < parts[i].size(); ++j) singles.push_back(parts[i][j]);
      }
    }
  }

  int next_colour = 2;
  for (auto [u, v] : pairs) {
    colour[u] = next_colour;
    colour[v] = next_colour++;
  }
  for (Vertex v : singles) colour[v] = next_colour++;
  return Coloring(next_colour - 1, std::move(colour));
}

std::optional<AlphaMin2Structure> recognize_alpha_min_2(const Graph& g) {
  if (!connected_block_graph(g) || g.order() < 4) return std::nullopt;
  if (recognize_alpha_min_1(g)) return std::nullopt;
  const auto bct = block_decomposition(g);

  for (Variant variant : {Variant::direct, Variant::bridged}) {
    for (Vertex x = 0; x < g.order(); ++x) {
      const auto& at_x = bct.vertex_blocks[x];
      if (at_x.size() < 2) continue;
      std::vector<std::size_t> rest;
      for (std::size_t b = 0; b < bct.blocks.size(); ++b)
        if (std::find(at_x.begin(), at_x.end(), b) == at_x.end()) rest.push_back(b);
      const std::size_t expected = variant == Variant::direct ? 1 : 2;
      if (rest.size() != expected) continue;

      // The block touching the star and the one hanging off it.
      std::optional<std::size_t> near, far;
      for (std::size_t b : rest) {
        bool touches = false;
        for (Vertex v : bct.blocks[b])
          for (std::size_t sb : bct.vertex_blocks[v])
            touches |= std::find(at_x.begin(), at_x.end(), sb) != at_x.end();
        (touches ? near : far) = b;
      }
      if (!near) continue;
      const auto& near_block = bct.blocks[*near];
      if (variant == Variant::bridged && (!far || near_block.size() != 2)) continue;

      std::optional<Vertex> w;
      for (Vertex v : near_block)
        if (bct.vertex_blocks[v].size() > 1)
          for (std::size_t sb : bct.vertex_blocks[v])
            if (std::find(at_x.begin(), at_x.end(), sb) != at_x.end()) w = v;
      if (!w || *w == x || bct.vertex_blocks[*w].size() != 2) continue;

      AlphaMin2Structure st;
      st.variant = variant;
      std::vector<VertexSet> cliques;
      for (std::size_t b : at_x) cliques.push_back(bct.blocks[b]);
      st.star = make_star(x, std::move(cliques));
      for (std::size_t i = 0; i < st.star.cliques.size(); ++i)
        if (std::binary_search(st.star.cliques[i].begin(), st.star.cliques[i].end(), *w))
          st.l = i;
      st.attach_simplicial = *w;
      if (variant == Variant::direct) {
        st.q0 = near_block;
        st.q0_joint = *w;
      } else {
        const Vertex u = near_block[0] == *w ? near_block[1] : near_block[0];
        const auto& far_block = bct.blocks[*far];
        if (!std::binary_search(far_block.begin(), far_block.end(), u) ||
            bct.vertex_blocks[u].size() != 2)
          continue;
        st.q0 = far_block;
        st.q0_joint = u;
      }
      st.n0 = static_cast<int>(st.q0.size());
      return st;
    }
  }
  return std::nullopt;
}

Coloring color_alpha_min_2(const Graph& g, const AlphaMin2Structure& st, int k) {
  const int w = omega(g, block_decomposition(g));
  if (k < w || k < 2)
    throw Error(ErrorKind::precondition,
                "k = " + std::to_string(k) + " is below omega = " + std::to_string(w));
  const Vertex x = st.star.center;
  std::vector<int> colour(g.order(), 0);
  std::vector<Vertex> sequence;

  auto append_without = [&](const VertexSet& clique, std::initializer_list<Vertex> skip) {
    for (Vertex v : clique)
      if (std::find(skip.begin(), skip.end(), v) == skip.end()) sequence.push_back(v);
  };

  Vertex y = st.q0_joint;
  if (st.variant == Variant::direct) {
    const Vertex joint = st.attach_simplicial;
    for (Vertex v : st.q0)
      if (v != joint) {
        y = v;
        break;
      }
    append_without(st.star.cliques[st.l], {x, joint});
    sequence.push_back(joint);
    append_without(st.q0, {y, joint});
    for (std::size_t i = 0; i < st.star.cliques.size(); ++i)
      if (i != st.l) append_without(st.star.cliques[i], {x});
  } else {
    for (const auto& clique : st.star.cliques) append_without(clique, {x});
    append_without(st.q0, {y});
  }

  colour[x] = 1;
  colour[y] = 1;
  for (std::size_t i = 0; i < sequence.size(); ++i)
    colour[sequence[i]] = 2 + static_cast<int>(i % static_cast<std::size_t>(k - 1));
  if (sequence.size() + 2 != g.order())
    throw Error(ErrorKind::internal, "structure does not cover the graph");

  Coloring c(k, std::move(colour));
  auto verdict = check(g, c).verdict;
  if (verdict != Verdict::valid_equitable)
    throw Error(ErrorKind::internal,
                verdict == Verdict::improper
                    ? "periodic colouring is improper"
                    : "periodic colouring is not equitable");
  return c;
}

}  // namespace blockeq::small_alpha
