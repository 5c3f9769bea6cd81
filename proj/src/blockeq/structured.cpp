#include "blockeq/structured.hpp"

#include <algorithm>
#include <array>
#include <deque>

#include "blockeq/canonical.hpp"

namespace blockeq::structured {

void validate(const BlnkParams& p) {
  if (p.n < 3 || p.k < 3 || p.l < 1)
    throw Error(ErrorKind::invalid_argument,
                "B_l(n,k) needs n >= 3, k >= 3, l >= 1");
}

namespace {

std::int64_t ipow(std::int64_t base, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= base;
  return r;
}

struct BlnkBuild {
  Graph graph;
  std::vector<int> colour;
};

BlnkBuild build_blnk(const BlnkParams& p) {
  validate(p);
  const auto size = blnk_formulas(p).size;
  if (size > 5'000'000)
    throw Error(ErrorKind::invalid_argument, "B_l(n,k) too large to materialise");
  BlnkBuild out{Graph::complete(static_cast<std::size_t>(p.n)), {}};
  std::vector<Vertex> frontier;
  for (int i = 0; i < p.n; ++i) {
    frontier.push_back(static_cast<Vertex>(i));
    out.colour.push_back(i + 1);
  }
  for (int level = 2; level <= p.l; ++level) {
    std::vector<Vertex> next;
    for (Vertex s : frontier) {
      const int cs = out.colour[s];
      for (int j = 0; j + 1 < p.k; ++j) {
        std::vector<Vertex> clique{s};
        for (int c = 1; c <= p.n; ++c) {
          if (c == cs) continue;
          Vertex w = out.graph.add_vertex();
          out.colour.push_back(c);
          clique.push_back(w);
          next.push_back(w);
        }
        out.graph.add_clique(clique);
      }
    }
    frontier = std::move(next);
  }
  return out;
}

}  // namespace

Graph generate_blnk(const BlnkParams& p) { return build_blnk(p).graph; }

BlnkFormulas blnk_formulas(const BlnkParams& p) {
  validate(p);
  const std::int64_t n = p.n, k1 = p.k - 1, n1 = p.n - 1;
  BlnkFormulas f;
  for (int x = 0; x < p.l; ++x) f.size += n * ipow(k1, x) * ipow(n1, x);
  if (p.l == 1) {
    f.alpha = 1;
    f.alpha_min = 1;
    return f;
  }
  if (p.l % 2 == 1) {
    f.alpha = 1;
    for (int x = 1; x <= p.l - 2; ++x) f.alpha += n * ipow(k1, x + 1) * ipow(n1, x);
  } else {
    for (int x = 0; x <= p.l - 2; ++x) f.alpha += n * ipow(k1, x + 1) * ipow(n1, x);
  }
  f.alpha_min = f.alpha - (p.k - 2);
  return f;
}

Coloring color_blnk(const BlnkParams& p) {
  auto b = build_blnk(p);
  return Coloring(p.n, std::move(b.colour));
}

Coloring color_blnk(const Graph& g, const BlnkParams& p) {
  if (recognize_blnk(g) != p)
    throw Error(ErrorKind::precondition, "graph is not the given B_l(n,k)");
  const auto bct = block_decomposition(g);
  // The centre block: the one minimising the largest block-tree distance.
  const std::size_t nb = bct.blocks.size();
  auto block_eccentricity = [&](std::size_t root) {
    std::vector<int> dist(nb, -1);
    std::deque<std::size_t> queue{root};
    dist[root] = 0;
    int far = 0;
    while (!queue.empty()) {
      auto b = queue.front();
      queue.pop_front();
      far = std::max(far, dist[b]);
      for (Vertex v : bct.blocks[b])
        for (std::size_t nbk : bct.vertex_blocks[v])
          if (dist[nbk] < 0) {
            dist[nbk] = dist[b] + 1;
            queue.push_back(nbk);
          }
    }
    return far;
  };
  std::size_t root = 0;
  int best = block_eccentricity(0);
  for (std::size_t b = 1; b < nb; ++b)
    if (int e = block_eccentricity(b); e < best) {
      best = e;
      root = b;
    }

  std::vector<int> colour(g.order(), 0);
  std::vector<bool> done(nb, false);
  std::deque<std::size_t> queue{root};
  done[root] = true;
  while (!queue.empty()) {
    auto b = queue.front();
    queue.pop_front();
    std::vector<bool> used(static_cast<std::size_t>(p.n) + 1, false);
    for (Vertex v : bct.blocks[b]) used[static_cast<std::size_t>(colour[v])] = true;
    int next = 1;
    for (Vertex v : bct.blocks[b]) {
      if (colour[v] != 0) continue;
      while (used[static_cast<std::size_t>(next)]) ++next;
      colour[v] = next++;
    }
    for (Vertex v : bct.blocks[b])
      for (std::size_t nbk : bct.vertex_blocks[v])
        if (!done[nbk]) {
          done[nbk] = true;
          queue.push_back(nbk);
        }
  }
  return Coloring(p.n, std::move(colour));
}

std::optional<BlnkParams> recognize_blnk(const Graph& g) {
  if (!is_connected(g) || !is_block_graph(g)) return std::nullopt;
  const auto bct = block_decomposition(g);
  const auto n = bct.blocks.front().size();
  for (const auto& block : bct.blocks)
    if (block.size() != n) return std::nullopt;
  if (n < 3) return std::nullopt;
  BlnkParams p{static_cast<int>(n), 3, 1};
  if (bct.blocks.size() == 1) return p;
  const auto k = bct.vertex_blocks[bct.cut_vertices.front()].size();
  for (Vertex v : bct.cut_vertices)
    if (bct.vertex_blocks[v].size() != k) return std::nullopt;
  if (k < 3) return std::nullopt;
  p.k = static_cast<int>(k);
  for (p.l = 2;; ++p.l) {
    const auto size = blnk_formulas(p).size;
    if (size > static_cast<std::int64_t>(g.order())) return std::nullopt;
    if (size == static_cast<std::int64_t>(g.order())) break;
  }
  if (canonical_code(generate_blnk(p)) != canonical_code(g)) return std::nullopt;
  return p;
}

bool recognize_b3le3(const Graph& g) {
  if (g.order() == 1) return true;
  if (!is_connected(g) || !is_block_graph(g)) return false;
  const auto bct = block_decomposition(g);
  for (const auto& block : bct.blocks)
    if (block.size() != 3) return false;
  for (const auto& in : bct.vertex_blocks)
    if (in.size() > 3) return false;
  return true;
}

namespace {

enum Letter { A = 0, B = 1, C = 2, D = 3 };
using Perm = std::array<int, 4>;  // perm[x] is the image of letter x

// Builds a permutation from a single cycle; letters not listed are fixed.
Perm cycle(std::initializer_list<int> letters) {
  Perm p{A, B, C, D};
  std::vector<int> c(letters);
  for (std::size_t i = 0; i < c.size(); ++i) p[static_cast<std::size_t>(c[i])] = c[(i + 1) % c.size()];
  return p;
}

struct Piece {
  std::vector<std::pair<Vertex, int>> colours;
  TType type;
};

class B3le3Colourer {
 public:
  explicit B3le3Colourer(const Graph& g) : g_(g), in_(g.order(), false) {}

  Piece solve(const VertexSet& part, Vertex v) {
    if (part.size() == 1) return {{{v, A}}, {TKind::T1, 0}};

    for (Vertex u : part) in_[u] = true;
    std::vector<Vertex> nbrs;
    for (Vertex w : g_.neighbors(v))
      if (in_[w]) nbrs.push_back(w);
    for (Vertex u : part) in_[u] = false;
    if (nbrs.size() != 2)
      throw Error(ErrorKind::precondition,
                  "designated vertex " + std::to_string(v) + " must have degree 2");
    const Vertex a = nbrs[0], b = nbrs[1];

    auto a_parts = split(part, a, {v, b});
    auto b_parts = split(part, b, {v, a});
    std::array<Piece, 4> sub{solve(a_parts[0], a), solve(a_parts[1], a),
                             solve(b_parts[0], b), solve(b_parts[1], b)};

    // T1 before T2 inside each pair, then the pair with fewer T2 first.
    auto t2 = [](const Piece& p) { return p.type.kind == TKind::T2 ? 1 : 0; };
    if (t2(sub[0]) > t2(sub[1])) std::swap(sub[0], sub[1]);
    if (t2(sub[2]) > t2(sub[3])) std::swap(sub[2], sub[3]);
    int ta = t2(sub[0]) + t2(sub[1]);
    int tb = t2(sub[2]) + t2(sub[3]);
    std::array<Vertex, 2> joints{a, b};
    if (ta > tb) {
      std::swap(sub[0], sub[2]);
      std::swap(sub[1], sub[3]);
      std::swap(ta, tb);
      std::swap(joints[0], joints[1]);
    }

    std::array<Perm, 4> perm;
    TKind kind = TKind::T2;
    if (ta == 0 && tb == 0) {
      perm = {cycle({A, B}), cycle({A, B}), cycle({A, C}), cycle({A, C})};
    } else if (ta == 0 && tb == 1) {
      perm = {cycle({A, D}), cycle({A, D}), cycle({A, B}), cycle({A, B})};
      kind = TKind::T1;
    } else if (ta == 0 && tb == 2) {
      perm = {cycle({A, B}), cycle({A, B}), cycle({A, D, B}), cycle({A, D})};
    } else if (ta == 1 && tb == 1) {
      perm = {cycle({A, B}), cycle({A, B, D}), cycle({A, C}), cycle({A, C})};
    } else if (ta == 1 && tb == 2) {
      perm = {cycle({A, C}), cycle({A, C}), cycle({A, B, D}), cycle({A, B, D, C})};
      kind = TKind::T1;
    } else {
      perm = {cycle({A, B}), cycle({A, B}), cycle({A, C, D}), cycle({A, C, D})};
    }

    Piece out;
    std::array<int, 4> count{1, 0, 0, 0};
    out.colours.emplace_back(v, A);
    std::array<std::optional<int>, 2> shared;  // colours given to a and b
    for (std::size_t i = 0; i < 4; ++i) {
      const auto& piece = sub[i];
      const Vertex joint = joints[i / 2];
      auto& seen = shared[i / 2];
      for (auto [u, c] : piece.colours) {
        const int mapped = perm[i][static_cast<std::size_t>(c)];
        if (u == joint) {
          if (seen && *seen != mapped)
            throw Error(ErrorKind::internal, "sub-colourings disagree on a shared vertex");
          if (seen) continue;
          seen = mapped;
        }
        out.colours.emplace_back(u, mapped);
        ++count[static_cast<std::size_t>(mapped)];
      }
    }
    if (!shared[0] || !shared[1] || *shared[0] == *shared[1] || *shared[0] == A ||
        *shared[1] == A)
      throw Error(ErrorKind::internal, "triangle at the designated vertex is not rainbow");

    const int m = count[A] - 1;
    const std::array<int, 4> expected =
        kind == TKind::T1 ? std::array<int, 4>{m + 1, m, m, m}
                          : std::array<int, 4>{m + 1, m + 1, m + 1, m};
    if (count != expected)
      throw Error(ErrorKind::internal, "merged colour counts do not match the type");
    out.type = {kind, m};
    return out;
  }

 private:
  // Pieces hanging at `joint` once `cut` is removed: each component of
  // (component of joint) - joint, with joint added back; {joint} if missing.
  std::array<VertexSet, 2> split(const VertexSet& part, Vertex joint,
                                 std::initializer_list<Vertex> cut) {
    for (Vertex u : part) in_[u] = true;
    for (Vertex u : cut) in_[u] = false;
    in_[joint] = false;
    std::vector<VertexSet> comps;
    for (Vertex start : g_.neighbors(joint)) {
      if (!in_[start]) continue;
      VertexSet comp{joint};
      std::deque<Vertex> queue{start};
      in_[start] = false;
      while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        comp.push_back(u);
        for (Vertex w : g_.neighbors(u))
          if (in_[w]) {
            in_[w] = false;
            queue.push_back(w);
          }
      }
      std::sort(comp.begin(), comp.end());
      comps.push_back(std::move(comp));
    }
    for (Vertex u : part) in_[u] = false;
    if (comps.size() > 2)
      throw Error(ErrorKind::precondition, "vertex lies in more than three blocks");
    while (comps.size() < 2) comps.push_back({joint});
    return {comps[0], comps[1]};
  }

  const Graph& g_;
  std::vector<bool> in_;
};

}  // namespace

B3le3Coloring color_b3le3(const Graph& g, std::optional<Vertex> v) {
  if (!recognize_b3le3(g))
    throw Error(ErrorKind::precondition, "graph is not in B(3, <=3)");
  if (!v) {
    for (Vertex u = 0; u < g.order() && !v; ++u)
      if (g.degree(u) == 2 || g.order() == 1) v = u;
  }
  if (!v || *v >= g.order())
    throw Error(ErrorKind::precondition, "no designated vertex");
  if (g.order() > 1 && g.degree(*v) != 2)
    throw Error(ErrorKind::precondition, "designated vertex must have degree 2");

  VertexSet all(g.order());
  for (Vertex u = 0; u < g.order(); ++u) all[u] = u;
  B3le3Colourer colourer(g);
  auto piece = colourer.solve(all, *v);
  std::vector<int> a(g.order(), 0);
  for (auto [u, c] : piece.colours) a[u] = c + 1;
  const bool sparse = g.order() < 4;
  return {Coloring(4, std::move(a), sparse), piece.type};
}

}  // namespace blockeq::structured
