#include "blockeq/wellcovered.hpp"

#include <algorithm>
#include <numeric>

#include "blockeq/bounds.hpp"

namespace blockeq::wellcovered {

namespace {

void validate_op(const AttachOp& op, std::size_t current_order, int base_size) {
  if (op.host >= current_order)
    throw Error(ErrorKind::invalid_argument,
                "attach host " + std::to_string(op.host) + " does not exist");
  if (op.s < 2)
    throw Error(ErrorKind::invalid_argument, "internal clique size must be >= 2");
  if (op.pendant_sizes.size() != static_cast<std::size_t>(op.s - 1))
    throw Error(ErrorKind::invalid_argument,
                "attach step needs s - 1 pendant sizes");
  for (int q : op.pendant_sizes)
    if (q < 2)
      throw Error(ErrorKind::invalid_argument, "pendant clique size must be >= 2");
  // On K_1 the host has no neighbour and the result is never well-covered.
  if (current_order == 1 && base_size == 1)
    throw Error(ErrorKind::invalid_argument,
                "attach steps need a base clique of size >= 2");
}

}  // namespace

Graph generate(const WCDecomposition& recipe) {
  if (recipe.base_size < 1)
    throw Error(ErrorKind::invalid_argument, "base clique size must be >= 1");
  Graph g = Graph::complete(static_cast<std::size_t>(recipe.base_size));
  for (const auto& op : recipe.ops) {
    validate_op(op, g.order(), recipe.base_size);
    std::vector<Vertex> q{op.host};
    for (int i = 1; i < op.s; ++i) q.push_back(g.add_vertex());
    g.add_clique(q);
    for (int i = 0; i + 1 < op.s; ++i) {
      std::vector<Vertex> pendant{q[static_cast<std::size_t>(i + 1)]};
      for (int j = 1; j < op.pendant_sizes[static_cast<std::size_t>(i)]; ++j)
        pendant.push_back(g.add_vertex());
      g.add_clique(pendant);
    }
  }
  return g;
}

namespace {

struct StripStep {
  Vertex host;
  // Q minus the host, each with the simplicial vertices of its pendant.
  std::vector<std::pair<Vertex, VertexSet>> arms;
};

}  // namespace

std::optional<Decomposed> decompose(const Graph& g) {
  if (!is_connected(g))
    throw Error(ErrorKind::precondition, "graph must be connected");
  if (!is_block_graph(g))
    throw Error(ErrorKind::not_block_graph, "graph is not a block graph");

  std::vector<bool> alive(g.order(), true);
  std::vector<StripStep> steps;
  VertexSet base;

  while (true) {
    VertexSet cur;
    for (Vertex v = 0; v < g.order(); ++v)
      if (alive[v]) cur.push_back(v);
    const Graph sub = g.induced(cur);
    const auto bct = block_decomposition(sub);
    if (bct.blocks.size() == 1) {
      for (Vertex v : bct.blocks[0]) base.push_back(cur[v]);
      break;
    }

    std::vector<bool> pendant(bct.blocks.size(), false);
    std::vector<std::size_t> core;
    for (std::size_t b = 0; b < bct.blocks.size(); ++b) {
      pendant[b] = bct.cut_count(b) == 1;
      if (!pendant[b]) core.push_back(b);
    }
    // Only pendant cliques around one vertex: a star, never well-covered.
    if (core.empty()) return std::nullopt;

    // Candidate (Q, v): Q a pendant clique of the core, v its core cut vertex.
    std::vector<std::pair<Vertex, std::size_t>> candidates;
    auto core_degree = [&](Vertex v) {
      std::size_t d = 0;
      for (std::size_t b : bct.vertex_blocks[v]) d += pendant[b] ? 0 : 1;
      return d;
    };
    if (core.size() == 1) {
      for (Vertex v : bct.blocks[core[0]]) candidates.emplace_back(v, core[0]);
    } else {
      for (std::size_t b : core) {
        std::optional<Vertex> joint;
        std::size_t joints = 0;
        for (Vertex v : bct.blocks[b])
          if (core_degree(v) > 1) {
            joint = v;
            ++joints;
          }
        if (joints == 1) candidates.emplace_back(*joint, b);
      }
    }
    std::sort(candidates.begin(), candidates.end(),
              [&](const auto& a, const auto& b) {
                if (a.first != b.first) return a.first < b.first;
                return bct.blocks[a.second].front() < bct.blocks[b.second].front();
              });

    std::optional<StripStep> chosen;
    for (auto [v, qb] : candidates) {
      if (!bct.is_cut(v)) continue;
      StripStep step{cur[v], {}};
      bool ok = true;
      for (Vertex u : bct.blocks[qb]) {
        if (u == v) continue;
        const auto& in = bct.vertex_blocks[u];
        if (in.size() != 2) {
          ok = false;
          break;
        }
        const std::size_t other = in[0] == qb ? in[1] : in[0];
        if (!pendant[other]) {
          ok = false;
          break;
        }
        VertexSet simplicial;
        for (Vertex w : bct.blocks[other])
          if (w != u) simplicial.push_back(cur[w]);
        step.arms.emplace_back(cur[u], std::move(simplicial));
      }
      if (ok) {
        chosen = std::move(step);
        break;
      }
    }
    if (!chosen) return std::nullopt;
    for (const auto& [u, simplicial] : chosen->arms) {
      alive[u] = false;
      for (Vertex w : simplicial) alive[w] = false;
    }
    steps.push_back(std::move(*chosen));
  }

  Decomposed out;
  out.recipe.base_size = static_cast<int>(base.size());
  std::vector<Vertex> id(g.order(), 0);
  for (Vertex v : base) {
    id[v] = static_cast<Vertex>(out.order.size());
    out.order.push_back(v);
  }
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    AttachOp op;
    op.host = id[it->host];
    op.s = static_cast<int>(it->arms.size()) + 1;
    for (const auto& [u, simplicial] : it->arms) {
      id[u] = static_cast<Vertex>(out.order.size());
      out.order.push_back(u);
      op.pendant_sizes.push_back(static_cast<int>(simplicial.size()) + 1);
    }
    for (const auto& [u, simplicial] : it->arms)
      for (Vertex w : simplicial) {
        id[w] = static_cast<Vertex>(out.order.size());
        out.order.push_back(w);
      }
    out.recipe.ops.push_back(std::move(op));
  }
  return out;
}

WCDecomposition random_recipe(std::mt19937_64& rng, int max_omega, int max_n) {
  if (max_omega < 2 || max_n < 2)
    throw Error(ErrorKind::invalid_argument, "need max_omega >= 2 and max_n >= 2");
  auto uniform = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  WCDecomposition r;
  r.base_size = uniform(2, std::min(max_omega, max_n));
  int n = r.base_size;
  const int wanted_ops = uniform(0, max_n);
  for (int attempt = 0; attempt < wanted_ops; ++attempt) {
    AttachOp op;
    op.host = static_cast<Vertex>(uniform(0, n - 1));
    op.s = uniform(2, max_omega);
    int added = op.s - 1;
    for (int i = 1; i < op.s; ++i) {
      op.pendant_sizes.push_back(uniform(2, max_omega));
      added += op.pendant_sizes.back() - 1;
    }
    if (n + added > max_n) continue;
    n += added;
    r.ops.push_back(std::move(op));
  }
  return r;
}

std::vector<int> ZeroOneMatrix::row_sums() const {
  std::vector<int> out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += at(i, j);
  return out;
}

std::vector<int> ZeroOneMatrix::col_sums() const {
  std::vector<int> out(cols_, 0);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[j] += at(i, j);
  return out;
}

bool ZeroOneMatrix::has_anti_diagonal() const {
  if (cols_ < rows_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    if (at(i, anti_column(i)) != 1) return false;
  return true;
}

bool ZeroOneMatrix::is_modified_ferrers() const {
  if (!has_anti_diagonal()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    bool seen_zero = false;
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j == anti_column(i)) continue;
      if (at(i, j) == 0)
        seen_zero = true;
      else if (seen_zero)
        return false;
    }
  }
  return true;
}

bool dominates(std::span<const int> a, std::span<const int> b) {
  const long total_a = std::accumulate(a.begin(), a.end(), 0L);
  const long total_b = std::accumulate(b.begin(), b.end(), 0L);
  if (total_a != total_b)
    throw Error(ErrorKind::invalid_argument, "dominance needs equal totals");
  long pa = 0, pb = 0;
  for (std::size_t r = 0; r < std::max(a.size(), b.size()); ++r) {
    pa += r < a.size() ? a[r] : 0;
    pb += r < b.size() ? b[r] : 0;
    if (pa < pb) return false;
  }
  return true;
}

ZeroOneMatrix modified_ferrers(std::span<const int> q, std::size_t y) {
  const std::size_t l = q.size();
  if (l == 0) throw Error(ErrorKind::invalid_argument, "empty row-sum vector");
  if (y < l) throw Error(ErrorKind::invalid_argument, "need y >= l");
  for (std::size_t i = 0; i < l; ++i) {
    if (q[i] < 1)
      throw Error(ErrorKind::invalid_argument, "row sums must be positive");
    if (i > 0 && q[i] > q[i - 1])
      throw Error(ErrorKind::invalid_argument, "row sums must be non-increasing");
    if (static_cast<std::size_t>(q[i]) > y)
      throw Error(ErrorKind::invalid_argument,
                  "row sum " + std::to_string(q[i]) + " exceeds " +
                      std::to_string(y) + " columns");
  }
  ZeroOneMatrix m(l, y);
  for (std::size_t i = 0; i < l; ++i) {
    m.set(i, m.anti_column(i), 1);
    int remaining = q[i] - 1;
    for (std::size_t j = 0; remaining > 0; ++j) {
      if (j == m.anti_column(i)) continue;
      m.set(i, j, 1);
      --remaining;
    }
  }
  return m;
}

bool semi_balanced(std::span<const int> b, std::size_t l) {
  if (b.empty() || b.size() < l) return false;
  const int last = b.back();
  if (b.front() - last > 2) return false;
  for (std::size_t i = 1; i < b.size(); ++i)
    if (b[i] - last > 1) return false;
  return true;
}

ZeroOneMatrix gale_ryser_transform(ZeroOneMatrix m, std::span<const int> b,
                                   std::size_t* steps) {
  if (b.size() > m.cols())
    throw Error(ErrorKind::invalid_argument, "target longer than column count");
  std::vector<int> target(b.begin(), b.end());
  target.resize(m.cols(), 0);
  auto c = m.col_sums();
  if (!dominates(c, target))
    throw Error(ErrorKind::invalid_argument,
                "target is not dominated by the column sums");
  std::size_t swaps = 0;
  while (c != target) {
    std::size_t i = 0, j = 0;
    while (c[i] <= target[i]) ++i;
    while (c[j] >= target[j]) ++j;
    std::optional<std::size_t> h;
    for (std::size_t r = 0; r < m.rows() && !h; ++r)
      if (m.at(r, i) == 1 && m.at(r, j) == 0 && i != m.anti_column(r)) h = r;
    if (!h)
      throw Error(ErrorKind::internal,
                  "no admissible swap row for columns " + std::to_string(i) +
                      " -> " + std::to_string(j));
    m.set(*h, i, 0);
    m.set(*h, j, 1);
    --c[i];
    ++c[j];
    ++swaps;
  }
  if (steps) *steps = swaps;
  return m;
}

TargetVector target_vector(std::span<const int> h_counts, int v_color,
                           int new_total) {
  const int k = static_cast<int>(h_counts.size());
  if (k < 1) throw Error(ErrorKind::invalid_argument, "no colours");
  if (v_color < 1 || v_color > k)
    throw Error(ErrorKind::invalid_argument, "host colour out of range");
  if (new_total < 1) throw Error(ErrorKind::invalid_argument, "new_total must be >= 1");
  const int h_total = std::accumulate(h_counts.begin(), h_counts.end(), 0);
  const int lo = h_total / k;
  for (int h : h_counts)
    if (h < lo || h > lo + (h_total % k ? 1 : 0))
      throw Error(ErrorKind::invalid_argument, "colouring of H is not equitable");

  const int g_total = h_total + new_total - 1;
  const int floor_size = g_total / k;
  const int big = g_total % k;

  // Big target classes go to the colours that are already big, host colour
  // first among ties.
  std::vector<int> colours(static_cast<std::size_t>(k));
  std::iota(colours.begin(), colours.end(), 1);
  std::stable_sort(colours.begin(), colours.end(), [&](int a, int b) {
    const int ha = h_counts[static_cast<std::size_t>(a - 1)];
    const int hb = h_counts[static_cast<std::size_t>(b - 1)];
    if (ha != hb) return ha > hb;
    return (a == v_color) > (b == v_color);
  });
  std::vector<int> demand(static_cast<std::size_t>(k));
  for (int rank = 0; rank < k; ++rank) {
    const int c = colours[static_cast<std::size_t>(rank)];
    const int t = floor_size + (rank < big ? 1 : 0);
    const int p = t - h_counts[static_cast<std::size_t>(c - 1)] + (c == v_color ? 1 : 0);
    if (p < 0)
      throw Error(ErrorKind::invalid_argument,
                  "colour " + std::to_string(c) + " is over target");
    demand[static_cast<std::size_t>(c - 1)] = p;
  }

  TargetVector out;
  out.col.resize(static_cast<std::size_t>(k));
  std::iota(out.col.begin(), out.col.end(), 1);
  std::stable_sort(out.col.begin(), out.col.end(), [&](int a, int b) {
    return demand[static_cast<std::size_t>(a - 1)] > demand[static_cast<std::size_t>(b - 1)];
  });
  for (int c : out.col) out.p.push_back(demand[static_cast<std::size_t>(c - 1)]);
  return out;
}

Recolored recolor_for_v(const Coloring& h, Vertex v, const TargetVector& target) {
  const int k = h.colors();
  const int vc = h.color_of(v);
  std::vector<int> perm(static_cast<std::size_t>(k));
  std::iota(perm.begin(), perm.end(), 1);
  std::swap(perm[0], perm[static_cast<std::size_t>(vc - 1)]);

  std::vector<std::pair<int, int>> entries;  // (demand, colour)
  for (std::size_t i = 0; i < target.p.size(); ++i)
    entries.emplace_back(target.p[i], perm[static_cast<std::size_t>(target.col[i] - 1)]);
  std::stable_sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  });

  Recolored out{h.permuted(perm), {}};
  for (auto [p, c] : entries) {
    out.target.p.push_back(p);
    out.target.col.push_back(c);
  }
  if (out.target.col.front() != 1)
    throw Error(ErrorKind::internal,
                "host colour does not carry the largest demand");
  return out;
}

Coloring color_well_covered(const Graph& g, int k) {
  auto bct = block_decomposition(g);
  if (!is_connected(g))
    throw Error(ErrorKind::precondition, "graph must be connected");
  const int w = omega(g, bct);
  if (k < w)
    throw Error(ErrorKind::invalid_argument,
                "k = " + std::to_string(k) + " is below omega = " + std::to_string(w));
  auto dec = decompose(g);
  if (!dec) throw Error(ErrorKind::precondition, "graph is not well-covered");
  const auto n = g.order();
  if (static_cast<std::size_t>(k) >= n) return rainbow_coloring(n, k);

  const auto& recipe = dec->recipe;
  std::vector<int> colour(static_cast<std::size_t>(recipe.base_size));
  std::iota(colour.begin(), colour.end(), 1);

  for (const auto& op : recipe.ops) {
    const std::size_t h_order = colour.size();
    Coloring h(k, colour, static_cast<std::size_t>(k) > h_order);
    std::vector<int> counts(h.class_sizes().begin(), h.class_sizes().end());
    const int new_total =
        1 + std::accumulate(op.pendant_sizes.begin(), op.pendant_sizes.end(), 0);
    auto rec = recolor_for_v(h, op.host, target_vector(counts, h.color_of(op.host), new_total));
    colour.assign(rec.coloring.assignment().begin(), rec.coloring.assignment().end());

    // Rows: pendant cliques by non-increasing size, then the host (size 1).
    std::vector<std::size_t> rows(op.pendant_sizes.size());
    std::iota(rows.begin(), rows.end(), 0);
    std::stable_sort(rows.begin(), rows.end(), [&](std::size_t a, std::size_t b) {
      return op.pendant_sizes[a] > op.pendant_sizes[b];
    });
    std::vector<int> q;
    for (std::size_t r : rows) q.push_back(op.pendant_sizes[r]);
    q.push_back(1);

    auto m = gale_ryser_transform(modified_ferrers(q, static_cast<std::size_t>(k)),
                                  rec.target.p);
    const auto& col = rec.target.col;

    // Vertex ids follow generate(): Q's new vertices, then pendant vertices.
    const std::size_t arms = op.pendant_sizes.size();
    colour.resize(h_order + arms);
    std::vector<std::size_t> pendant_start(arms);
    std::size_t next = h_order + arms;
    for (std::size_t i = 0; i < arms; ++i) {
      pendant_start[i] = next;
      next += static_cast<std::size_t>(op.pendant_sizes[i] - 1);
    }
    colour.resize(next);
    for (std::size_t row = 0; row < rows.size(); ++row) {
      const std::size_t arm = rows[row];
      const std::size_t anti = m.anti_column(row);
      colour[h_order + arm] = col[anti];
      std::size_t slot = pendant_start[arm];
      for (std::size_t u = 0; u < m.cols(); ++u)
        if (u != anti && m.at(row, u) == 1) colour[slot++] = col[u];
    }
  }

  std::vector<int> out(n);
  for (std::size_t i = 0; i < n; ++i) out[dec->order[i]] = colour[i];
  return Coloring(k, std::move(out));
}

}  // namespace blockeq::wellcovered
