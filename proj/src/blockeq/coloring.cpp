#include "blockeq/coloring.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <numeric>
#include <thread>

#include "blockeq/bounds.hpp"

namespace blockeq {

Coloring::Coloring(int k, std::vector<int> assignment, bool allow_empty)
    : k_(k), assignment_(std::move(assignment)), allow_empty_(allow_empty) {
  if (k_ < 1) throw Error(ErrorKind::invalid_argument, "k must be positive");
  sizes_.assign(static_cast<std::size_t>(k_), 0);
  for (std::size_t v = 0; v < assignment_.size(); ++v) {
    const int c = assignment_[v];
    if (c < 1 || c > k_)
      throw Error(ErrorKind::invalid_argument,
                  "colour " + std::to_string(c) + " of vertex " +
                      std::to_string(v) + " outside [1, " +
                      std::to_string(k_) + "]");
    ++sizes_[static_cast<std::size_t>(c - 1)];
  }
}

std::vector<VertexSet> Coloring::classes() const {
  std::vector<VertexSet> out(static_cast<std::size_t>(k_));
  for (Vertex v = 0; v < assignment_.size(); ++v)
    out[static_cast<std::size_t>(assignment_[v] - 1)].push_back(v);
  return out;
}

bool Coloring::is_equitable() const {
  const std::size_t n = assignment_.size();
  const auto k = static_cast<std::size_t>(k_);
  const std::size_t lo = n / k;
  const std::size_t hi = (n + k - 1) / k;
  for (std::size_t s : sizes_) {
    if (s < lo || s > hi) return false;
    if (s == 0 && !allow_empty_) return false;
  }
  return true;
}

Coloring Coloring::permuted(std::span<const int> perm) const {
  if (perm.size() != static_cast<std::size_t>(k_))
    throw Error(ErrorKind::invalid_argument, "permutation size mismatch");
  std::vector<int> out(assignment_.size());
  for (std::size_t v = 0; v < out.size(); ++v)
    out[v] = perm[static_cast<std::size_t>(assignment_[v] - 1)];
  return Coloring(k_, std::move(out), allow_empty_);
}

Coloring rainbow_coloring(std::size_t n, int k) {
  if (k < static_cast<int>(n))
    throw Error(ErrorKind::invalid_argument, "rainbow colouring needs k >= n");
  std::vector<int> a(n);
  std::iota(a.begin(), a.end(), 1);
  return Coloring(k, std::move(a), k > static_cast<int>(n));
}

CheckResult check(const Graph& g, const Coloring& c) {
  if (c.order() != g.order())
    throw Error(ErrorKind::invalid_argument,
                "colouring covers " + std::to_string(c.order()) +
                    " vertices, graph has " + std::to_string(g.order()));
  for (auto [u, v] : g.edges())
    if (c.color_of(u) == c.color_of(v))
      return {Verdict::improper, Edge{u, v}};
  return {c.is_equitable() ? Verdict::valid_equitable
                           : Verdict::valid_not_equitable,
          std::nullopt};
}

namespace {

class EquitableSearch {
 public:
  EquitableSearch(const Graph& g, int k, const SearchOptions& opts)
      : g_(g),
        n_(g.order()),
        k_(static_cast<std::size_t>(k)),
        floor_(n_ / k_),
        big_slots_(n_ % k_),
        color_(n_, -1),
        count_(k_, 0),
        blocked_(n_ * k_, 0) {
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](Vertex a, Vertex b) {
      return g_.degree(a) > g_.degree(b);
    });
    if (opts.budget_seconds > 0) {
      deadline_ = std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                      std::chrono::duration<double>(opts.budget_seconds));
    }
  }

  Feasibility run() {
    if (search(0, 0)) return Feasibility::feasible;
    return timed_out_ ? Feasibility::unknown : Feasibility::infeasible;
  }

  std::uint64_t nodes() const { return nodes_; }

  Coloring result() const {
    std::vector<int> a(n_);
    for (std::size_t v = 0; v < n_; ++v) a[v] = color_[v] + 1;
    return Coloring(static_cast<int>(k_), std::move(a));
  }

 private:
  bool has_room(std::size_t c) const {
    if (count_[c] < floor_) return true;
    return count_[c] == floor_ && big_used_ < big_slots_;
  }

  bool out_of_time() {
    if (!deadline_) return false;
    if ((nodes_ & 0xfff) == 0 && std::chrono::steady_clock::now() > *deadline_)
      timed_out_ = true;
    return timed_out_;
  }

  // Some colour is still available to every uncoloured neighbour of v.
  bool neighbours_alive(Vertex v, std::size_t opened) const {
    for (Vertex u : g_.neighbors(v)) {
      if (color_[u] >= 0) continue;
      bool alive = opened < k_;
      for (std::size_t c = 0; c < opened && !alive; ++c)
        alive = blocked_[u * k_ + c] == 0 && has_room(c);
      if (!alive) return false;
    }
    return true;
  }

  void assign(Vertex v, std::size_t c) {
    color_[v] = static_cast<int>(c);
    if (count_[c]++ == floor_) ++big_used_;
    for (Vertex u : g_.neighbors(v)) ++blocked_[u * k_ + c];
  }

  void unassign(Vertex v, std::size_t c) {
    color_[v] = -1;
    if (--count_[c] == floor_) --big_used_;
    for (Vertex u : g_.neighbors(v)) --blocked_[u * k_ + c];
  }

  bool search(std::size_t pos, std::size_t opened) {
    if (pos == n_) return true;
    ++nodes_;
    if (out_of_time()) return false;
    const Vertex v = order_[pos];
    // Unused colours are interchangeable: only the first one may be opened.
    const std::size_t limit = std::min(opened + 1, k_);
    for (std::size_t c = 0; c < limit; ++c) {
      if (blocked_[v * k_ + c] != 0 || !has_room(c)) continue;
      const std::size_t next_opened = std::max(opened, c + 1);
      assign(v, c);
      if (neighbours_alive(v, next_opened) && search(pos + 1, next_opened))
        return true;
      unassign(v, c);
      if (timed_out_) return false;
    }
    return false;
  }

  const Graph& g_;
  std::size_t n_;
  std::size_t k_;
  std::size_t floor_;
  std::size_t big_slots_;
  std::size_t big_used_ = 0;
  std::vector<Vertex> order_;
  std::vector<int> color_;
  std::vector<std::size_t> count_;
  std::vector<std::uint32_t> blocked_;
  std::uint64_t nodes_ = 0;
  std::optional<std::chrono::steady_clock::time_point> deadline_;
  bool timed_out_ = false;
};

}  // namespace

ExactResult exact_equitable(const Graph& g, int k, const SearchOptions& opts) {
  if (k < 1) throw Error(ErrorKind::invalid_argument, "k must be positive");
  ExactResult out;
  if (static_cast<std::size_t>(k) >= g.order()) {
    out.status = Feasibility::feasible;
    out.coloring = rainbow_coloring(g.order(), k);
    return out;
  }
  EquitableSearch search(g, k, opts);
  out.status = search.run();
  out.nodes = search.nodes();
  if (out.status == Feasibility::feasible) out.coloring = search.result();
  return out;
}

namespace {

void bron_kerbosch(const Graph& g, std::vector<Vertex>& r,
                   std::vector<Vertex> p, std::vector<Vertex> x, int& best) {
  if (p.empty() && x.empty()) {
    best = std::max(best, static_cast<int>(r.size()));
    return;
  }
  if (static_cast<int>(r.size() + p.size()) <= best) return;
  Vertex pivot = p.empty() ? x.front() : p.front();
  std::size_t pivot_deg = 0;
  for (const auto* set : {&p, &x})
    for (Vertex u : *set) {
      std::size_t d = 0;
      for (Vertex w : p) d += g.adjacent(u, w) ? 1 : 0;
      if (d >= pivot_deg) {
        pivot_deg = d;
        pivot = u;
      }
    }
  std::vector<Vertex> candidates;
  for (Vertex v : p)
    if (!g.adjacent(pivot, v)) candidates.push_back(v);
  for (Vertex v : candidates) {
    std::vector<Vertex> np, nx;
    for (Vertex w : p)
      if (g.adjacent(v, w)) np.push_back(w);
    for (Vertex w : x)
      if (g.adjacent(v, w)) nx.push_back(w);
    r.push_back(v);
    bron_kerbosch(g, r, std::move(np), std::move(nx), best);
    r.pop_back();
    p.erase(std::find(p.begin(), p.end(), v));
    x.push_back(v);
  }
}

}  // namespace

int clique_number(const Graph& g) {
  if (g.order() == 0) return 0;
  std::vector<Vertex> r, p(g.order());
  std::iota(p.begin(), p.end(), 0);
  int best = 1;
  bron_kerbosch(g, r, std::move(p), {}, best);
  return best;
}

ChiResult chi_equitable(const Graph& g, const SearchOptions& opts) {
  ChiResult out;
  if (g.order() == 0) {
    out.value = 0;
    return out;
  }
  int start = 1;
  if (is_block_graph(g))
    start = conjecture_bounds(g).lower;
  else
    start = clique_number(g);
  for (int k = start; k <= static_cast<int>(g.order()); ++k) {
    auto r = exact_equitable(g, k, opts);
    if (r.status == Feasibility::feasible) {
      if (out.unknown.empty()) out.value = k;
      out.witness = std::move(r.coloring);
      return out;
    }
    if (r.status == Feasibility::unknown)
      out.unknown.push_back(k);
    else
      out.infeasible.push_back(k);
  }
  throw Error(ErrorKind::internal, "no equitable colouring with k = n colours");
}

Spectrum spectrum(const Graph& g, int k_max, const SearchOptions& opts,
                  int jobs) {
  if (k_max < 1) throw Error(ErrorKind::invalid_argument, "k_max must be positive");
  Spectrum s;
  s.k_max = k_max;
  s.feasibility.assign(static_cast<std::size_t>(k_max), Feasibility::unknown);

  std::atomic<int> next{1};
  auto worker = [&] {
    for (int k = next++; k <= k_max; k = next++)
      s.feasibility[static_cast<std::size_t>(k - 1)] =
          exact_equitable(g, k, opts).status;
  };
  const int threads = std::clamp(jobs, 1, k_max);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  for (int k = 1; k <= k_max; ++k) {
    auto f = s.feasibility[static_cast<std::size_t>(k - 1)];
    if (f == Feasibility::unknown) s.unknown.push_back(k);
    if (f == Feasibility::feasible && !s.chi && s.unknown.empty()) s.chi = k;
  }
  for (int k = k_max; k >= 1; --k) {
    if (s.feasibility[static_cast<std::size_t>(k - 1)] != Feasibility::feasible)
      break;
    s.threshold = k;
  }
  if (s.chi && s.threshold)
    for (int k = *s.chi + 1; k < *s.threshold; ++k)
      if (s.feasibility[static_cast<std::size_t>(k - 1)] ==
          Feasibility::infeasible)
        s.gaps.push_back(k);
  return s;
}

}  // namespace blockeq
