#include "blockeq/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

namespace blockeq::verifier {

namespace {

// Runs body(i) for i in [0, count) on up to `jobs` threads.
template <class Body>
void parallel_for(std::size_t count, int jobs, Body body) {
  const auto threads = static_cast<std::size_t>(std::max(1, jobs));
  if (threads == 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (std::size_t t = 0; t < std::min(threads, count); ++t)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) body(i);
    });
}

}  // namespace

Enumerator::Enumerator(EnumerationOptions opts) : opts_(std::move(opts)) {
  for (int s : opts_.block_sizes)
    if (s < 2) throw Error(ErrorKind::invalid_argument, "block sizes must be >= 2");
}

bool Enumerator::allowed_size(int s) const {
  return opts_.block_sizes.empty() ||
         std::find(opts_.block_sizes.begin(), opts_.block_sizes.end(), s) !=
             opts_.block_sizes.end();
}

const std::vector<Entry>& Enumerator::level(int n) {
  if (n < 1) throw Error(ErrorKind::invalid_argument, "n must be >= 1");
  if (levels_.size() <= static_cast<std::size_t>(n)) levels_.resize(static_cast<std::size_t>(n) + 1);
  auto& slot = levels_[static_cast<std::size_t>(n)];
  if (slot) return *slot;

  if (n == 1) {
    Graph k1(1);
    slot = std::vector<Entry>{{canonical_code(k1), k1}};
    return *slot;
  }

  // (parent graph, attachment size) work items.
  std::vector<std::pair<const Graph*, int>> work;
  for (int s = 2; s <= n; ++s) {
    if (!allowed_size(s)) continue;
    for (const auto& e : level(n - s + 1)) work.emplace_back(&e.graph, s);
  }

  std::vector<std::map<CanonicalCode, Graph>> found(work.size());
  const int cap = opts_.max_blocks_per_vertex;
  parallel_for(work.size(), opts_.jobs, [&](std::size_t i) {
    const auto& [parent, s] = work[i];
    const auto bct = block_decomposition(*parent);
    for (Vertex v = 0; v < parent->order(); ++v) {
      const auto blocks_at_v =
          parent->degree(v) == 0 ? 0 : static_cast<int>(bct.vertex_blocks[v].size());
      if (cap > 0 && blocks_at_v + 1 > cap) continue;
      Graph child = *parent;
      std::vector<Vertex> clique{v};
      for (int j = 1; j < s; ++j) clique.push_back(child.add_vertex());
      child.add_clique(clique);
      auto code = canonical_code(child);
      found[i].try_emplace(std::move(code), std::move(child));
    }
  });

  std::map<CanonicalCode, Graph> merged;
  for (auto& m : found) merged.merge(m);
  std::vector<Entry> out;
  out.reserve(merged.size());
  for (auto& [code, g] : merged) out.push_back({code, std::move(g)});
  slot = std::move(out);
  return *slot;
}

std::vector<Graph> enumerate(int n, const EnumerationOptions& opts) {
  Enumerator e(opts);
  std::vector<Graph> out;
  for (const auto& entry : e.level(n)) out.push_back(entry.graph);
  return out;
}

Graph pendant_family(int k) {
  if (k < 2) throw Error(ErrorKind::invalid_argument, "family parameter k must be >= 2");
  Graph g = Graph::complete(static_cast<std::size_t>(k));
  for (Vertex v = 0; v < static_cast<Vertex>(k); ++v)
    for (int p = 0; p <= k; ++p) {
      std::vector<Vertex> clique{v};
      for (int j = 0; j < k; ++j) clique.push_back(g.add_vertex());
      g.add_clique(clique);
    }
  return g;
}

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::at_lower: return "at_lower";
    case Outcome::at_upper: return "at_upper";
    case Outcome::violation: return "VIOLATION";
    case Outcome::unknown: return "unknown";
  }
  return "unknown";
}

VerificationRecord verify_graph(const Graph& g, const VerifyOptions& opts) {
  VerificationRecord rec;
  rec.code = canonical_code(g);
  rec.graph = g;
  rec.bounds = conjecture_bounds(g);
  const SearchOptions search{opts.budget_seconds};
  auto chi = chi_equitable(g, search);
  rec.infeasible = chi.infeasible;
  rec.unknown_k = chi.unknown;
  rec.witness = std::move(chi.witness);
  rec.bounds.chi_eq = chi.value;

  if (!chi.value) {
    rec.verdict = Outcome::unknown;
  } else if (*chi.value == rec.bounds.lower) {
    rec.verdict = Outcome::at_lower;
  } else if (*chi.value == rec.bounds.upper) {
    rec.verdict = Outcome::at_upper;
  } else if (*chi.value > rec.bounds.upper) {
    rec.verdict = Outcome::violation;
  } else {
    throw Error(ErrorKind::internal, "equitable chromatic number below the lower bound");
  }

  if (opts.spectrum && chi.value) {
    auto s = spectrum(g, *chi.value + opts.spectrum_slack, search);
    rec.spectrum_gaps = s.gaps;
  }
  return rec;
}

std::size_t VerificationSummary::violations() const {
  std::size_t total = 0;
  for (const auto& l : levels) total += l.violations;
  return total;
}

VerificationSummary verify_conjecture(int n_max, const VerifyOptions& opts,
                                      const RecordSink& sink) {
  if (n_max < 1) throw Error(ErrorKind::invalid_argument, "n_max must be >= 1");
  VerificationSummary summary;
  Enumerator gen({{}, 0, opts.jobs});
  VerifyOptions single = opts;
  single.jobs = 1;

  for (int n = 1; n <= n_max; ++n) {
    const auto& graphs = gen.level(n);
    std::vector<VerificationRecord> records(graphs.size());
    parallel_for(graphs.size(), opts.jobs, [&](std::size_t i) {
      records[i] = verify_graph(graphs[i].graph, single);
    });

    LevelSummary level;
    level.n = n;
    level.graphs = records.size();
    for (auto& rec : records) {
      switch (rec.verdict) {
        case Outcome::at_lower: ++level.at_lower; break;
        case Outcome::at_upper: ++level.at_upper; break;
        case Outcome::unknown:
          ++level.unknown;
          summary.unknown.push_back(rec.code);
          break;
        case Outcome::violation:
          ++level.violations;
          if (!summary.counterexample) summary.counterexample = rec;
          break;
      }
      if (rec.spectrum_gaps && !rec.spectrum_gaps->empty()) ++level.spectrum_gaps;
      if (sink) sink(n, rec);
    }
    summary.levels.push_back(level);
    if (summary.counterexample) break;
  }
  return summary;
}

std::vector<SpectrumRecord> verify_spectrum(int n_max, const SpectrumOptions& opts) {
  if (n_max < 1) throw Error(ErrorKind::invalid_argument, "n_max must be >= 1");
  Enumerator gen({{}, 0, opts.jobs});
  std::vector<SpectrumRecord> out;
  const SearchOptions search{opts.budget_seconds};

  for (int n = 1; n <= n_max; ++n) {
    std::vector<const Entry*> chosen;
    for (const auto& e : gen.level(n))
      if (!opts.filter || opts.filter(e.graph)) chosen.push_back(&e);

    std::vector<SpectrumRecord> records(chosen.size());
    parallel_for(chosen.size(), opts.jobs, [&](std::size_t i) {
      const auto& e = *chosen[i];
      auto& rec = records[i];
      rec.code = e.code;
      rec.graph = e.graph;
      const auto bounds = conjecture_bounds(e.graph);
      rec.omega = bounds.omega;
      rec.well_covered = bounds.alpha == bounds.alpha_min;
      const auto chi = chi_equitable(e.graph, search);
      const int top = chi.value ? *chi.value : bounds.upper;
      rec.spectrum = spectrum(e.graph, top + opts.slack, search);
    });
    for (auto& r : records) out.push_back(std::move(r));
  }
  return out;
}

}  // namespace blockeq::verifier
