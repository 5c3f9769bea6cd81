#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "blockeq/bounds.hpp"
#include "blockeq/canonical.hpp"
#include "blockeq/coloring.hpp"
#include "blockeq/graph.hpp"

namespace blockeq::verifier {

struct EnumerationOptions {
  // Allowed block sizes (each >= 2); empty means any size.
  std::vector<int> block_sizes;
  // Most blocks of size >= 2 a vertex may lie in; 0 means unlimited.
  int max_blocks_per_vertex = 0;
  int jobs = 1;
};

struct Entry {
  CanonicalCode code;
  Graph graph;
};

// Level-wise generator: every connected block graph on n >= 2 vertices is a
// smaller one with a pendant clique attached, so level n is built from the
// levels n - s + 1 and deduplicated by canonical code. Levels are memoized.
class Enumerator {
 public:
  explicit Enumerator(EnumerationOptions opts = {});

  // One graph per isomorphism class, sorted by code.
  const std::vector<Entry>& level(int n);

 private:
  bool allowed_size(int s) const;

  EnumerationOptions opts_;
  std::vector<std::optional<std::vector<Entry>>> levels_;
};

std::vector<Graph> enumerate(int n, const EnumerationOptions& opts = {});

// A k-clique with k + 1 pendant K_{k+1} at every vertex: n = k(k^2 + k + 1),
// lower bound k + 1 but no equitable (k+1)-colouring.
Graph pendant_family(int k);

enum class Outcome { at_lower, at_upper, violation, unknown };

const char* to_string(Outcome o);

struct VerificationRecord {
  CanonicalCode code;
  Graph graph;
  BoundsReport bounds;
  Outcome verdict = Outcome::unknown;
  // Every k proven infeasible while searching upward from the lower bound.
  std::vector<int> infeasible;
  std::vector<int> unknown_k;
  std::optional<Coloring> witness;
  std::optional<std::vector<int>> spectrum_gaps;
};

struct VerifyOptions {
  // Per (graph, k) decision; 0 disables the limit.
  double budget_seconds = 10.0;
  int jobs = 1;
  bool spectrum = false;
  int spectrum_slack = 2;
};

// Bounds, exact chi_= and the bracket verdict of one connected block graph.
VerificationRecord verify_graph(const Graph& g, const VerifyOptions& opts = {});

struct LevelSummary {
  int n = 0;
  std::size_t graphs = 0;
  std::size_t at_lower = 0;
  std::size_t at_upper = 0;
  std::size_t unknown = 0;
  std::size_t violations = 0;
  std::size_t spectrum_gaps = 0;
};

struct VerificationSummary {
  std::vector<LevelSummary> levels;
  std::vector<CanonicalCode> unknown;
  // First violating record; the sweep stops after the level containing it.
  std::optional<VerificationRecord> counterexample;

  std::size_t violations() const;
};

using RecordSink = std::function<void(int n, const VerificationRecord&)>;

// Records reach the sink in code order within each n.
VerificationSummary verify_conjecture(int n_max, const VerifyOptions& opts = {},
                                      const RecordSink& sink = {});

struct SpectrumRecord {
  CanonicalCode code;
  Graph graph;
  int omega = 0;
  bool well_covered = false;
  Spectrum spectrum;
};

struct SpectrumOptions {
  int slack = 2;
  double budget_seconds = 10.0;
  int jobs = 1;
  // Only graphs passing the filter are examined; empty accepts all.
  std::function<bool(const Graph&)> filter;
};

// Spectrum of every enumerated graph on n <= n_max vertices up to
// chi_= + slack. Gaps are findings, not errors.
std::vector<SpectrumRecord> verify_spectrum(int n_max, const SpectrumOptions& opts = {});

}  // namespace blockeq::verifier
