#pragma once

#include <string>

#include "blockeq/graph.hpp"

namespace blockeq {

// Isomorphism-invariant code of a connected block graph: AHU encoding of the
// block-cut tree (blocks labelled by size) rooted at its centre, taking the
// smaller string when the tree is bicentral.
struct CanonicalCode {
  std::string code;

  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
};

// Throws not_block_graph or precondition (disconnected / empty).
CanonicalCode canonical_code(const Graph& g);

}  // namespace blockeq
