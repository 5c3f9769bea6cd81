#pragma once

#include <span>

#include "json.hpp"

#include "blockeq/bounds.hpp"
#include "blockeq/canonical.hpp"
#include "blockeq/coloring.hpp"
#include "blockeq/small_alpha.hpp"
#include "blockeq/structured.hpp"
#include "blockeq/verifier.hpp"
#include "blockeq/wellcovered.hpp"

namespace blockeq::io {

using nlohmann::json;

// Flat object; `code` is omitted when g is not a connected block graph.
json bounds_json(const BoundsReport& r, const Graph& g);

// {k, classes, sizes}; vertices are reported through `labels` when given.
json coloring_json(const Coloring& c, std::span<const std::int64_t> labels = {});

json recipe_json(const wellcovered::WCDecomposition& r);
// Throws parse on malformed input.
wellcovered::WCDecomposition recipe_from_json(const json& j);

json blnk_json(const structured::BlnkParams& p);
json ttype_json(const structured::TType& t);
json star_json(const small_alpha::StarOfCliques& s);
json alpha2_json(const small_alpha::AlphaMin2Structure& st);

json edges_json(const Graph& g);
json record_json(int n, const verifier::VerificationRecord& r);
json summary_json(const verifier::VerificationSummary& s);
json spectrum_json(const Spectrum& s);

const char* to_string(Feasibility f);
const char* to_string(Verdict v);

}  // namespace blockeq::io
