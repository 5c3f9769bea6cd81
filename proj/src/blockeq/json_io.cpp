#include "blockeq/json_io.hpp"

namespace blockeq::io {

json bounds_json(const BoundsReport& r, const Graph& g) {
  json j{{"omega", r.omega},   {"alpha", r.alpha}, {"alpha_min", r.alpha_min},
         {"lower", r.lower},   {"upper", r.upper}};
  j["chi_eq"] = r.chi_eq ? json(*r.chi_eq) : json(nullptr);
  if (g.order() > 0 && is_connected(g) && is_block_graph(g)) j["code"] = canonical_code(g).code;
  return j;
}

json coloring_json(const Coloring& c, std::span<const std::int64_t> labels) {
  json classes = json::array();
  for (const auto& cls : c.classes()) {
    json members = json::array();
    for (Vertex v : cls)
      members.push_back(labels.empty() ? static_cast<std::int64_t>(v) : labels[v]);
    classes.push_back(std::move(members));
  }
  return {{"k", c.colors()}, {"classes", std::move(classes)}, {"sizes", c.class_sizes()}};
}

json recipe_json(const wellcovered::WCDecomposition& r) {
  json ops = json::array();
  for (const auto& op : r.ops)
    ops.push_back({{"host", op.host}, {"s", op.s}, {"pendants", op.pendant_sizes}});
  return {{"base", r.base_size}, {"ops", std::move(ops)}};
}

wellcovered::WCDecomposition recipe_from_json(const json& j) {
  try {
    wellcovered::WCDecomposition r;
    r.base_size = j.at("base").get<int>();
    for (const auto& op : j.value("ops", json::array())) {
      wellcovered::AttachOp a;
      a.host = op.at("host").get<Vertex>();
      a.s = op.at("s").get<int>();
      a.pendant_sizes = op.at("pendants").get<std::vector<int>>();
      r.ops.push_back(std::move(a));
    }
    return r;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::parse, std::string("bad recipe: ") + e.what());
  }
}

json blnk_json(const structured::BlnkParams& p) {
  return {{"class", "blnk"}, {"n", p.n}, {"k", p.k}, {"l", p.l}};
}

json ttype_json(const structured::TType& t) {
  return {{"kind", t.kind == structured::TKind::T1 ? "T1" : "T2"}, {"m", t.m}};
}

json star_json(const small_alpha::StarOfCliques& s) {
  json cliques = json::array();
  for (const auto& c : s.cliques) cliques.push_back(c);
  return {{"center", s.center}, {"sizes", s.sizes}, {"cliques", std::move(cliques)}};
}

json alpha2_json(const small_alpha::AlphaMin2Structure& st) {
  return {{"variant", st.variant == small_alpha::Variant::direct ? "direct" : "bridged"},
          {"star", star_json(st.star)},
          {"l", st.l},
          {"n0", st.n0},
          {"attach", st.attach_simplicial},
          {"q0_joint", st.q0_joint},
          {"q0", st.q0}};
}

json edges_json(const Graph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return edges;
}

json record_json(int n, const verifier::VerificationRecord& r) {
  json j{{"n", n},
         {"code", r.code.code},
         {"bounds", bounds_json(r.bounds, Graph())},
         {"chi_eq", r.bounds.chi_eq ? json(*r.bounds.chi_eq) : json(nullptr)},
         {"verdict", verifier::to_string(r.verdict)}};
  if (!r.unknown_k.empty()) j["unknown_k"] = r.unknown_k;
  if (r.spectrum_gaps) j["spectrum_gaps"] = *r.spectrum_gaps;
  if (r.verdict == verifier::Outcome::violation) {
    j["certificate"] = {{"edges", edges_json(r.graph)}, {"infeasible_k", r.infeasible}};
  }
  return j;
}

json summary_json(const verifier::VerificationSummary& s) {
  json levels = json::array();
  for (const auto& l : s.levels)
    levels.push_back({{"n", l.n},
                      {"graphs", l.graphs},
                      {"at_lower", l.at_lower},
                      {"at_upper", l.at_upper},
                      {"unknown", l.unknown},
                      {"violations", l.violations},
                      {"spectrum_gaps", l.spectrum_gaps}});
  json unknown = json::array();
  for (const auto& c : s.unknown) unknown.push_back(c.code);
  json j{{"summary", {{"levels", std::move(levels)},
                      {"violations", s.violations()},
                      {"unknown", std::move(unknown)}}}};
  if (s.counterexample)
    j["summary"]["counterexample"] = {{"code", s.counterexample->code.code},
                                      {"edges", edges_json(s.counterexample->graph)},
                                      {"infeasible_k", s.counterexample->infeasible}};
  return j;
}

const char* to_string(Feasibility f) {
  switch (f) {
    case Feasibility::feasible: return "feasible";
    case Feasibility::infeasible: return "infeasible";
    case Feasibility::unknown: return "unknown";
  }
  return "unknown";
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::valid_equitable: return "valid_equitable";
    case Verdict::valid_not_equitable: return "valid_not_equitable";
    case Verdict::improper: return "improper";
  }
  return "improper";
}

json spectrum_json(const Spectrum& s) {
  json feas = json::object();
  for (int k = 1; k <= s.k_max; ++k)
    feas[std::to_string(k)] = to_string(s.feasibility[static_cast<std::size_t>(k - 1)]);
  auto opt = [](const std::optional<int>& v) { return v ? json(*v) : json(nullptr); };
  return {{"k_max", s.k_max},     {"feasibility", std::move(feas)}, {"chi", opt(s.chi)},
          {"threshold", opt(s.threshold)}, {"gaps", s.gaps},       {"unknown", s.unknown}};
}

}  // namespace blockeq::io
