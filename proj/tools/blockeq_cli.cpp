// Command-line front end; talks to the library only through the C API.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "blockeq.h"
#include "json.hpp"

using nlohmann::json;

namespace {

enum Exit { ok = 0, internal = 1, finding = 2, undecided = 3, input = 4 };

struct Failure {
  int code;
  std::string kind;
  std::string message;
};

const char* kind_name(bq_status s) {
  switch (s) {
    case BQ_OK: return "ok";
    case BQ_ERR_PARSE: return "parse";
    case BQ_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case BQ_ERR_NOT_BLOCK_GRAPH: return "not_block_graph";
    case BQ_ERR_NOT_CHORDAL: return "not_chordal";
    case BQ_ERR_PRECONDITION: return "precondition";
    case BQ_ERR_INTERNAL: return "internal";
    case BQ_INFEASIBLE: return "infeasible";
    case BQ_UNKNOWN: return "unknown";
  }
  return "internal";
}

int exit_for(bq_status s) {
  switch (s) {
    case BQ_OK: return ok;
    case BQ_INFEASIBLE: return finding;
    case BQ_UNKNOWN: return undecided;
    case BQ_ERR_INTERNAL: return internal;
    default: return input;
  }
}

void expect(bq_status s) {
  if (s != BQ_OK) throw Failure{exit_for(s), kind_name(s), bq_last_error()};
}

struct GraphDeleter {
  void operator()(bq_graph* g) const { bq_graph_free(g); }
};
struct ColoringDeleter {
  void operator()(bq_coloring* c) const { bq_coloring_free(c); }
};
struct StringDeleter {
  void operator()(char* s) const { bq_string_free(s); }
};
using GraphPtr = std::unique_ptr<bq_graph, GraphDeleter>;
using ColoringPtr = std::unique_ptr<bq_coloring, ColoringDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

std::string take(char* s) { return StringPtr(s).get(); }

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw Failure{input, "io", "cannot open " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bq_format parse_format(const std::string& f) {
  if (f == "edgelist") return BQ_FORMAT_EDGE_LIST;
  if (f == "dimacs") return BQ_FORMAT_DIMACS;
  return BQ_FORMAT_AUTO;
}

GraphPtr load_graph(const std::string& path, const std::string& format) {
  const auto text = read_input(path);
  bq_graph* g = nullptr;
  expect(bq_graph_parse(text.c_str(), parse_format(format), &g));
  return GraphPtr(g);
}

// Re-checks every colouring before it leaves the program.
std::string verdict_of(const bq_graph* g, const bq_coloring* c) {
  bq_verdict v;
  expect(bq_check(g, c, &v));
  switch (v) {
    case BQ_VALID_EQUITABLE: return "valid_equitable";
    case BQ_VALID_NOT_EQUITABLE: return "valid_not_equitable";
    case BQ_IMPROPER: return "improper";
  }
  return "improper";
}

json coloring_report(const bq_graph* g, const bq_coloring* c) {
  char* s = nullptr;
  expect(bq_coloring_json(c, g, &s));
  json j = json::parse(take(s));
  j["verdict"] = verdict_of(g, c);
  if (j["verdict"] != "valid_equitable")
    throw Failure{internal, "internal", "refusing to emit a colouring that fails the checker"};
  return j;
}

bq_class parse_class(const std::string& c) {
  static const std::map<std::string, bq_class> names{
      {"auto", BQ_CLASS_AUTO},     {"wellcovered", BQ_CLASS_WELLCOVERED},
      {"blnk", BQ_CLASS_BLNK},     {"b3le3", BQ_CLASS_B3LE3},
      {"alpha1", BQ_CLASS_ALPHA1}, {"alpha2", BQ_CLASS_ALPHA2},
      {"exact", BQ_CLASS_EXACT}};
  return names.at(c);
}

void emit_graph(bq_graph* g) {
  char* s = nullptr;
  expect(bq_graph_to_edge_list(g, &s));
  std::cout << take(s);
}

// Fixed 12-entry palette, cycled beyond 12 colours.
constexpr const char* kPalette[12] = {
    "#e6194b", "#3cb44b", "#ffe119", "#4363d8", "#f58231", "#911eb4",
    "#46f0f0", "#f032e6", "#bcf60c", "#fabebe", "#008080", "#e6beff"};

std::string to_dot(const bq_graph* g, const bq_coloring* c) {
  std::ostringstream out;
  out << "graph G {\n  node [style=filled];\n";
  for (uint32_t v = 0; v < bq_graph_order(g); ++v) {
    out << "  " << bq_graph_label(g, v);
    if (c) {
      const int colour = bq_coloring_color_of(c, v);
      out << " [label=\"" << bq_graph_label(g, v) << ":" << colour << "\", fillcolor=\""
          << kPalette[(colour - 1) % 12] << "\"]";
    }
    out << ";\n";
  }
  for (size_t i = 0; i < bq_graph_size(g); ++i) {
    uint32_t u, v;
    expect(bq_graph_edge(g, i, &u, &v));
    out << "  " << bq_graph_label(g, u) << " -- " << bq_graph_label(g, v) << ";\n";
  }
  out << "}\n";
  return out.str();
}

// Reads {k, classes} with vertices given by label.
ColoringPtr load_coloring(const std::string& path, const bq_graph* g) {
  json j;
  try {
    j = json::parse(read_input(path));
  } catch (const json::exception& e) {
    throw Failure{input, "parse", std::string("coloring is not JSON: ") + e.what()};
  }
  std::map<int64_t, uint32_t> index;
  for (uint32_t v = 0; v < bq_graph_order(g); ++v) index[bq_graph_label(g, v)] = v;
  std::vector<int> colours(bq_graph_order(g), 0);
  try {
    int c = 0;
    for (const auto& cls : j.at("classes")) {
      ++c;
      for (const auto& label : cls) colours.at(index.at(label.get<int64_t>())) = c;
    }
  } catch (const std::exception& e) {
    throw Failure{input, "parse", std::string("bad coloring: ") + e.what()};
  }
  bq_coloring* c = nullptr;
  expect(bq_coloring_create(j.value("k", 0), colours.data(), colours.size(), &c));
  return ColoringPtr(c);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equitable colouring of block graphs"};
  app.require_subcommand(1);
  std::string format = "auto";
  app.add_option("--format", format, "Input graph format")
      ->check(CLI::IsMember({"auto", "edgelist", "dimacs"}));
  double budget = 10.0;
  app.add_option("--budget", budget, "Seconds per exact (graph, k) decision; 0 = no limit");

  std::string path = "-";
  auto* bounds = app.add_subcommand("bounds", "Clique number, independence data and bracket");
  bounds->add_option("input", path, "Graph file, - for stdin");
  bool with_chi = false;
  bounds->add_flag("--chi", with_chi, "Also compute chi_= exactly");

  auto* color = app.add_subcommand("color", "Equitable colouring by class algorithm");
  color->add_option("input", path, "Graph file, - for stdin");
  std::string cls = "auto";
  color->add_option("--class", cls)->check(
      CLI::IsMember({"auto", "wellcovered", "blnk", "b3le3", "alpha1", "alpha2", "exact"}));
  int k = 0;
  color->add_option("--k", k, "Number of colours; class default when omitted");

  auto* exact = app.add_subcommand("exact", "Decide equitable k-colourability");
  exact->add_option("input", path, "Graph file, - for stdin");
  exact->add_option("--k", k)->required();

  auto* spec = app.add_subcommand("spectrum", "Feasibility of every k up to kmax");
  spec->add_option("input", path, "Graph file, - for stdin");
  int kmax = 0;
  spec->add_option("--kmax", kmax)->required();
  int jobs = 1;
  spec->add_option("--jobs", jobs);

  auto* verify = app.add_subcommand("verify", "Check the gap-one bracket on all small block graphs");
  int nmax = 0;
  verify->add_option("--nmax", nmax);
  verify->add_option("--jobs", jobs);
  bool verify_spectrum = false;
  verify->add_flag("--spectrum", verify_spectrum, "Also record spectrum gaps");
  std::string out_path = "-";
  verify->add_option("--out", out_path, "JSONL record stream, - for stdout");
  std::string single;
  verify->add_option("--graph", single, "Verify one graph file instead of sweeping");

  auto* generate = app.add_subcommand("generate", "Write a generated graph as an edge list");
  generate->require_subcommand(1);
  auto* gen_blnk = generate->add_subcommand("blnk", "B_l(n,k)");
  int bn = 0, bk = 0, bl = 0;
  gen_blnk->add_option("n", bn)->required();
  gen_blnk->add_option("k", bk)->required();
  gen_blnk->add_option("l", bl)->required();
  int fk = 0;
  auto* gen_family = generate->add_subcommand("pendant-family", "Tight pendant family");
  gen_family->alias("fig2");
  gen_family->add_option("k", fk)->required();
  auto* gen_wc = generate->add_subcommand("wellcovered", "Well-covered graph from a recipe");
  std::string recipe_path;
  gen_wc->add_option("recipe", recipe_path, "Recipe JSON file, - for stdin");
  bool random = false;
  gen_wc->add_flag("--random", random, "Draw a random recipe instead");
  uint64_t seed = 1;
  int max_omega = 5, max_n = 30;
  gen_wc->add_option("--seed", seed);
  gen_wc->add_option("--max-omega", max_omega);
  gen_wc->add_option("--max-n", max_n);
  bool show_recipe = false;
  gen_wc->add_flag("--print-recipe", show_recipe, "Print the recipe JSON on stderr");

  auto* dot = app.add_subcommand("export-dot", "Render the graph, coloured, as DOT");
  dot->add_option("input", path, "Graph file, - for stdin");
  std::string coloring_path;
  dot->add_option("--coloring", coloring_path, "Colouring JSON; computed automatically if absent");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*bounds) {
      auto g = load_graph(path, format);
      char* s = nullptr;
      expect(bq_bounds(g.get(), with_chi ? budget : -1.0, &s));
      std::cout << take(s) << "\n";
      return ok;
    }

    if (*color) {
      auto g = load_graph(path, format);
      bq_coloring* c = nullptr;
      char* info = nullptr;
      expect(bq_color(g.get(), parse_class(cls), k, budget, &c, &info));
      ColoringPtr coloring(c);
      json meta = json::parse(take(info));
      std::cerr << "color: class " << meta["class"].get<std::string>() << " ("
                << meta["reason"].get<std::string>() << ")";
      if (meta.contains("skipped") && !meta["skipped"].empty())
        std::cerr << ", not matched: " << meta["skipped"].dump();
      std::cerr << "\n";
      json report = coloring_report(g.get(), coloring.get());
      report["class"] = meta;
      std::cout << report.dump() << "\n";
      return ok;
    }

    if (*exact) {
      auto g = load_graph(path, format);
      bq_feasibility f;
      bq_coloring* c = nullptr;
      expect(bq_exact(g.get(), k, budget, &f, &c));
      ColoringPtr witness(c);
      json report{{"k", k}};
      report["feasibility"] = f == BQ_FEASIBLE       ? "feasible"
                              : f == BQ_NOT_FEASIBLE ? "infeasible"
                                                     : "unknown";
      if (witness) report["coloring"] = coloring_report(g.get(), witness.get());
      std::cout << report.dump() << "\n";
      return f == BQ_FEASIBLE ? ok : f == BQ_NOT_FEASIBLE ? finding : undecided;
    }

    if (*spec) {
      auto g = load_graph(path, format);
      char* s = nullptr;
      expect(bq_spectrum(g.get(), kmax, budget, jobs, &s));
      json report = json::parse(take(s));
      std::cout << report.dump() << "\n";
      return report["unknown"].empty() ? ok : undecided;
    }

    if (*verify) {
      std::ofstream file;
      std::ostream* out = &std::cout;
      if (out_path != "-") {
        file.open(out_path);
        if (!file) throw Failure{input, "io", "cannot write " + out_path};
        out = &file;
      }
      if (!single.empty()) {
        auto g = load_graph(single, format);
        char* s = nullptr;
        expect(bq_verify_graph(g.get(), budget, verify_spectrum ? 1 : 0, &s));
        json rec = json::parse(take(s));
        *out << rec.dump() << "\n";
        if (rec["verdict"] == "VIOLATION") return finding;
        return rec["verdict"] == "unknown" ? undecided : ok;
      }
      if (nmax < 1) throw Failure{input, "invalid_argument", "--nmax must be >= 1"};
      auto sink = [](const char* record, void* user) {
        *static_cast<std::ostream*>(user) << record << "\n";
      };
      char* summary = nullptr;
      const bq_status st =
          bq_verify(nmax, jobs, budget, verify_spectrum ? 1 : 0, sink, out, &summary);
      if (st != BQ_OK && st != BQ_INFEASIBLE) expect(st);
      json report = json::parse(take(summary));
      std::cout << report.dump() << "\n";
      if (st == BQ_INFEASIBLE) return finding;
      return report["summary"]["unknown"].empty() ? ok : undecided;
    }

    if (*generate) {
      bq_graph* g = nullptr;
      if (*gen_blnk) {
        expect(bq_generate_blnk(bn, bk, bl, &g));
      } else if (*gen_family) {
        expect(bq_generate_pendant_family(fk, &g));
      } else {
        std::string recipe;
        if (random) {
          char* s = nullptr;
          expect(bq_random_recipe(seed, max_omega, max_n, &s));
          recipe = take(s);
        } else if (!recipe_path.empty()) {
          recipe = read_input(recipe_path);
        } else {
          throw Failure{input, "invalid_argument", "give a recipe file or --random"};
        }
        if (show_recipe) std::cerr << recipe << "\n";
        expect(bq_generate_wellcovered(recipe.c_str(), &g));
      }
      GraphPtr owned(g);
      emit_graph(owned.get());
      return ok;
    }

    if (*dot) {
      auto g = load_graph(path, format);
      ColoringPtr coloring;
      if (!coloring_path.empty()) {
        coloring = load_coloring(coloring_path, g.get());
      } else {
        bq_coloring* c = nullptr;
        expect(bq_color(g.get(), BQ_CLASS_AUTO, 0, budget, &c, nullptr));
        coloring.reset(c);
      }
      verdict_of(g.get(), coloring.get());
      std::cout << to_dot(g.get(), coloring.get());
      return ok;
    }
  } catch (const Failure& f) {
    std::cerr << json{{"error", f.kind}, {"message", f.message}}.dump() << "\n";
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", "internal"}, {"message", e.what()}}.dump() << "\n";
    return internal;
  }
  return ok;
}
