// chromagraph command-line tool.
//
// Subcommands:
//   csf       expand the chromatic symmetric function of a graph
//   poly      chromatic or tree polynomial, optionally evaluated at a point
//   bcc       broken-circuit complex listings
//   verify    exhaustive identity suite over all small graphs
//   collapse  stdin filter: symmetric-function JSON -> length-collapse
//
// Exit codes: 0 success, 1 verification failure, 2 unreadable input,
// 3 invalid basis or family.

#include "chromagraph/bcc.hpp"
#include "chromagraph/csf.hpp"
#include "chromagraph/graphpoly.hpp"
#include "chromagraph/io.hpp"
#include "chromagraph/symfun.hpp"
#include "chromagraph/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace chromagraph;
using nlohmann::json;
using nlohmann::ordered_json;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitBadFamily = 3;

int max_degree_cap() {
  if (const char* env = std::getenv("CHROMAGRAPH_MAX_DEGREE")) {
    try {
      const int v = std::stoi(env);
      if (v >= 1) return v;
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring invalid CHROMAGRAPH_MAX_DEGREE\n";
  }
  return 8;
}

WeightedGraph read_graph_or_exit(const std::string& path) {
  try {
    return load_weighted_graph(path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::exit(kExitBadInput);
  }
}

/// Family file: {"name": "...", "members": {"1": {graph}, "2": {graph}, ...}}
/// keyed by total weight.
GraphFamily load_family_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open family file " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw std::invalid_argument("family file " + path + ": " + e.what());
  }
  if (!j.is_object() || !j.contains("members") || !j["members"].is_object())
    throw std::invalid_argument("family file needs a \"members\" object");
  std::string name = j.value("name", std::string("custom"));
  auto members = std::make_shared<std::map<int, WeightedGraph>>();
  for (const auto& [key, value] : j["members"].items()) {
    int n = 0;
    try {
      n = std::stoi(key);
    } catch (const std::exception&) {
      throw std::invalid_argument("family member key must be an integer: " +
                                  key);
    }
    (*members)[n] = weighted_graph_from_json(value);
  }
  return GraphFamily(std::move(name), [members, path](int n) {
    const auto it = members->find(n);
    if (it == members->end())
      throw std::invalid_argument("family file " + path + " lacks member " +
                                  std::to_string(n));
    return it->second;
  });
}

struct BasisRequest {
  std::string basis = "p";
  std::string family_file;
};

/// Resolves --basis/--family into a registered basis; empty optional means
/// the power-sum basis.
std::optional<BasisId> resolve_basis(BasisRegistry& registry,
                                     const BasisRequest& req, int degree) {
  if (req.basis == "p") return std::nullopt;
  const int cap = max_degree_cap();
  if (degree > cap)
    throw std::invalid_argument(
        "graph degree " + std::to_string(degree) +
        " exceeds the transition cap " + std::to_string(cap) +
        " (raise CHROMAGRAPH_MAX_DEGREE)");
  GraphFamily family;
  if (req.basis == "path")
    family = GraphFamily::paths();
  else if (req.basis == "star")
    family = GraphFamily::stars();
  else if (req.basis == "tree-family")
    family = load_family_file(req.family_file);
  else
    throw std::invalid_argument("unknown basis " + req.basis);
  return registry.register_chromatic_basis(family, degree);
}

int run_csf(const std::string& graph_file, const BasisRequest& req) {
  const WeightedGraph g = read_graph_or_exit(graph_file);
  const SymFun in_p = csf_deletion_contraction(g);
  SymFun out = in_p;
  if (req.basis != "p") {
    try {
      BasisRegistry registry;
      const auto basis = resolve_basis(registry, req, g.total_weight());
      out = registry.change_basis(in_p, *basis);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitBadFamily;
    }
  }
  std::cout << symfun_to_json(out).dump(2) << "\n";
  return 0;
}

int run_poly(const std::string& graph_file, const std::string& kind,
             std::optional<long long> at, bool as_json) {
  const WeightedGraph g = read_graph_or_exit(graph_file);
  UniPoly p;
  if (kind == "chromatic") {
    p = chromatic_poly_weighted(g);
  } else if (kind == "tree") {
    p = tree_poly_weighted(g);
  } else {
    std::cerr << "error: --kind must be chromatic or tree\n";
    return kExitBadInput;
  }
  if (at) {
    std::cout << rational_to_string(p.evaluate(Rational(*at))) << "\n";
  } else if (as_json) {
    std::cout << unipoly_to_json(p).dump(2) << "\n";
  } else {
    std::cout << p.to_string() << "\n";
  }
  return 0;
}

int run_bcc(const std::string& graph_file, bool maximal,
            std::optional<int> pairs_k) {
  const WeightedGraph wg = read_graph_or_exit(graph_file);
  const Graph& g = wg.graph();
  ordered_json out;
  try {
    const auto cx = bcc_members(g);
    if (pairs_k) {
      out["pairs"] = ordered_json::array();
      for (const auto& [cut, forest] : cutset_forest_pairs(cx, *pairs_k))
        out["pairs"].push_back(ordered_json::array(
            {edge_subset_to_json(cut), edge_subset_to_json(forest)}));
    } else if (maximal) {
      out["maximal"] = ordered_json::array();
      for (EdgeSubset m : maximal_members(cx))
        out["maximal"].push_back(edge_subset_to_json(m));
    } else {
      out["members"] = ordered_json::array();
      for (EdgeSubset m : cx.members)
        out["members"].push_back(edge_subset_to_json(m));
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int run_verify(int max_n, bool weights, bool as_json,
               const std::string& inject) {
  SuiteOptions opt;
  opt.n_max = max_n;
  opt.include_weighted = weights;
  if (inject == "tree-formula-sign") {
    opt.mutate_tree_formula_sign = true;
  } else if (!inject.empty()) {
    std::cerr << "error: unknown defect " << inject << "\n";
    return kExitBadInput;
  }
  const SuiteReport report = run_suite(opt);
  if (as_json)
    std::cout << report_to_json(report).dump(2) << "\n";
  else
    std::cout << report_to_text(report);
  return report.passed() ? 0 : kExitVerifyFailed;
}

int run_collapse() {
  std::stringstream buffer;
  buffer << std::cin.rdbuf();
  SymFun f;
  try {
    f = symfun_from_json(json::parse(buffer.str()));
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  std::cout << collapse_by_length(f).to_string() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact chromatic symmetric functions, chromatic and tree "
               "polynomials of vertex-weighted graphs"};
  app.require_subcommand(1);

  std::string graph_file;
  BasisRequest basis_req;
  auto* csf = app.add_subcommand(
      "csf", "Expand the chromatic symmetric function of a graph");
  csf->add_option("--graph", graph_file, "Graph file (JSON or edge list)")
      ->required();
  csf->add_option("--basis", basis_req.basis,
                  "Output basis: p, path, star, or tree-family")
      ->check(CLI::IsMember({"p", "path", "star", "tree-family"}));
  csf->add_option("--family", basis_req.family_file,
                  "Family file for --basis tree-family");

  std::string kind = "chromatic";
  std::optional<long long> at;
  bool poly_json = false;
  auto* poly = app.add_subcommand(
      "poly", "Chromatic or tree polynomial of a graph");
  poly->add_option("--graph", graph_file, "Graph file (JSON or edge list)")
      ->required();
  poly->add_option("--kind", kind, "chromatic or tree")
      ->check(CLI::IsMember({"chromatic", "tree"}));
  poly->add_option("--at", at, "Evaluate exactly at an integer");
  poly->add_flag("--json", poly_json, "Emit coefficient JSON instead of text");

  bool maximal = false;
  std::optional<int> pairs_k;
  auto* bcc = app.add_subcommand(
      "bcc", "List the broken-circuit complex of a graph");
  bcc->add_option("--graph", graph_file, "Graph file (JSON or edge list)")
      ->required();
  bcc->add_flag("--maximal", maximal, "List only inclusion-maximal members");
  bcc->add_option("--pairs", pairs_k,
                  "List cutset/forest pairs for coefficient K");

  int max_n = 6;
  bool weights = false;
  bool verify_json = false;
  std::string inject;
  auto* verify = app.add_subcommand(
      "verify", "Run the identity suite over all small graphs");
  verify->add_option("--max-n", max_n, "Vertex bound for the sweep (1..7)")
      ->check(CLI::Range(1, 7));
  verify->add_flag("--weights", weights, "Include vertex-weighted checks");
  verify->add_flag("--json", verify_json, "Emit the report as JSON");
  verify
      ->add_option("--inject-defect", inject,
                   "Plant a known defect to prove the suite can fail")
      ->group("");  // hidden

  auto* collapse = app.add_subcommand(
      "collapse",
      "Read symmetric-function JSON on stdin, print its length collapse");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitBadInput;
  }

  if (csf->parsed()) return run_csf(graph_file, basis_req);
  if (poly->parsed()) return run_poly(graph_file, kind, at, poly_json);
  if (bcc->parsed()) return run_bcc(graph_file, maximal, pairs_k);
  if (verify->parsed())
    return run_verify(max_n, weights, verify_json, inject);
  if (collapse->parsed()) return run_collapse();
  return kExitBadInput;
}
