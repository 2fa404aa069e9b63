#include "chromagraph/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace chromagraph {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json graph_to_json(const WeightedGraph& g) {
  ordered_json out;
  out["n"] = g.graph().vertex_count();
  out["edges"] = ordered_json::array();
  for (const auto& [u, v] : g.graph().edges())
    out["edges"].push_back(ordered_json::array({u, v}));
  if (!g.has_unit_weights()) out["weights"] = g.weights();
  return out;
}

WeightedGraph weighted_graph_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("graph JSON must be an object");
  if (!j.contains("n") || !j["n"].is_number_integer())
    throw std::invalid_argument("graph JSON needs an integer \"n\"");
  const int n = j["n"].get<int>();
  std::vector<std::pair<int, int>> edges;
  if (j.contains("edges")) {
    if (!j["edges"].is_array())
      throw std::invalid_argument("\"edges\" must be an array of pairs");
    for (const auto& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
          !e[1].is_number_integer())
        throw std::invalid_argument("\"edges\" must be an array of pairs");
      edges.push_back({e[0].get<int>(), e[1].get<int>()});
    }
  }
  Graph g(n, std::move(edges));
  if (!j.contains("weights")) return WeightedGraph(std::move(g));
  if (!j["weights"].is_array())
    throw std::invalid_argument("\"weights\" must be an array of integers");
  std::vector<int> weights;
  for (const auto& w : j["weights"]) {
    if (!w.is_number_integer())
      throw std::invalid_argument("\"weights\" must be an array of integers");
    weights.push_back(w.get<int>());
  }
  return WeightedGraph(std::move(g), std::move(weights));
}

WeightedGraph parse_edge_list_text(const std::string& text) {
  std::vector<std::pair<int, int>> edges;
  int max_vertex = -1;
  std::istringstream lines(text);
  std::string line;
  int line_no = 0;
  while (std::getline(lines, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream fields(line);
    int u, v;
    if (!(fields >> u)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      throw std::invalid_argument("line " + std::to_string(line_no) +
                                  ": expected \"u v\"");
    }
    if (!(fields >> v))
      throw std::invalid_argument("line " + std::to_string(line_no) +
                                  ": expected \"u v\"");
    std::string rest;
    if (fields >> rest)
      throw std::invalid_argument("line " + std::to_string(line_no) +
                                  ": expected \"u v\"");
    if (u < 0 || v < 0)
      throw std::invalid_argument("line " + std::to_string(line_no) +
                                  ": negative vertex");
    edges.push_back({u, v});
    max_vertex = std::max({max_vertex, u, v});
  }
  return WeightedGraph(Graph(max_vertex + 1, std::move(edges)));
}

WeightedGraph load_weighted_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::parse_error& e) {
      throw std::invalid_argument(path + ": " + e.what());
    }
    return weighted_graph_from_json(j);
  }
  try {
    return parse_edge_list_text(text);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

ordered_json symfun_to_json(const SymFun& f) {
  ordered_json out;
  out["basis"] = f.basis().name;
  out["coeffs"] = ordered_json::object();
  for (const auto& [p, c] : f.coeffs())
    out["coeffs"][p.to_string()] = rational_to_string(c);
  return out;
}

namespace {

Rational rational_from_value(const json& v) {
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_string()) return rational_from_string(v.get<std::string>());
  throw std::invalid_argument("rational values must be strings or integers");
}

}  // namespace

SymFun symfun_from_json(const json& j) {
  if (!j.is_object())
    throw std::invalid_argument("symmetric function JSON must be an object");
  BasisId basis;
  if (j.contains("basis")) {
    if (!j["basis"].is_string())
      throw std::invalid_argument("\"basis\" must be a string");
    const std::string name = j["basis"].get<std::string>();
    if (name != "p") basis = BasisId{BasisKind::chromatic_family, -1, name};
  }
  SymFun f = SymFun::zero(basis);
  if (!j.contains("coeffs") || !j["coeffs"].is_object())
    throw std::invalid_argument("expected a \"coeffs\" object");
  for (const auto& [key, value] : j["coeffs"].items())
    f.set_coeff(Partition::parse(key), rational_from_value(value));
  return f;
}

ordered_json unipoly_to_json(const UniPoly& p) {
  ordered_json out = ordered_json::object();
  for (int k = 0; k <= p.degree(); ++k)
    if (p.coeff(k) != 0) out[std::to_string(k)] = rational_to_string(p.coeff(k));
  return out;
}

UniPoly unipoly_from_json(const json& j) {
  if (!j.is_object())
    throw std::invalid_argument("polynomial JSON must be an object");
  std::vector<Rational> coeffs;
  for (const auto& [key, value] : j.items()) {
    int exponent = 0;
    std::size_t pos = 0;
    try {
      exponent = std::stoi(key, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad exponent key: " + key);
    }
    if (pos != key.size() || exponent < 0)
      throw std::invalid_argument("bad exponent key: " + key);
    if (coeffs.size() <= static_cast<std::size_t>(exponent))
      coeffs.resize(static_cast<std::size_t>(exponent) + 1, Rational(0));
    coeffs[static_cast<std::size_t>(exponent)] = rational_from_value(value);
  }
  return UniPoly(std::move(coeffs));
}

ordered_json edge_subset_to_json(EdgeSubset s) {
  ordered_json out = ordered_json::array();
  for (int e : edge_subset_indices(s)) out.push_back(e);
  return out;
}

ordered_json report_to_json(const SuiteReport& report, bool include_timing) {
  ordered_json out;
  const SuiteOptions& o = report.options;
  out["options"] = {{"n_max", o.n_max},
                    {"weighted_vertex_max", o.weighted_vertex_max},
                    {"weight_excess_max", o.weight_excess_max},
                    {"combinatorial_n_max", o.combinatorial_n_max},
                    {"eval_x_max", o.eval_x_max},
                    {"degree_max", o.degree_max},
                    {"include_weighted", o.include_weighted},
                    {"mutate_tree_formula_sign", o.mutate_tree_formula_sign}};
  if (o.weighted_total_max)
    out["options"]["weighted_total_max"] = *o.weighted_total_max;
  out["checks"] = ordered_json::array();
  for (const auto& c : report.checks) {
    ordered_json jc;
    jc["id"] = c.id;
    jc["description"] = c.description;
    jc["instances"] = c.instances;
    jc["failures"] = c.failures;
    if (!c.recorded.empty()) {
      jc["recorded"] = ordered_json::array();
      for (const auto& f : c.recorded)
        jc["recorded"].push_back(
            {{"subject", f.subject}, {"detail", f.detail}});
    }
    out["checks"].push_back(std::move(jc));
  }
  if (!report.missing.empty()) out["missing"] = report.missing;
  out["total_instances"] = report.total_instances;
  out["total_failures"] = report.total_failures;
  out["passed"] = report.passed();
  if (include_timing) out["elapsed_ms"] = report.elapsed_ms;
  return out;
}

std::string report_to_text(const SuiteReport& report) {
  std::string out;
  for (const auto& c : report.checks) {
    out += c.failures ? "[FAIL] " : "[ok]   ";
    out += c.id;
    if (c.id.size() < 40) out += std::string(40 - c.id.size(), ' ');
    out += ' ';
    out += std::to_string(c.instances) + " instances";
    if (c.failures) out += ", " + std::to_string(c.failures) + " failed";
    out += '\n';
    for (const auto& f : c.recorded) {
      out += "         " + f.subject + '\n';
      out += "           " + f.detail + '\n';
    }
  }
  for (const auto& id : report.missing)
    out += "[MISS] " + id + " never ran\n";
  out += "total: " + std::to_string(report.total_instances) + " instances, " +
         std::to_string(report.total_failures) + " failures\n";
  return out;
}

}  // namespace chromagraph
