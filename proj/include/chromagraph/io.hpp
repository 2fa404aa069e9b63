#pragma once

#include "chromagraph/graph.hpp"
#include "chromagraph/symfun.hpp"
#include "chromagraph/unipoly.hpp"
#include "chromagraph/verify.hpp"

#include <json.hpp>

#include <string>

namespace chromagraph {

/// {"n": 4, "edges": [[0,1], ...]}; a "weights" array appears only when some
/// weight differs from 1.
nlohmann::ordered_json graph_to_json(const WeightedGraph& g);
WeightedGraph weighted_graph_from_json(const nlohmann::json& j);

/// Plain-text edge list, one "u v" pair per line; '#' starts a comment. The
/// vertex count is one past the largest endpoint mentioned.
WeightedGraph parse_edge_list_text(const std::string& text);

/// Reads a graph file, accepting either the JSON object form or the
/// plain-text edge list (detected by a leading '{').
WeightedGraph load_weighted_graph(const std::string& path);

/// {"basis": "p", "coeffs": {"[2,1]": "-3", ...}} with partitions in
/// canonical order and rationals as "num/den" strings.
nlohmann::ordered_json symfun_to_json(const SymFun& f);
/// Accepts rationals either as strings or as JSON integers; a missing
/// "basis" field means the power-sum basis.
SymFun symfun_from_json(const nlohmann::json& j);

/// {"0": "3", "2": "-1/2"} keyed by exponent, ascending, zeros omitted.
nlohmann::ordered_json unipoly_to_json(const UniPoly& p);
UniPoly unipoly_from_json(const nlohmann::json& j);

nlohmann::ordered_json edge_subset_to_json(EdgeSubset s);

nlohmann::ordered_json report_to_json(const SuiteReport& report,
                                      bool include_timing = false);
std::string report_to_text(const SuiteReport& report);

}  // namespace chromagraph
