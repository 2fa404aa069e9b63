#include "chromagraph/io.hpp"

#include "chromagraph/csf.hpp"
#include "chromagraph/graph.hpp"
#include "chromagraph/symfun.hpp"
#include "chromagraph/unipoly.hpp"
#include "chromagraph/verify.hpp"

#include <json.hpp>

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>

using namespace chromagraph;
using nlohmann::json;

TEST_CASE("graph json round trip") {
  const WeightedGraph unit(complete_graph(3));
  const auto j = graph_to_json(unit);
  CHECK(j["n"] == 3);
  CHECK(j["edges"].size() == 3);
  CHECK(!j.contains("weights"));  // unit weights stay implicit
  CHECK(weighted_graph_from_json(j) == unit);

  const WeightedGraph w(path_graph(2), {2, 1});
  const auto jw = graph_to_json(w);
  CHECK(jw["weights"] == json::array({2, 1}));
  CHECK(weighted_graph_from_json(jw) == w);

  CHECK(weighted_graph_from_json(json::parse(R"({"n":1,"edges":[]})")) ==
        WeightedGraph(Graph(1, {})));

  CHECK_THROWS_AS(weighted_graph_from_json(json::parse(R"({"edges":[]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      weighted_graph_from_json(json::parse(R"({"n":2,"edges":[[0]]})")),
      std::invalid_argument);
  CHECK_THROWS_AS(
      weighted_graph_from_json(
          json::parse(R"({"n":2,"edges":[],"weights":[1]})")),
      std::invalid_argument);
  CHECK_THROWS_AS(
      weighted_graph_from_json(
          json::parse(R"({"n":1,"edges":[],"weights":[0]})")),
      std::invalid_argument);
}

TEST_CASE("plain text edge lists") {
  const WeightedGraph g = parse_edge_list_text(
      "# a triangle\n0 1\n1 2\n\n0 2   # closing edge\n");
  CHECK(g.graph() == Graph(3, {{0, 1}, {1, 2}, {0, 2}}));  // input edge order
  CHECK(g.has_unit_weights());

  // isolated final vertex exists only through the max endpoint rule
  CHECK(parse_edge_list_text("0 1\n").graph().vertex_count() == 2);
  CHECK(parse_edge_list_text("").graph().vertex_count() == 0);
  CHECK(parse_edge_list_text("# nothing\n").graph().vertex_count() == 0);

  CHECK_THROWS_WITH_AS(parse_edge_list_text("0 1\n2\n"),
                       doctest::Contains("line 2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_edge_list_text("0 1 2\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_edge_list_text("a b\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_edge_list_text("1 1\n"), std::invalid_argument);
}

TEST_CASE("loading graphs from disk sniffs the format") {
  const std::string path = "io_test_graph.tmp";
  {
    std::ofstream out(path);
    out << "  {\"n\": 2, \"edges\": [[0, 1]], \"weights\": [2, 1]}\n";
  }
  CHECK(load_weighted_graph(path) == WeightedGraph(path_graph(2), {2, 1}));
  {
    std::ofstream out(path);
    out << "# plain text\n0 1\n1 2\n";
  }
  CHECK(load_weighted_graph(path) == WeightedGraph(path_graph(3)));
  {
    std::ofstream out(path);
    out << "{\"n\": oops\n";
  }
  CHECK_THROWS_WITH_AS(load_weighted_graph(path),
                       doctest::Contains(path.c_str()),
                       std::invalid_argument);
  std::remove(path.c_str());
  CHECK_THROWS_AS(load_weighted_graph("definitely/not/there.json"),
                  std::invalid_argument);
}

TEST_CASE("symfun json round trip") {
  const SymFun f = csf_deletion_contraction(complete_graph(3));
  const auto j = symfun_to_json(f);
  CHECK(j["basis"] == "p");
  CHECK(j["coeffs"]["[3]"] == "2");
  CHECK(j["coeffs"]["[2,1]"] == "-3");
  CHECK(symfun_from_json(j) == f);

  // integer coefficients and a missing basis field are accepted on input
  const SymFun g = symfun_from_json(
      json::parse(R"({"coeffs": {"[2]": -1, "[1,1]": "1/2"}})"));
  CHECK(g.coeff(Partition({2})) == -1);
  CHECK(g.coeff(Partition({1, 1})) == Rational(1, 2));

  CHECK_THROWS_AS(symfun_from_json(json::parse(R"({"coeffs": {"[0]": 1}})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      symfun_from_json(json::parse(R"({"coeffs": {"[2,1]": true}})")),
      std::invalid_argument);
}

TEST_CASE("unipoly json round trip") {
  const UniPoly p = UniPoly::from_coeffs({0, 2, -1});
  const auto j = unipoly_to_json(p);
  CHECK(j.size() == 2);  // zero constant term omitted
  CHECK(j["1"] == "2");
  CHECK(j["2"] == "-1");
  CHECK(unipoly_from_json(j) == p);
  CHECK(unipoly_from_json(json::parse("{}")).is_zero());
  CHECK_THROWS_AS(unipoly_from_json(json::parse(R"({"x": "1"})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(unipoly_from_json(json::parse(R"({"-1": "1"})")),
                  std::invalid_argument);
}

TEST_CASE("edge subset json") {
  CHECK(edge_subset_to_json(0b101) == json::array({0, 2}));
  CHECK(edge_subset_to_json(0) == json::array());
}

TEST_CASE("suite reports") {
  SuiteOptions opts;
  opts.n_max = 2;
  opts.weighted_vertex_max = 2;
  opts.combinatorial_n_max = 2;
  opts.degree_max = 2;
  const SuiteReport report = run_suite(opts, {"csf-engines-agree"});

  const auto j = report_to_json(report);
  CHECK(j["passed"] == true);
  CHECK(j["checks"].size() == 1);
  CHECK(j["checks"][0]["id"] == "csf-engines-agree");
  CHECK(j["checks"][0]["failures"] == 0);
  CHECK(!j.contains("elapsed_ms"));  // timing only on request
  CHECK(report_to_json(report, true).contains("elapsed_ms"));

  const std::string text = report_to_text(report);
  CHECK(text.find("csf-engines-agree") != std::string::npos);
  CHECK(text.find("ok") != std::string::npos);
}
