#include "chromagraph/verify.hpp"

#include "chromagraph/graph.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

using namespace chromagraph;

namespace {

SuiteOptions small_options() {
  SuiteOptions o;
  o.n_max = 3;
  o.weighted_vertex_max = 3;
  o.weighted_total_max = 5;
  o.combinatorial_n_max = 3;
  o.eval_x_max = 3;
  o.degree_max = 3;
  return o;
}

}  // namespace

TEST_CASE("graph enumeration") {
  int count = 0;
  std::set<std::string> keys;
  enumerate_labelled_graphs(3, [&](const Graph& g) {
    ++count;
    CHECK(g.vertex_count() == 3);
    keys.insert(g.canonical_key());
  });
  CHECK(count == 8);  // one per subset of the three possible edges
  CHECK(static_cast<int>(keys.size()) == count);

  count = 0;
  enumerate_labelled_graphs(0, [&](const Graph&) { ++count; });
  CHECK(count == 1);
  CHECK_THROWS_AS(enumerate_labelled_graphs(8, [](const Graph&) {}),
                  std::invalid_argument);
}

TEST_CASE("weighting enumeration") {
  std::vector<std::vector<int>> seen;
  enumerate_weightings(path_graph(2), 4, [&](const WeightedGraph& w) {
    CHECK(w.graph() == path_graph(2));
    seen.push_back(w.weights());
  });
  const std::vector<std::vector<int>> expected = {
      {1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}, {3, 1}};
  CHECK(seen == expected);

  // budget below the vertex count leaves nothing to visit
  int count = 0;
  enumerate_weightings(path_graph(3), 2, [&](const WeightedGraph&) { ++count; });
  CHECK(count == 0);
}

TEST_CASE("the check table is complete and consistently ordered") {
  const auto& table = required_checks();
  CHECK(table.size() >= 25);
  std::set<std::string> ids;
  for (const auto& [id, description] : table) {
    CHECK(!description.empty());
    CHECK(ids.insert(id).second);  // no duplicates
  }
  CHECK(ids.count("csf-engines-agree") == 1);
  CHECK(ids.count("tree-poly-at-one") == 1);
  CHECK(ids.count("lattice-inversion") == 1);

  // a full small run covers every check in table order
  const SuiteReport report = run_suite(small_options());
  REQUIRE(report.checks.size() == table.size());
  for (std::size_t i = 0; i < table.size(); ++i)
    CHECK(report.checks[i].id == table[i].first);
  CHECK(report.passed());
  CHECK(report.total_instances > 0);
  for (const auto& c : report.checks) CHECK(c.instances > 0);
}

TEST_CASE("restricting to a subset of checks") {
  const SuiteReport report =
      run_suite(small_options(), {"tree-poly-at-one", "chromatic-sum-vanishes"});
  CHECK(report.passed());
  CHECK(report.checks.size() == 2);
  CHECK(report.find("tree-poly-at-one") != nullptr);
  CHECK(report.find("csf-engines-agree") == nullptr);

  const SuiteReport unknown = run_suite(small_options(), {"no-such-check"});
  CHECK(!unknown.passed());
  REQUIRE(unknown.missing.size() == 1);
  CHECK(unknown.missing[0] == "no-such-check");
}

TEST_CASE("weighted checks only run when requested") {
  SuiteOptions opts = small_options();
  opts.include_weighted = false;
  const SuiteReport report = run_suite(opts);
  CHECK(report.passed());
  CHECK(report.find("csf-matches-colouring-oracle") == nullptr);
  CHECK(report.find("csf-engines-agree") != nullptr);

  // but an explicit request overrides the exclusion
  const SuiteReport forced =
      run_suite(opts, {"csf-matches-colouring-oracle"});
  CHECK(forced.passed());
  const CheckResult* c = forced.find("csf-matches-colouring-oracle");
  REQUIRE(c != nullptr);
  CHECK(c->instances > 0);
}

TEST_CASE("an injected defect is caught and reported") {
  SuiteOptions opts = small_options();
  opts.mutate_tree_formula_sign = true;
  opts.max_recorded_failures = 4;
  const SuiteReport report =
      run_suite(opts, {"tree-poly-formula-vs-recursion"});
  CHECK(!report.passed());
  const CheckResult* c = report.find("tree-poly-formula-vs-recursion");
  REQUIRE(c != nullptr);
  CHECK(c->failures > 0);
  CHECK(c->recorded.size() <= 4);
  REQUIRE(!c->recorded.empty());
  CHECK(c->recorded[0].subject.find("\"n\"") != std::string::npos);
  CHECK(!c->recorded[0].detail.empty());

  // unrelated checks stay green under the same defect
  const SuiteReport others = run_suite(opts, {"tree-poly-edge-recursion"});
  CHECK(others.passed());
}
