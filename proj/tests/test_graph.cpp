#include "chromagraph/graph.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

using namespace chromagraph;

TEST_CASE("graph construction") {
  const Graph g(3, {{2, 0}, {0, 1}});
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.edge(0) == std::pair<int, int>{0, 2});  // endpoints normalized
  CHECK(g.edge(1) == std::pair<int, int>{0, 1});  // input order kept
  CHECK(g.has_edge(1, 0));
  CHECK(g.has_edge(0, 2));
  CHECK(!g.has_edge(1, 2));
  CHECK(g.full_edge_set() == 0b11);

  CHECK_THROWS_AS(Graph(2, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(2, {{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(2, {{0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(-1, {}), std::invalid_argument);

  CHECK(Graph(0, {}).vertex_count() == 0);
  CHECK(Graph(3, {}).canonical_key() != Graph(4, {}).canonical_key());
  CHECK(Graph(3, {{0, 1}}).canonical_key() ==
        Graph(3, {{1, 0}}).canonical_key());
}

TEST_CASE("edge subsets") {
  CHECK(edge_subset_from_indices({0, 2, 5}) == 0b100101);
  CHECK(edge_subset_indices(0b100101) == std::vector<int>{0, 2, 5});
  CHECK(edge_subset_size(0b100101) == 3);
  CHECK(edge_subset_from_indices({}) == 0);
  CHECK_THROWS_AS(edge_subset_from_indices({64}), std::invalid_argument);
  CHECK_THROWS_AS(edge_subset_from_indices({-1}), std::invalid_argument);
}

TEST_CASE("weighted graph") {
  const WeightedGraph unit{Graph(3, {{0, 1}})};
  CHECK(unit.has_unit_weights());
  CHECK(unit.total_weight() == 3);
  CHECK(unit.excess_weight() == 0);

  const WeightedGraph w(Graph(2, {{0, 1}}), {2, 1});
  CHECK(!w.has_unit_weights());
  CHECK(w.total_weight() == 3);
  CHECK(w.excess_weight() == 1);
  CHECK(w.weight(0) == 2);
  CHECK(w.canonical_key() != WeightedGraph(Graph(2, {{0, 1}})).canonical_key());

  CHECK_THROWS_AS(WeightedGraph(Graph(2, {}), {1}), std::invalid_argument);
  CHECK_THROWS_AS(WeightedGraph(Graph(1, {}), {0}), std::invalid_argument);
}

TEST_CASE("deletion and contraction") {
  // triangle: contracting any edge closes the parallel pair into one edge
  const Graph k3 = complete_graph(3);
  const Graph contracted = contract_edge(k3, 0);
  CHECK(contracted.vertex_count() == 2);
  CHECK(contracted.edge_count() == 1);

  const Graph deleted = delete_edge(k3, 1);
  CHECK(deleted.vertex_count() == 3);
  CHECK(deleted.edge_count() == 2);
  CHECK(deleted.edge(0) == std::pair<int, int>{0, 1});
  CHECK(deleted.edge(1) == std::pair<int, int>{1, 2});

  const WeightedGraph wk3{k3};
  const WeightedGraph wc = contract_edge(wk3, 0);
  CHECK(wc.weights() == std::vector<int>{2, 1});

  // vertices above the merged pair shift down by one
  const Graph p4 = path_graph(4);
  const Graph c = contract_edge(p4, 1);  // contract (1,2)
  CHECK(c.vertex_count() == 3);
  CHECK(c.edge(0) == std::pair<int, int>{0, 1});
  CHECK(c.edge(1) == std::pair<int, int>{1, 2});

  CHECK_THROWS_AS(delete_edge(k3, 3), std::invalid_argument);
  CHECK_THROWS_AS(contract_edge(k3, -1), std::invalid_argument);
}

TEST_CASE("components and induced subgraphs") {
  const Graph g(5, {{0, 1}, {1, 2}, {3, 4}});
  const auto comps = components(g);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].vertices == std::vector<int>{0, 1, 2});
  CHECK(comps[0].edges == std::vector<int>{0, 1});
  CHECK(comps[1].vertices == std::vector<int>{3, 4});

  CHECK(component_count(g, 0) == 5);
  CHECK(component_count(g, g.full_edge_set()) == 2);
  CHECK(component_count(g, edge_subset_from_indices({0})) == 4);
  CHECK(lambda_of(g, g.full_edge_set()) == Partition({3, 2}));
  CHECK(lambda_of(g, 0) == Partition({1, 1, 1, 1, 1}));

  const Graph sub = induced_subgraph(g, {1, 2, 4});
  CHECK(sub.vertex_count() == 3);
  CHECK(sub.edge_count() == 1);
  CHECK(sub.edge(0) == std::pair<int, int>{0, 1});
}

TEST_CASE("connectivity predicates") {
  CHECK(is_connected(path_graph(4)));
  CHECK(!is_connected(Graph(3, {{0, 1}})));
  CHECK(is_connected(Graph(1, {})));
  CHECK(is_tree(star_graph(5)));
  CHECK(!is_tree(cycle_graph(4)));
  CHECK(!is_tree(Graph(2, {})));
  CHECK(is_forest(cycle_graph(4), edge_subset_from_indices({0, 1, 2})));
  CHECK(!is_forest(cycle_graph(3), cycle_graph(3).full_edge_set()));

  for (const Graph& t : testoracle::all_trees(5)) {
    CHECK(is_tree(t));
    CHECK(t.edge_count() == 4);
  }
  CHECK(testoracle::all_trees(5).size() == 125);  // 5^3 labelled trees
}

TEST_CASE("standard graphs") {
  CHECK(path_graph(1).edge_count() == 0);
  CHECK(path_graph(4).edges() ==
        std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});
  CHECK(star_graph(4).edges() ==
        std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {0, 3}});
  CHECK(cycle_graph(4).edges() ==
        std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  CHECK(complete_graph(4).edge_count() == 6);
  // the 3-cycle is a triangle, though its edge order differs from K3's
  const Graph c3 = cycle_graph(3);
  CHECK(c3 != complete_graph(3));
  for (auto [u, v] : c3.edges()) CHECK(complete_graph(3).has_edge(u, v));
}

TEST_CASE("k_cutsets") {
  const Graph p3 = path_graph(3);
  // removing nothing leaves 1 component; removing one edge leaves 2
  CHECK(k_cutsets(p3, 1) == std::vector<EdgeSubset>{0});
  CHECK(k_cutsets(p3, 2).size() == 2);
  CHECK(k_cutsets(p3, 3) == std::vector<EdgeSubset>{0b11});
  const Graph k4 = complete_graph(4);
  for (EdgeSubset s : k_cutsets(k4, 2))
    CHECK(component_count(k4, k4.full_edge_set() & ~s) == 2);
}

TEST_CASE("disjoint union and clique gluing") {
  const Graph u = disjoint_union(path_graph(2), path_graph(3));
  CHECK(u.vertex_count() == 5);
  CHECK(u.edge_count() == 3);
  CHECK(u.has_edge(0, 1));
  CHECK(u.has_edge(2, 3));
  CHECK(u.has_edge(3, 4));

  // gluing two triangles along an edge gives the diamond
  const Graph k3 = complete_graph(3);
  const Graph diamond = glue_at_clique(k3, k3, {0, 1}, {0, 1});
  CHECK(diamond.vertex_count() == 4);
  CHECK(diamond.edge_count() == 5);
  CHECK(!diamond.has_edge(2, 3));

  // vertex gluing concatenates
  const Graph chain = glue_at_clique(path_graph(2), path_graph(2), {1}, {0});
  CHECK(chain.vertex_count() == 3);
  CHECK(is_tree(chain));

  CHECK_THROWS_AS(glue_at_clique(path_graph(3), k3, {0, 2}, {0, 1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(glue_at_clique(k3, k3, {0, 1}, {0}), std::invalid_argument);
}

TEST_CASE("vertex partitions") {
  const VertexPartition p(4, {{2, 0}, {1}, {3}});
  CHECK(p.block_count() == 3);
  CHECK(p.blocks()[0] == std::vector<int>{0, 2});  // canonical form
  CHECK(p.block_of(2) == 0);
  CHECK(p.block_of(1) == 1);
  CHECK(p.to_string() == "[[0,2],[1],[3]]");

  const VertexPartition s = VertexPartition::singletons(4);
  CHECK(s.block_count() == 4);
  CHECK(s.refines(p));
  CHECK(!p.refines(s));
  CHECK(p.refines(VertexPartition(4, {{0, 1, 2, 3}})));
  CHECK(p.refines(p));

  CHECK_THROWS_AS(VertexPartition(3, {{0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(VertexPartition(3, {{0, 1}, {1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(VertexPartition(3, {{0}, {}, {1, 2}}),
                  std::invalid_argument);

  const Graph p4 = path_graph(4);
  CHECK(is_connected_partition(p4, VertexPartition(4, {{0, 1}, {2, 3}})));
  CHECK(!is_connected_partition(p4, VertexPartition(4, {{0, 2}, {1}, {3}})));
  CHECK(partition_from_edges(p4, edge_subset_from_indices({0, 2})) ==
        VertexPartition(4, {{0, 1}, {2, 3}}));
}
