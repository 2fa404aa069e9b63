#include "chromagraph/graphpoly.hpp"

#include "chromagraph/graph.hpp"
#include "chromagraph/symfun.hpp"
#include "chromagraph/unipoly.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <stdexcept>
#include <vector>

using namespace chromagraph;

namespace {

const Graph& diamond() {
  static const Graph g(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
  return g;
}

}  // namespace

TEST_CASE("chromatic polynomial matches brute-force colouring counts") {
  const std::vector<Graph> graphs = {
      Graph(0, {}),       Graph(3, {}),    path_graph(4), cycle_graph(5),
      complete_graph(4),  star_graph(5),   diamond(),
      Graph(5, {{0, 1}, {1, 2}, {0, 2}, {3, 4}})};
  for (const Graph& g : graphs) {
    const UniPoly chi = chromatic_poly(g);
    CHECK(chi.degree() == g.vertex_count());
    for (int x = 0; x <= 4; ++x)
      CHECK(chi.evaluate(x) == Rational(testoracle::count_colourings(g, x)));
    CHECK(chi == chromatic_poly_weighted(WeightedGraph(g)));
    CHECK(chi == chi_via_lattice(g));
  }
  // weights do not influence the chromatic polynomial
  CHECK(chromatic_poly_weighted(WeightedGraph(path_graph(3), {4, 1, 2})) ==
        chromatic_poly(path_graph(3)));
}

TEST_CASE("tree polynomial closed forms") {
  CHECK(tree_poly_dc(complete_graph(3)) == UniPoly::from_coeffs({0, 2, -1}));
  CHECK(tree_poly_dc(cycle_graph(4)) == UniPoly::from_coeffs({0, 3, -3, 1}));
  // x (2 - x)^2 for the diamond
  CHECK(tree_poly_dc(diamond()) == UniPoly::from_coeffs({0, 4, -4, 1}));
  CHECK(tree_poly_dc(Graph(0, {})) == UniPoly::one());
  CHECK(tree_poly_dc(Graph(2, {})) == UniPoly::from_coeffs({0, 0, 1}));

  // every tree collapses to x, regardless of shape
  for (int n = 1; n <= 6; ++n)
    for (const Graph& t : testoracle::all_trees(n))
      CHECK(tree_poly_dc(t) == UniPoly::from_coeffs({0, 1}));

  // forests give x^(number of components)
  const Graph forest(6, {{0, 1}, {1, 2}, {3, 4}});
  CHECK(tree_poly_dc(forest) == UniPoly::from_coeffs({0, 0, 0, 1}));
}

TEST_CASE("tree polynomial routes agree") {
  const std::vector<Graph> graphs = {path_graph(4),    cycle_graph(5),
                                     complete_graph(4), diamond(),
                                     Graph(5, {{0, 1}, {1, 2}, {0, 2}, {3, 4}})};
  for (const Graph& g : graphs) {
    const UniPoly tau = tree_poly_dc(g);
    CHECK(tau == tree_poly_dc(g, EdgeChoice::lowest_index));
    CHECK(tau == tree_poly_from_chromatic(chromatic_poly(g), g.vertex_count()));
    CHECK(tau == tree_poly_via_basis(WeightedGraph(g), GraphFamily::paths()));
    CHECK(tau == tree_poly_via_basis(WeightedGraph(g), GraphFamily::stars()));
    CHECK(tau.evaluate(1) == 1);
  }
  CHECK_THROWS_AS(
      tree_poly_via_basis(WeightedGraph(path_graph(3)), GraphFamily::cycles()),
      std::invalid_argument);

  // the deliberate sign defect flips odd coefficients and breaks agreement
  const UniPoly chi = chromatic_poly(complete_graph(3));
  CHECK(detail::tree_from_chromatic_impl(chi, 3, true) !=
        tree_poly_dc(complete_graph(3)));
}

TEST_CASE("weighted tree polynomial carries the excess as a factor") {
  const WeightedGraph w(path_graph(3), {2, 1, 3});
  const UniPoly tau_w = tree_poly_weighted(w);
  const UniPoly base = tree_poly_dc(path_graph(3));
  CHECK(tau_w == base * x_power_shifted(0, w.excess_weight()));
  // the zero at x = 1 has order exactly the excess weight
  const auto [reduced, remainder] =
      tau_w.divmod(x_power_shifted(0, w.excess_weight()));
  CHECK(remainder.is_zero());
  CHECK(reduced.evaluate(1) == 1);

  // single heavy vertex: x (x-1)^(w-1)
  CHECK(tree_poly_weighted(WeightedGraph(Graph(1, {}), {3})) ==
        UniPoly::from_coeffs({0, 1, -2, 1}));
  CHECK(tau_p_lambda(Partition({3})) == UniPoly::from_coeffs({0, 1, -2, 1}));
  CHECK(tau_p_lambda(Partition({2, 1})) == x_power_shifted(2, 1));
  CHECK(tau_p_lambda(Partition()) == UniPoly::one());
}

TEST_CASE("reciprocity transform swaps chromatic and tree polynomials") {
  const std::vector<WeightedGraph> subjects = {
      WeightedGraph(complete_graph(3)),
      WeightedGraph(path_graph(4)),
      WeightedGraph(path_graph(2), {2, 1}),
      WeightedGraph(cycle_graph(4), {1, 2, 1, 3}),
  };
  for (const WeightedGraph& w : subjects) {
    const int total = w.total_weight();
    const UniPoly chi = chromatic_poly_weighted(w);
    const UniPoly tau = tree_poly_weighted(w);
    CHECK(reciprocity_transform(chi, total,
                                ReciprocityDirection::chromatic_to_tree) ==
          tau);
    CHECK(reciprocity_transform(tau, total,
                                ReciprocityDirection::tree_to_chromatic) ==
          chi);
  }
}

TEST_CASE("clique gluing divides out the shared clique") {
  const Graph k3 = complete_graph(3);
  // two triangles along an edge form the diamond
  CHECK(clique_glue_tau(k3, k3, {0, 1}, {0, 1}) == tree_poly_dc(diamond()));
  // vertex gluing of paths stays a tree
  CHECK(clique_glue_tau(path_graph(3), path_graph(2), {2}, {0}) ==
        UniPoly::from_coeffs({0, 1}));
  // disjoint "gluing" along the empty clique multiplies
  CHECK(clique_glue_tau(k3, path_graph(2), {}, {}) ==
        tree_poly_dc(k3) * tree_poly_dc(path_graph(2)));
}

TEST_CASE("signed colouring evaluation") {
  for (const Graph& g :
       {path_graph(2), complete_graph(3), cycle_graph(4), diamond()}) {
    const UniPoly tau = tree_poly_dc(g);
    for (int x = 0; x <= 5; ++x)
      CHECK(Rational(signed_forest_colouring_eval(g, x)) == tau.evaluate(x));
  }
  CHECK_THROWS_AS(signed_forest_colouring_eval(path_graph(2), -1),
                  std::invalid_argument);
}

TEST_CASE("contraction lattice structure") {
  const ContractionLattice k3 = ContractionLattice::build(complete_graph(3));
  CHECK(k3.elements().size() == 5);  // 4 singleton-refinements plus the top
  CHECK(k3.elements()[0] == VertexPartition::singletons(3));
  const int top = k3.index_of(VertexPartition(3, {{0, 1, 2}}));
  REQUIRE(top >= 0);
  CHECK(k3.mobius(k3.bottom(), top) == 2);
  CHECK(k3.mobius(k3.bottom(), k3.bottom()) == 1);
  CHECK(k3.leq(k3.bottom(), top));
  CHECK(!k3.leq(top, k3.bottom()));

  // the path is missing the non-connected pairing {0,2}
  const ContractionLattice p3 = ContractionLattice::build(path_graph(3));
  CHECK(p3.elements().size() == 4);
  CHECK(p3.index_of(VertexPartition(3, {{0, 2}, {1}})) == -1);
  CHECK(p3.mobius(p3.bottom(),
                  p3.index_of(VertexPartition(3, {{0, 1, 2}}))) == 1);

  CHECK_THROWS_AS(ContractionLattice::build(complete_graph(9)),
                  std::invalid_argument);
}

TEST_CASE("lattice polynomials") {
  for (const Graph& g : {path_graph(4), complete_graph(4), cycle_graph(4),
                         Graph(4, {{0, 1}, {2, 3}})}) {
    const ContractionLattice lat = ContractionLattice::build(g);
    CHECK(chi_via_lattice(lat) == chromatic_poly(g));
    CHECK(tau_sigma(lat, VertexPartition::singletons(g.vertex_count())) ==
          tree_poly_dc(g));

    // Mobius inversion: summing tau over everything above pi telescopes to a
    // single binomial-type term.
    const int n = g.vertex_count();
    for (int pi = 0; pi < static_cast<int>(lat.elements().size()); ++pi) {
      UniPoly sum;
      for (int sigma = 0; sigma < static_cast<int>(lat.elements().size());
           ++sigma)
        if (lat.leq(pi, sigma)) sum += tau_sigma(lat, lat.elements()[sigma]);
      const int blocks = lat.elements()[pi].block_count();
      CHECK(sum == x_power_shifted(blocks, n - blocks));
    }
  }
}
