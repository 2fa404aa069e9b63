#pragma once

#include "chromagraph/bcc.hpp"
#include "chromagraph/csf.hpp"
#include "chromagraph/graph.hpp"
#include "chromagraph/symfun.hpp"
#include "chromagraph/unipoly.hpp"

#include <vector>

namespace chromagraph {

/// Chromatic polynomial via the signed count of broken-circuit-free edge
/// sets: the coefficient of x^(n-j) collects (-1)^j over members with j
/// edges. Unit weights only.
UniPoly chromatic_poly(const BrokenCircuitComplex& cx);
UniPoly chromatic_poly(const Graph& g);

/// Chromatic polynomial of a weighted graph: the power-sum length collapse of
/// its deletion-contraction expansion. Weights never change the answer, and
/// the result is asserted equal to chromatic_poly of the underlying graph.
UniPoly chromatic_poly_weighted(const WeightedGraph& g);

namespace detail {
/// Coefficient transform behind tree_poly_from_chromatic; flip_sign negates
/// the alternating prefactor and exists for defect-injection tests only.
UniPoly tree_from_chromatic_impl(const UniPoly& chi, int n, bool flip_sign);
}  // namespace detail

/// Tree polynomial obtained from the chromatic polynomial of a graph on n
/// vertices: the x^k coefficient is (-1)^(n+k) times the binomial-weighted
/// sum of the chromatic coefficients.
UniPoly tree_poly_from_chromatic(const UniPoly& chi, int n);

/// Tree polynomial by edge recursion: removing an edge subtracts (x-1) times
/// the contraction; an edgeless graph on n vertices yields x^n. Memoized
/// process-wide.
UniPoly tree_poly_dc(const Graph& g,
                     EdgeChoice choice = EdgeChoice::highest_index);

/// Tree polynomial read off a tree-family expansion: expand the chromatic
/// symmetric function over the family and collapse by partition length. The
/// family must consist of trees (member n has n vertices).
UniPoly tree_poly_via_basis(const WeightedGraph& g, const GraphFamily& family);
/// Same, but reusing a registry; the family behind the basis is validated
/// and its registered degree extended as needed.
UniPoly tree_poly_via_basis(const WeightedGraph& g, BasisRegistry& registry,
                            const BasisId& basis);

/// Tree polynomial of a weighted graph: (x-1)^(excess weight) times the tree
/// polynomial of the underlying graph.
UniPoly tree_poly_weighted(const WeightedGraph& g);

/// Tree polynomial of the edgeless weighted graph with weights lam:
/// x^(length) (x-1)^(size - length).
UniPoly tau_p_lambda(const Partition& lam);

/// The substitution p -> (x-1)^N p(x/(x-1)) swaps the chromatic and tree
/// polynomials of a weighted graph with total weight N, in both directions.
enum class ReciprocityDirection { chromatic_to_tree, tree_to_chromatic };
UniPoly reciprocity_transform(const UniPoly& p, int N,
                              ReciprocityDirection direction);

/// Tree polynomial of the clique gluing of a and b: the product of their
/// tree polynomials divided (exactly) by the tree polynomial of the shared
/// clique. Asserted against the edge recursion on the glued graph.
UniPoly clique_glue_tau(const Graph& a, const Graph& b,
                        const std::vector<int>& clique_a,
                        const std::vector<int>& clique_b);

/// Signed colouring count evaluating the tree polynomial at a nonnegative
/// integer: (-1)^n times the sum over broken-circuit-free edge sets F of
/// (-1)^(components of F) times the number of proper x-colourings of the
/// spanning forest (V, F).
BigInt signed_forest_colouring_eval(const BrokenCircuitComplex& cx, int x);
BigInt signed_forest_colouring_eval(const Graph& g, int x);

/// Connected vertex partitions of g ordered under refinement, with exact
/// Mobius values between comparable pairs. Elements are sorted finest first
/// (descending block count, then lexicographically), so index 0 is the
/// all-singletons partition.
class ContractionLattice {
 public:
  static ContractionLattice build(const Graph& g, int max_vertices = 8);

  const Graph& host() const { return host_; }
  const std::vector<VertexPartition>& elements() const { return elements_; }
  int index_of(const VertexPartition& p) const;  // -1 when absent
  bool leq(int finer, int coarser) const;
  /// Mobius value between comparable elements; zero otherwise.
  const BigInt& mobius(int finer, int coarser) const;
  int bottom() const { return 0; }

 private:
  Graph host_;
  std::vector<VertexPartition> elements_;
  std::vector<std::vector<char>> leq_;
  std::vector<std::vector<BigInt>> mobius_;
};

/// Chromatic polynomial as the Mobius-weighted sum of x^(block count) over
/// the contraction lattice.
UniPoly chi_via_lattice(const ContractionLattice& lattice);
UniPoly chi_via_lattice(const Graph& g);

/// Lattice tree polynomial based at sigma: sum over coarser partitions pi of
/// mobius(sigma, pi) x^(blocks of pi) (x-1)^(n - blocks of pi). Based at the
/// all-singletons partition it recovers the tree polynomial of the graph.
UniPoly tau_sigma(const ContractionLattice& lattice,
                  const VertexPartition& sigma);

}  // namespace chromagraph
