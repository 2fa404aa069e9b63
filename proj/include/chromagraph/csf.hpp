#pragma once

#include "chromagraph/bcc.hpp"
#include "chromagraph/graph.hpp"
#include "chromagraph/symfun.hpp"

namespace chromagraph {

/// Which edge a deletion-contraction recursion removes first.
enum class EdgeChoice { highest_index, lowest_index };

/// Chromatic symmetric function in the power-sum basis, summed over the
/// members of the broken-circuit complex: each member contributes its
/// component-size partition with sign (-1)^(edges used). Unit weights only.
SymFun csf_broken_circuit(const BrokenCircuitComplex& cx);
SymFun csf_broken_circuit(const Graph& g);

/// Chromatic symmetric function of a vertex-weighted graph by edge recursion
/// (delete minus contract, with contraction adding endpoint weights); an
/// edgeless graph contributes the power-sum product of its weights. Results
/// are memoized process-wide.
SymFun csf_deletion_contraction(const WeightedGraph& g,
                                EdgeChoice choice = EdgeChoice::highest_index);
SymFun csf_deletion_contraction(const Graph& g,
                                EdgeChoice choice = EdgeChoice::highest_index);

/// Number of proper colourings with colours 1..len(shape) where the vertex
/// weights colored i sum to shape_i; this is the coefficient of the leading
/// monomial of that shape. The shape must partition the total weight.
Rational csf_colouring_oracle(const WeightedGraph& g, const Partition& shape);

}  // namespace chromagraph
