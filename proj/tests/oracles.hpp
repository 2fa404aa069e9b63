#pragma once

// Slow reference implementations, written independently of the library
// internals so that agreement is meaningful.

#include "chromagraph/graph.hpp"
#include "chromagraph/rational.hpp"

#include <vector>

namespace testoracle {

/// Number of proper colourings counted by trying every assignment.
long long count_colourings(const chromagraph::Graph& g, int colours);

/// Every labelled tree on n vertices, decoded from Pruefer sequences.
/// n = 1 gives the single vertex, n = 2 the single edge.
std::vector<chromagraph::Graph> all_trees(int n);

/// Weighted colouring count: proper colourings with colours 1..num_colours
/// where the weights coloured i sum to target[i]. Plain nested loops.
long long count_weighted_colourings(const chromagraph::WeightedGraph& g,
                                    const std::vector<int>& target);

}  // namespace testoracle
