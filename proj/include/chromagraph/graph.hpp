#pragma once

#include "chromagraph/partition.hpp"

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace chromagraph {

/// Subset of a host graph's edge list, one bit per edge index.
using EdgeSubset = std::uint64_t;

EdgeSubset edge_subset_from_indices(const std::vector<int>& indices);
std::vector<int> edge_subset_indices(EdgeSubset s);
inline int edge_subset_size(EdgeSubset s) { return std::popcount(s); }

/// Simple undirected graph on vertices 0..n-1. Edges are stored as (u, v)
/// with u < v; the list position of an edge is its rank in the total edge
/// order used by broken-circuit computations.
class Graph {
 public:
  Graph() = default;
  Graph(int vertex_count, std::vector<std::pair<int, int>> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  std::pair<int, int> edge(int index) const;
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  bool has_edge(int u, int v) const;
  EdgeSubset full_edge_set() const;

  /// Compact serialization, suitable as a memo key; equal iff graphs equal.
  std::string canonical_key() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
};

/// Vertex-weighted graph; weights are positive integers.
class WeightedGraph {
 public:
  WeightedGraph() = default;
  explicit WeightedGraph(Graph g);  // all weights 1
  WeightedGraph(Graph g, std::vector<int> weights);

  const Graph& graph() const { return g_; }
  const std::vector<int>& weights() const { return weights_; }
  int weight(int v) const { return weights_[static_cast<std::size_t>(v)]; }
  int total_weight() const;
  /// total_weight() - vertex_count(); zero exactly for unit weights.
  int excess_weight() const;
  bool has_unit_weights() const;

  std::string canonical_key() const;

  friend bool operator==(const WeightedGraph&, const WeightedGraph&) = default;

 private:
  Graph g_;
  std::vector<int> weights_;
};

Graph delete_edge(const Graph& g, int edge_index);
/// Merges the endpoints of the edge into the smaller endpoint index, shifts
/// later vertices down by one, drops the loop, and keeps only the earliest
/// copy of any parallel edges produced.
Graph contract_edge(const Graph& g, int edge_index);

WeightedGraph delete_edge(const WeightedGraph& g, int edge_index);
/// As for Graph; the merged vertex carries the sum of the endpoint weights.
WeightedGraph contract_edge(const WeightedGraph& g, int edge_index);

struct GraphComponent {
  std::vector<int> vertices;  // ascending
  std::vector<int> edges;     // ascending edge indices
};

std::vector<GraphComponent> components(const Graph& g);
/// Components of the spanning subgraph keeping only the selected edges.
std::vector<GraphComponent> components(const Graph& g, EdgeSubset selected);
int component_count(const Graph& g, EdgeSubset selected);

/// Partition of the vertex count by component sizes of the spanning subgraph
/// with the selected edges.
Partition lambda_of(const Graph& g, EdgeSubset selected);

/// Subgraph induced by the given vertices (relabelled 0.. in ascending order
/// of the originals); surviving edges keep their relative order.
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);
WeightedGraph induced_subgraph(const WeightedGraph& g,
                               const std::vector<int>& vertices);

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);
/// Selected edges contain no cycle.
bool is_forest(const Graph& g, EdgeSubset selected);

/// All edge subsets S whose removal leaves exactly k components, i.e. the
/// spanning subgraph on E \ S has k components. Requires edge_count <= 24.
std::vector<EdgeSubset> k_cutsets(const Graph& g, int k);

Graph disjoint_union(const Graph& a, const Graph& b);

/// Identifies clique_a (in a) with clique_b (in b) pointwise. Both vertex
/// lists must induce cliques of the same size; vertices of b outside the
/// clique are appended after those of a in ascending order. Edge order:
/// all edges of a, then surviving edges of b.
Graph glue_at_clique(const Graph& a, const Graph& b,
                     const std::vector<int>& clique_a,
                     const std::vector<int>& clique_b);

Graph path_graph(int n);
Graph star_graph(int n);
/// Edges ordered around the cycle: (0,1), (1,2), ..., (n-2,n-1), (0,n-1).
Graph cycle_graph(int n);
/// Edges in lexicographic pair order.
Graph complete_graph(int n);

/// Partition of the vertex set into disjoint nonempty blocks. Canonical form:
/// each block ascending, blocks ordered by smallest element.
class VertexPartition {
 public:
  VertexPartition() = default;
  VertexPartition(int vertex_count, std::vector<std::vector<int>> blocks);
  static VertexPartition singletons(int vertex_count);

  int vertex_count() const { return n_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  int block_of(int v) const { return block_of_[static_cast<std::size_t>(v)]; }

  /// True when every block of *this lies inside a block of coarser.
  bool refines(const VertexPartition& coarser) const;

  std::string to_string() const;  // "[[0,1],[2]]"

  friend bool operator==(const VertexPartition& a, const VertexPartition& b) {
    return a.n_ == b.n_ && a.blocks_ == b.blocks_;
  }
  friend std::strong_ordering operator<=>(const VertexPartition& a,
                                          const VertexPartition& b);

 private:
  int n_ = 0;
  std::vector<std::vector<int>> blocks_;
  std::vector<int> block_of_;
};

/// Every block induces a connected subgraph of g.
bool is_connected_partition(const Graph& g, const VertexPartition& p);

/// Partition into the vertex sets of the components of the spanning subgraph
/// with the selected edges.
VertexPartition partition_from_edges(const Graph& g, EdgeSubset selected);

}  // namespace chromagraph
