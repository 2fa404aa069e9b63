#pragma once

#include "chromagraph/graph.hpp"
#include "chromagraph/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace chromagraph {

/// Edge sets of the simple cycles of g, each with its smallest edge index
/// removed. Sorted by bit pattern.
std::vector<EdgeSubset> broken_circuits(const Graph& g);

/// Downward-closed family of edge sets containing no broken circuit.
struct BrokenCircuitComplex {
  Graph host;
  std::vector<EdgeSubset> members;  // sorted by bit pattern
};

/// Materializes the full complex. Requires edge_count <= 24; every member is
/// verified acyclic before returning.
BrokenCircuitComplex bcc_members(const Graph& g);

/// Membership test that avoids materializing the complex.
class BrokenCircuitPredicate {
 public:
  explicit BrokenCircuitPredicate(const Graph& g);
  bool operator()(EdgeSubset s) const;

 private:
  std::vector<EdgeSubset> broken_;
};

/// Members maximal under inclusion. Also checks the structural description
/// (spanning forests whose components match the host's) and throws
/// std::logic_error if the two characterizations ever disagree.
std::vector<EdgeSubset> maximal_members(const BrokenCircuitComplex& cx);
std::vector<EdgeSubset> maximal_members(const Graph& g);

/// Unique cycle in forest + edge, as an edge set including the extra edge;
/// nullopt when the endpoints of the extra edge lie in different components
/// of the forest. The edge must not belong to the forest.
std::optional<EdgeSubset> fundamental_cycle(const Graph& g, EdgeSubset forest,
                                            int edge_index);

/// Edge closes a cycle in which it is the smallest edge.
bool is_externally_active(const Graph& g, EdgeSubset forest, int edge_index);

/// Edges of g joining two different components of the spanning subgraph on
/// the selected edges.
EdgeSubset nabla(const Graph& g, EdgeSubset selected);

struct SupersetSignSum {
  BigInt signed_sum;  // sum of (-1)^(component count) over members containing the base
  std::vector<EdgeSubset> witnesses;
};

/// Sums (-1)^(number of components) over all members containing base, and
/// independently lists the maximal members T containing base that satisfy:
/// the smallest edge of nabla(base) is outside T, and every other
/// nabla(base)-edge inside T lies in the fundamental cycle (w.r.t. T) of some
/// smaller nabla(base)-edge outside T. Throws std::logic_error unless
/// signed_sum == (-1)^(components of g) * witnesses.size().
SupersetSignSum superset_sign_sum(const BrokenCircuitComplex& cx,
                                  EdgeSubset base);
SupersetSignSum superset_sign_sum(const Graph& g, EdgeSubset base);

/// For a member with nonempty nabla: adding the smallest nabla-edge stays in
/// the complex. Returns the truth value rather than asserting.
bool min_nabla_extension_is_member(const BrokenCircuitComplex& cx,
                                   EdgeSubset member);
bool min_nabla_extension_is_member(const Graph& g, EdgeSubset member);

/// All pairs (E, T) where E = nabla(A) for a member A spanning k components
/// and T is a maximal member containing A satisfying the activity condition
/// above. Sorted; pairs are distinct and number (-1)^(components + k) times
/// the k-th coefficient of the tree polynomial.
std::vector<std::pair<EdgeSubset, EdgeSubset>> cutset_forest_pairs(
    const BrokenCircuitComplex& cx, int k);
std::vector<std::pair<EdgeSubset, EdgeSubset>> cutset_forest_pairs(
    const Graph& g, int k);

}  // namespace chromagraph
