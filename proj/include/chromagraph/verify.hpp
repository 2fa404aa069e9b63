#pragma once

#include "chromagraph/graph.hpp"

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace chromagraph {

/// All 2^C(n,2) labelled simple graphs on n vertices; edges in lexicographic
/// pair order. n must be between 0 and 7.
void enumerate_labelled_graphs(int n,
                               const std::function<void(const Graph&)>& visit);

/// Every positive weighting of g with total weight at most max_total, in
/// lexicographic order of the weight vectors.
void enumerate_weightings(
    const Graph& g, int max_total,
    const std::function<void(const WeightedGraph&)>& visit);

struct SuiteOptions {
  int n_max = 6;                // unweighted sweep bound (at most 7)
  int weighted_vertex_max = 4;  // weighted sweep vertex bound
  int weight_excess_max = 3;    // total-weight headroom above the vertex count
  std::optional<int> weighted_total_max;  // overrides the excess rule when set
  int combinatorial_n_max = 5;  // pairing / signed-count / lattice sweeps
  int eval_x_max = 4;           // colour counts for evaluation checks
  int degree_max = 6;           // involution and generator sweeps
  bool include_weighted = true;
  int max_recorded_failures = 10;
  /// Negates the alternating prefactor inside the chromatic-to-tree
  /// coefficient transform, to demonstrate that the suite catches defects.
  bool mutate_tree_formula_sign = false;
};

struct CheckFailure {
  std::string subject;  // offending graph (JSON) or instance description
  std::string detail;   // expected vs actual
};

struct CheckResult {
  std::string id;
  std::string description;
  long long instances = 0;
  long long failures = 0;
  std::vector<CheckFailure> recorded;  // capped at max_recorded_failures
};

struct SuiteReport {
  SuiteOptions options;
  std::vector<CheckResult> checks;
  std::vector<std::string> missing;  // requested checks that never ran
  long long total_instances = 0;
  long long total_failures = 0;
  double elapsed_ms = 0.0;

  bool passed() const { return total_failures == 0 && missing.empty(); }
  const CheckResult* find(const std::string& id) const;
};

/// id -> description of every check the full suite runs, in report order.
const std::vector<std::pair<std::string, std::string>>& required_checks();

SuiteReport run_suite(const SuiteOptions& options = {});
/// Restricts the suite to the listed check ids.
SuiteReport run_suite(const SuiteOptions& options,
                      const std::vector<std::string>& only_ids);

}  // namespace chromagraph
