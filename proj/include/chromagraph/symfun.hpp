#pragma once

#include "chromagraph/graph.hpp"
#include "chromagraph/partition.hpp"
#include "chromagraph/ratmat.hpp"
#include "chromagraph/unipoly.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

namespace chromagraph {

enum class BasisKind { power_sum, monomial, chromatic_family };

struct BasisId {
  BasisKind kind = BasisKind::power_sum;
  int family_index = -1;  // registry slot; -1 for power_sum or detached names
  std::string name = "p";
  friend bool operator==(const BasisId&, const BasisId&) = default;
};

/// Finite linear combination of basis elements indexed by partitions, with
/// exact rational coefficients. Zero coefficients are never stored.
class SymFun {
 public:
  SymFun() = default;
  explicit SymFun(BasisId basis) : basis_(std::move(basis)) {}

  static SymFun zero(BasisId basis = BasisId{});
  static SymFun one(BasisId basis = BasisId{});
  /// The single power-sum generator product indexed by the partition.
  static SymFun power_sum(const Partition& p);

  const BasisId& basis() const { return basis_; }
  const std::map<Partition, Rational>& coeffs() const { return coeffs_; }
  Rational coeff(const Partition& p) const;
  void set_coeff(const Partition& p, Rational c);
  void add_term(const Partition& p, const Rational& c);

  bool is_zero() const { return coeffs_.empty(); }
  /// Largest partition size present; -1 when zero.
  int top_degree() const;
  bool is_homogeneous() const;
  /// Splits into homogeneous layers keyed by degree.
  std::map<int, SymFun> split_degrees() const;
  Rational coefficient_sum() const;

  SymFun& operator+=(const SymFun& rhs);
  SymFun& operator-=(const SymFun& rhs);
  SymFun& operator*=(const Rational& c);
  friend SymFun operator+(SymFun a, const SymFun& b) { return a += b; }
  friend SymFun operator-(SymFun a, const SymFun& b) { return a -= b; }
  friend SymFun operator*(const Rational& c, SymFun f) { return f *= c; }
  friend bool operator==(const SymFun&, const SymFun&) = default;

 private:
  BasisId basis_;
  std::map<Partition, Rational> coeffs_;
};

/// Product in the power-sum basis: indices merge as multisets.
SymFun p_multiply(const SymFun& a, const SymFun& b);

/// Image under b_i -> x for every basis element of length i: the coefficient
/// of x^k collects all coefficients of partitions with k parts.
UniPoly collapse_by_length(const SymFun& f);

/// Expands a power-sum expression into monomials in num_vars variables and
/// reports, for each exponent shape, the coefficient of the leading monomial
/// x1^(mu1) x2^(mu2) ... Requires num_vars >= top degree so that no shape is
/// truncated away.
std::map<Partition, Rational> p_to_monomials(const SymFun& f, int num_vars);

/// Family of vertex-weighted graphs indexed by total weight, generated on
/// demand; generators must be deterministic.
class GraphFamily {
 public:
  using Generator = std::function<WeightedGraph(int)>;

  GraphFamily() = default;
  GraphFamily(std::string name, Generator generator);

  const std::string& name() const { return name_; }
  WeightedGraph member(int n) const;

  static GraphFamily paths();
  static GraphFamily stars();
  /// K1 and K2 below three vertices, cycles from three on.
  static GraphFamily cycles();
  static GraphFamily cliques();
  /// One vertex of weight n: the power-sum generators themselves.
  static GraphFamily single_vertices();
  /// Uniform labelled trees drawn from the seed; deterministic per (seed, n).
  static GraphFamily random_trees(std::uint64_t seed);
  static GraphFamily from_edge_lists(
      std::string name,
      std::map<int, std::vector<std::pair<int, int>>> edge_lists);

 private:
  std::string name_;
  Generator generator_;
};

/// Members 1..up_to are unweighted trees on n vertices.
bool is_tree_family(const GraphFamily& family, int up_to,
                    std::string* reason = nullptr);

/// Holds registered graph families together with exact transition matrices
/// between their expansions and the power-sum basis, one matrix per degree.
/// Reads are concurrent; registration is serialized and idempotent.
class BasisRegistry {
 public:
  static BasisId power_sum_basis() { return BasisId{}; }

  /// Validates members 1..max_degree (connected, total weight n), expands
  /// each through the deletion-contraction engine, and inverts the resulting
  /// per-degree matrices. Registering an already-known family name extends
  /// its degree when needed and is otherwise a no-op. Throws
  /// std::invalid_argument for invalid members and std::logic_error if a
  /// transition matrix fails to invert.
  BasisId register_chromatic_basis(const GraphFamily& family, int max_degree);

  BasisId find(const std::string& name) const;
  int registered_degree(const BasisId& basis) const;
  const GraphFamily& family(const BasisId& basis) const;

  /// Rewrites f in the target basis. Throws std::out_of_range when a degree
  /// of f exceeds the registered degree of either basis involved.
  SymFun change_basis(const SymFun& f, const BasisId& to) const;

  /// Substitutes the family expansion for each power-sum generator product:
  /// coefficient vectors are pushed through the family-to-power-sum matrix.
  /// Input and output both live in the power-sum basis.
  SymFun reciprocity_map(const SymFun& f_power_sum,
                         const BasisId& family) const;

  /// collapse_by_length of change_basis(f, basis).
  UniPoly b_polynomial(const SymFun& f, const BasisId& basis) const;

 private:
  struct Entry {
    GraphFamily family;
    int degree = -1;
    std::vector<RationalMatrix> to_power;    // [d]: family coords -> p coords
    std::vector<RationalMatrix> from_power;  // [d]: p coords -> family coords
  };

  const Entry& entry(const BasisId& basis) const;  // caller holds the lock
  SymFun apply_per_degree(const std::vector<RationalMatrix>& mats,
                          const SymFun& f, BasisId out_basis,
                          const std::string& what) const;

  mutable std::shared_mutex mutex_;
  std::vector<Entry> entries_;
};

}  // namespace chromagraph
