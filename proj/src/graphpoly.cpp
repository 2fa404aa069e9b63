#include "chromagraph/graphpoly.hpp"

#include "chromagraph/bcc.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace chromagraph {

UniPoly chromatic_poly(const BrokenCircuitComplex& cx) {
  const int n = cx.host.vertex_count();
  std::vector<long long> signed_counts(static_cast<std::size_t>(n) + 1, 0);
  for (EdgeSubset s : cx.members) {
    const int j = edge_subset_size(s);
    signed_counts[static_cast<std::size_t>(n - j)] += (j % 2) ? -1 : 1;
  }
  std::vector<Rational> coeffs;
  coeffs.reserve(signed_counts.size());
  for (long long c : signed_counts) coeffs.emplace_back(c);
  return UniPoly(std::move(coeffs));
}

UniPoly chromatic_poly(const Graph& g) { return chromatic_poly(bcc_members(g)); }

UniPoly chromatic_poly_weighted(const WeightedGraph& g) {
  const UniPoly via_expansion =
      collapse_by_length(csf_deletion_contraction(g));
  const UniPoly plain = chromatic_poly(g.graph());
  if (via_expansion != plain)
    throw std::logic_error("chromatic routes disagree on " +
                           g.canonical_key());
  return via_expansion;
}

namespace detail {

UniPoly tree_from_chromatic_impl(const UniPoly& chi, int n, bool flip_sign) {
  if (n < 0) throw std::invalid_argument("vertex count must be >= 0");
  if (chi.degree() != n)
    throw std::invalid_argument("chromatic degree must equal vertex count");
  if (n == 0) return UniPoly::one();
  if (chi.coeff(0) != 0)
    throw std::invalid_argument("chromatic polynomial has a constant term");
  std::vector<Rational> out(static_cast<std::size_t>(n) + 1, Rational(0));
  for (int k = 1; k <= n; ++k) {
    Rational sum(0);
    for (int m = 1; m <= k; ++m)
      sum += Rational(binomial(n - m, k - m)) * chi.coeff(m);
    const int parity = (n + k + (flip_sign ? 1 : 0)) % 2;
    out[static_cast<std::size_t>(k)] = parity ? -sum : sum;
  }
  return UniPoly(std::move(out));
}

}  // namespace detail

UniPoly tree_poly_from_chromatic(const UniPoly& chi, int n) {
  return detail::tree_from_chromatic_impl(chi, n, false);
}

namespace {

UniPoly tree_dc_impl(const Graph& g, EdgeChoice choice,
                     std::unordered_map<std::string, UniPoly>& memo,
                     std::mutex& mutex) {
  if (g.edge_count() == 0) return UniPoly::monomial(g.vertex_count());
  const std::string key = g.canonical_key();
  {
    std::lock_guard<std::mutex> lock(mutex);
    const auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  const int e =
      choice == EdgeChoice::highest_index ? g.edge_count() - 1 : 0;
  UniPoly result =
      tree_dc_impl(delete_edge(g, e), choice, memo, mutex) -
      UniPoly::from_coeffs({-1, 1}) *
          tree_dc_impl(contract_edge(g, e), choice, memo, mutex);
  {
    std::lock_guard<std::mutex> lock(mutex);
    memo.emplace(key, result);
  }
  return result;
}

}  // namespace

UniPoly tree_poly_dc(const Graph& g, EdgeChoice choice) {
  static std::unordered_map<std::string, UniPoly> memo_high, memo_low;
  static std::mutex mutex_high, mutex_low;
  if (choice == EdgeChoice::highest_index)
    return tree_dc_impl(g, choice, memo_high, mutex_high);
  return tree_dc_impl(g, choice, memo_low, mutex_low);
}

UniPoly tree_poly_via_basis(const WeightedGraph& g, BasisRegistry& registry,
                            const BasisId& basis) {
  const int total = g.total_weight();
  const GraphFamily& family = registry.family(basis);
  std::string reason;
  if (!is_tree_family(family, total, &reason))
    throw std::invalid_argument("not a tree family: " + reason);
  registry.register_chromatic_basis(family, total);
  return registry.b_polynomial(csf_deletion_contraction(g), basis);
}

UniPoly tree_poly_via_basis(const WeightedGraph& g, const GraphFamily& family) {
  BasisRegistry registry;
  const BasisId basis =
      registry.register_chromatic_basis(family, g.total_weight());
  return tree_poly_via_basis(g, registry, basis);
}

UniPoly tree_poly_weighted(const WeightedGraph& g) {
  return pow(UniPoly::from_coeffs({-1, 1}), g.excess_weight()) *
         tree_poly_dc(g.graph());
}

UniPoly tau_p_lambda(const Partition& lam) {
  return x_power_shifted(lam.length(), lam.size() - lam.length());
}

UniPoly reciprocity_transform(const UniPoly& p, int N,
                              ReciprocityDirection) {
  return mobius_substitute(p, N);
}

UniPoly clique_glue_tau(const Graph& a, const Graph& b,
                        const std::vector<int>& clique_a,
                        const std::vector<int>& clique_b) {
  const Graph glued = glue_at_clique(a, b, clique_a, clique_b);
  const UniPoly shared =
      tree_poly_dc(complete_graph(static_cast<int>(clique_a.size())));
  const auto [quotient, remainder] =
      (tree_poly_dc(a) * tree_poly_dc(b)).divmod(shared);
  if (!remainder.is_zero())
    throw std::logic_error("clique quotient is not a polynomial");
  const UniPoly direct = tree_poly_dc(glued);
  if (quotient != direct)
    throw std::logic_error("clique gluing routes disagree on " +
                           glued.canonical_key());
  return quotient;
}

namespace {

long long proper_colourings(const Graph& g, int colours) {
  // Small exhaustive count over colour assignments.
  const int n = g.vertex_count();
  std::vector<std::vector<int>> earlier(static_cast<std::size_t>(n));
  for (const auto& [u, v] : g.edges())
    earlier[static_cast<std::size_t>(v)].push_back(u);
  std::vector<int> colour(static_cast<std::size_t>(n), -1);
  long long count = 0;
  std::function<void(int)> assign = [&](int v) {
    if (v == n) {
      ++count;
      return;
    }
    for (int c = 0; c < colours; ++c) {
      bool clash = false;
      for (int u : earlier[static_cast<std::size_t>(v)])
        if (colour[static_cast<std::size_t>(u)] == c) {
          clash = true;
          break;
        }
      if (clash) continue;
      colour[static_cast<std::size_t>(v)] = c;
      assign(v + 1);
      colour[static_cast<std::size_t>(v)] = -1;
    }
  };
  assign(0);
  return count;
}

/// Spanning subgraph keeping only the selected edges.
Graph spanning_by(const Graph& g, EdgeSubset selected) {
  std::vector<std::pair<int, int>> kept;
  for (int e : edge_subset_indices(selected)) kept.push_back(g.edge(e));
  return Graph(g.vertex_count(), std::move(kept));
}

}  // namespace

BigInt signed_forest_colouring_eval(const BrokenCircuitComplex& cx, int x) {
  if (x < 0) throw std::invalid_argument("colour count must be >= 0");
  const Graph& g = cx.host;
  const int n = g.vertex_count();
  BigInt total = 0;
  for (EdgeSubset s : cx.members) {
    const int comps = n - edge_subset_size(s);
    const long long colourings = proper_colourings(spanning_by(g, s), x);
    total += (comps % 2 ? -1 : 1) * BigInt(colourings);
  }
  return (n % 2) ? -total : total;
}

BigInt signed_forest_colouring_eval(const Graph& g, int x) {
  return signed_forest_colouring_eval(bcc_members(g), x);
}

ContractionLattice ContractionLattice::build(const Graph& g,
                                             int max_vertices) {
  const int n = g.vertex_count();
  if (n > max_vertices)
    throw std::invalid_argument("contraction lattice limited to " +
                                std::to_string(max_vertices) + " vertices");
  ContractionLattice lat;
  lat.host_ = g;

  std::vector<std::vector<int>> blocks;
  std::function<void(int)> place = [&](int v) {
    if (v == n) {
      VertexPartition p(n, blocks);
      if (is_connected_partition(g, p)) lat.elements_.push_back(std::move(p));
      return;
    }
    // Index loop: deeper levels may grow the vector and reallocate.
    const std::size_t present = blocks.size();
    for (std::size_t i = 0; i < present; ++i) {
      blocks[i].push_back(v);
      place(v + 1);
      blocks[i].pop_back();
    }
    blocks.push_back({v});
    place(v + 1);
    blocks.pop_back();
  };
  place(0);

  std::sort(lat.elements_.begin(), lat.elements_.end(),
            [](const VertexPartition& a, const VertexPartition& b) {
              if (a.block_count() != b.block_count())
                return a.block_count() > b.block_count();
              return a < b;
            });

  const std::size_t size = lat.elements_.size();
  lat.leq_.assign(size, std::vector<char>(size, 0));
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j)
      lat.leq_[i][j] = lat.elements_[i].refines(lat.elements_[j]) ? 1 : 0;

  // Strictly coarser elements have strictly fewer blocks, hence larger
  // indices; Mobius values therefore fill in index order.
  lat.mobius_.assign(size, std::vector<BigInt>(size, 0));
  for (std::size_t i = 0; i < size; ++i) {
    lat.mobius_[i][i] = 1;
    for (std::size_t j = i + 1; j < size; ++j) {
      if (!lat.leq_[i][j]) continue;
      BigInt acc = 0;
      for (std::size_t r = i; r < j; ++r)
        if (lat.leq_[i][r] && lat.leq_[r][j]) acc += lat.mobius_[i][r];
      lat.mobius_[i][j] = -acc;
    }
  }
  return lat;
}

int ContractionLattice::index_of(const VertexPartition& p) const {
  for (std::size_t i = 0; i < elements_.size(); ++i)
    if (elements_[i] == p) return static_cast<int>(i);
  return -1;
}

bool ContractionLattice::leq(int finer, int coarser) const {
  return leq_[static_cast<std::size_t>(finer)]
             [static_cast<std::size_t>(coarser)] != 0;
}

const BigInt& ContractionLattice::mobius(int finer, int coarser) const {
  return mobius_[static_cast<std::size_t>(finer)]
                [static_cast<std::size_t>(coarser)];
}

UniPoly chi_via_lattice(const ContractionLattice& lat) {
  UniPoly out;
  for (std::size_t j = 0; j < lat.elements().size(); ++j) {
    if (!lat.leq(0, static_cast<int>(j))) continue;
    out += UniPoly::monomial(lat.elements()[j].block_count(),
                             Rational(lat.mobius(0, static_cast<int>(j))));
  }
  return out;
}

UniPoly chi_via_lattice(const Graph& g) {
  return chi_via_lattice(ContractionLattice::build(g));
}

UniPoly tau_sigma(const ContractionLattice& lattice,
                  const VertexPartition& sigma) {
  const int base = lattice.index_of(sigma);
  if (base < 0)
    throw std::invalid_argument(
        "partition does not induce connected blocks: " + sigma.to_string());
  const int n = lattice.host().vertex_count();
  UniPoly out;
  for (std::size_t j = 0; j < lattice.elements().size(); ++j) {
    if (!lattice.leq(base, static_cast<int>(j))) continue;
    const int blocks = lattice.elements()[j].block_count();
    out += Rational(lattice.mobius(base, static_cast<int>(j))) *
           x_power_shifted(blocks, n - blocks);
  }
  return out;
}

}  // namespace chromagraph
