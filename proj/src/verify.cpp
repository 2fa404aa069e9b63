#include "chromagraph/verify.hpp"

#include "chromagraph/bcc.hpp"
#include "chromagraph/csf.hpp"
#include "chromagraph/graphpoly.hpp"
#include "chromagraph/io.hpp"
#include "chromagraph/partition.hpp"
#include "chromagraph/ratmat.hpp"
#include "chromagraph/symfun.hpp"
#include "chromagraph/unipoly.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <exception>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace chromagraph {

void enumerate_labelled_graphs(
    int n, const std::function<void(const Graph&)>& visit) {
  if (n < 0 || n > 7)
    throw std::invalid_argument("labelled enumeration supports 0..7 vertices");
  std::vector<std::pair<int, int>> all_pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) all_pairs.push_back({u, v});
  const std::uint64_t limit = std::uint64_t{1} << all_pairs.size();
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < all_pairs.size(); ++i)
      if (mask >> i & 1) edges.push_back(all_pairs[i]);
    visit(Graph(n, std::move(edges)));
  }
}

void enumerate_weightings(
    const Graph& g, int max_total,
    const std::function<void(const WeightedGraph&)>& visit) {
  const int n = g.vertex_count();
  if (max_total < n) return;
  std::vector<int> w(static_cast<std::size_t>(n), 1);
  std::function<void(int, int)> fill = [&](int v, int budget) {
    if (v == n) {
      visit(WeightedGraph(g, w));
      return;
    }
    const int slack = budget - (n - v);  // later vertices need 1 each
    for (int wv = 1; wv <= 1 + slack; ++wv) {
      w[static_cast<std::size_t>(v)] = wv;
      fill(v + 1, budget - wv);
    }
    w[static_cast<std::size_t>(v)] = 1;
  };
  fill(0, max_total);
}

const std::vector<std::pair<std::string, std::string>>& required_checks() {
  static const std::vector<std::pair<std::string, std::string>> table = {
      {"csf-engines-agree",
       "broken-circuit expansion equals the deletion-contraction expansion"},
      {"csf-recursion-order-independent",
       "deletion-contraction result does not depend on the pivot edge"},
      {"chromatic-sum-vanishes",
       "chromatic polynomial at 1 is zero with an edge present, one without"},
      {"chromatic-poly-routes-agree",
       "broken-circuit, edge-recursion, and length-collapse chromatic "
       "polynomials agree"},
      {"maximal-members-consistent",
       "maximal members are the component-preserving spanning forests and "
       "cover the complex"},
      {"tree-poly-formula-vs-recursion",
       "binomial transform of the chromatic polynomial matches the tree "
       "polynomial edge recursion"},
      {"tree-poly-family-independence",
       "tree polynomial read off a tree-family expansion is family "
       "independent"},
      {"tree-poly-at-one", "tree polynomial evaluates to one at one"},
      {"family-coefficient-sum-is-one",
       "chromatic-family expansion coefficients sum to one"},
      {"forest-tree-poly-is-x-power",
       "forests have tree polynomial x^(component count)"},
      {"tree-poly-edge-recursion",
       "tree polynomial satisfies delete minus (x-1) contract at every edge"},
      {"disjoint-union-multiplicative",
       "colouring function and both polynomials multiply over disjoint "
       "unions"},
      {"tree-glue-invariance",
       "gluing a tree at a vertex leaves the tree polynomial unchanged"},
      {"clique-glue-quotient",
       "tree polynomial of a clique gluing is the product over the clique's "
       "tree polynomial"},
      {"signed-colouring-evaluation",
       "signed coloured-forest count evaluates the tree polynomial"},
      {"pair-count-matches-coefficients",
       "cutset-forest pair counts match the signed tree polynomial "
       "coefficients"},
      {"min-extension-stays-member",
       "adding the smallest crossing edge keeps a member in the complex"},
      {"superset-sign-counts",
       "signed superset sums match the activity-selected witness counts"},
      {"lattice-chromatic",
       "Mobius sum over the connected-partition lattice gives the chromatic "
       "polynomial"},
      {"lattice-inversion",
       "based tree polynomials summed over coarsenings invert to "
       "x^blocks (x-1)^(n-blocks)"},
      {"lattice-tree-poly-matches",
       "lattice tree polynomial at the discrete partition equals the edge "
       "recursion"},
      {"weighted-chi-ignores-weights",
       "vertex weights do not change the chromatic polynomial"},
      {"csf-matches-colouring-oracle",
       "weighted expansion coefficients match a brute-force colouring count"},
      {"excess-weight-valuation",
       "weighted tree polynomial carries one factor of (x-1) per unit of "
       "excess weight"},
      {"mobius-transform-roundtrip",
       "the (x-1)^N p(x/(x-1)) substitution swaps the chromatic and weighted "
       "tree polynomials both ways"},
      {"reciprocity-involution",
       "family substitution on power sums is an involution"},
      {"collapse-multiplicative",
       "length collapse and family expansion respect products"},
      {"binomial-basis-injective",
       "the x^k (x-1)^(N-k) family is a basis and the substitution "
       "round-trips"},
      {"power-sum-generator-tree-polys",
       "edgeless weighted graphs realize x^length (x-1)^(size-length) by "
       "every route"},
  };
  return table;
}

const CheckResult* SuiteReport::find(const std::string& id) const {
  for (const auto& c : checks)
    if (c.id == id) return &c;
  return nullptr;
}

namespace {

const std::vector<std::string>& weighted_check_ids() {
  static const std::vector<std::string> ids = {
      "weighted-chi-ignores-weights", "csf-matches-colouring-oracle",
      "excess-weight-valuation", "mobius-transform-roundtrip"};
  return ids;
}

std::string graph_subject(const Graph& g) {
  return graph_to_json(WeightedGraph(g)).dump();
}

std::string graph_subject(const WeightedGraph& g) {
  return graph_to_json(g).dump();
}

class Harness {
 public:
  Harness(const SuiteOptions& opt, const std::vector<std::string>* only)
      : opt_(opt) {
    report_.options = opt;
    std::set<std::string> requested;
    if (only) {
      requested.insert(only->begin(), only->end());
    } else {
      for (const auto& [id, desc] : required_checks()) {
        if (!opt_.include_weighted) {
          const auto& w = weighted_check_ids();
          if (std::find(w.begin(), w.end(), id) != w.end()) continue;
        }
        requested.insert(id);
      }
    }
    for (const auto& [id, desc] : required_checks()) {
      if (!requested.count(id)) continue;
      requested.erase(id);
      index_[id] = report_.checks.size();
      report_.checks.push_back(CheckResult{id, desc, 0, 0, {}});
    }
    // Anything left over was asked for but is not a known check.
    for (const auto& id : requested) report_.missing.push_back(id);
  }

  SuiteReport run() {
    const auto start = std::chrono::steady_clock::now();
    sweep_unweighted();
    sweep_disjoint_unions();
    sweep_tree_gluings();
    sweep_clique_gluings();
    if (weighted_sweep_needed()) sweep_weighted();
    run_algebra_checks();
    for (const auto& c : report_.checks) {
      report_.total_instances += c.instances;
      report_.total_failures += c.failures;
      if (c.instances == 0) report_.missing.push_back(c.id);
    }
    const auto end = std::chrono::steady_clock::now();
    report_.elapsed_ms =
        std::chrono::duration<double, std::milli>(end - start).count();
    return std::move(report_);
  }

 private:
  using Lazy = std::function<std::string()>;

  bool enabled(const std::string& id) const { return index_.count(id) != 0; }

  /// An explicit request for a weighted check wins over include_weighted.
  bool weighted_sweep_needed() const {
    if (opt_.include_weighted) return true;
    const auto& w = weighted_check_ids();
    return std::any_of(w.begin(), w.end(),
                       [this](const std::string& id) { return enabled(id); });
  }

  void record(const std::string& id, bool ok, const Lazy& subject,
              const Lazy& detail) {
    const auto it = index_.find(id);
    if (it == index_.end()) return;
    CheckResult& c = report_.checks[it->second];
    ++c.instances;
    if (ok) return;
    ++c.failures;
    if (static_cast<int>(c.recorded.size()) < opt_.max_recorded_failures)
      c.recorded.push_back(CheckFailure{subject(), detail()});
  }

  /// Runs body() for one instance of the check; body returns a failure
  /// description or the empty string. Exceptions count as failures too.
  void instance(const std::string& id, const Lazy& subject,
                const std::function<std::string()>& body) {
    if (!enabled(id)) return;
    std::string detail;
    try {
      detail = body();
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    record(id, detail.empty(), subject, [&detail] { return detail; });
  }

  int weighted_total_cap(int n) const {
    return opt_.weighted_total_max ? *opt_.weighted_total_max
                                   : n + opt_.weight_excess_max;
  }

  int registry_degree_cap() const {
    int cap = std::max({opt_.n_max, opt_.degree_max, 7});
    if (opt_.include_weighted) {
      const int wn = std::min(opt_.weighted_vertex_max, opt_.n_max);
      cap = std::max(cap, weighted_total_cap(wn));
    }
    return cap;
  }

  BasisId basis(const std::string& name) {
    const auto it = bases_.find(name);
    if (it != bases_.end()) return it->second;
    GraphFamily family;
    if (name == "path")
      family = GraphFamily::paths();
    else if (name == "star")
      family = GraphFamily::stars();
    else if (name == "random-tree")
      family = GraphFamily::random_trees(0x5eed5eed);
    else
      throw std::invalid_argument("unknown suite family " + name);
    const BasisId id =
        registry_.register_chromatic_basis(family, registry_degree_cap());
    bases_[name] = id;
    return id;
  }

  /// Chromatic polynomial by plain edge recursion; independent of the
  /// broken-circuit route and of the symmetric-function collapse.
  const UniPoly& chi_recursion(const Graph& g) {
    const std::string key = g.canonical_key();
    const auto it = chi_memo_.find(key);
    if (it != chi_memo_.end()) return it->second;
    UniPoly out;
    if (g.edge_count() == 0) {
      out = UniPoly::monomial(g.vertex_count());
    } else {
      const int last = g.edge_count() - 1;
      out = chi_recursion(delete_edge(g, last)) -
            chi_recursion(contract_edge(g, last));
    }
    return chi_memo_.emplace(key, std::move(out)).first->second;
  }

  // --- unweighted sweep -----------------------------------------------

  void sweep_unweighted() {
    static const std::vector<std::string> needed = {
        "csf-engines-agree",
        "csf-recursion-order-independent",
        "chromatic-sum-vanishes",
        "chromatic-poly-routes-agree",
        "maximal-members-consistent",
        "tree-poly-formula-vs-recursion",
        "tree-poly-family-independence",
        "tree-poly-at-one",
        "family-coefficient-sum-is-one",
        "forest-tree-poly-is-x-power",
        "tree-poly-edge-recursion",
        "signed-colouring-evaluation",
        "pair-count-matches-coefficients",
        "min-extension-stays-member",
        "superset-sign-counts",
        "lattice-chromatic",
        "lattice-inversion",
        "lattice-tree-poly-matches"};
    if (std::none_of(needed.begin(), needed.end(),
                     [this](const std::string& id) { return enabled(id); }))
      return;
    for (int n = 1; n <= opt_.n_max; ++n)
      enumerate_labelled_graphs(
          n, [this](const Graph& g) { unweighted_graph_checks(g); });
  }

  void unweighted_graph_checks(const Graph& g) {
    const int n = g.vertex_count();
    const Lazy subject = [&g] { return graph_subject(g); };

    std::optional<BrokenCircuitComplex> cx_store;
    auto cx = [&]() -> const BrokenCircuitComplex& {
      if (!cx_store) cx_store = bcc_members(g);
      return *cx_store;
    };
    std::optional<SymFun> x_store;
    auto xdc = [&]() -> const SymFun& {
      if (!x_store)
        x_store = csf_deletion_contraction(g, EdgeChoice::highest_index);
      return *x_store;
    };
    std::optional<UniPoly> chi_store;
    auto chi = [&]() -> const UniPoly& {
      if (!chi_store) chi_store = chromatic_poly(cx());
      return *chi_store;
    };
    std::optional<UniPoly> tau_store;
    auto tau = [&]() -> const UniPoly& {
      if (!tau_store) tau_store = tree_poly_dc(g);
      return *tau_store;
    };

    instance("csf-engines-agree", subject, [&]() -> std::string {
      const SymFun via_bcc = csf_broken_circuit(cx());
      if (via_bcc == xdc()) return {};
      return "broken-circuit " + symfun_to_json(via_bcc).dump() +
             " vs deletion-contraction " + symfun_to_json(xdc()).dump();
    });

    instance("csf-recursion-order-independent", subject, [&]() -> std::string {
      const SymFun low = csf_deletion_contraction(g, EdgeChoice::lowest_index);
      if (low == xdc()) return {};
      return "lowest-pivot " + symfun_to_json(low).dump() +
             " vs highest-pivot " + symfun_to_json(xdc()).dump();
    });

    instance("chromatic-sum-vanishes", subject, [&]() -> std::string {
      const Rational at_one = chi().evaluate(1);
      const Rational expected = g.edge_count() > 0 ? 0 : 1;
      if (at_one == expected) return {};
      return "value at 1 is " + rational_to_string(at_one) + ", expected " +
             rational_to_string(expected);
    });

    instance("chromatic-poly-routes-agree", subject, [&]() -> std::string {
      const UniPoly& direct = chi_recursion(g);
      if (!(chi() == direct))
        return "broken-circuit " + chi().to_string() + " vs edge recursion " +
               direct.to_string();
      const UniPoly collapsed = collapse_by_length(xdc());
      if (!(chi() == collapsed))
        return "broken-circuit " + chi().to_string() + " vs length collapse " +
               collapsed.to_string();
      return {};
    });

    instance("tree-poly-formula-vs-recursion", subject, [&]() -> std::string {
      const UniPoly from_chi =
          detail::tree_from_chromatic_impl(chi(), n,
                                           opt_.mutate_tree_formula_sign);
      if (from_chi == tau()) return {};
      return "coefficient formula " + from_chi.to_string() +
             " vs edge recursion " + tau().to_string();
    });

    if (enabled("tree-poly-family-independence")) {
      for (const char* name : {"path", "star", "random-tree"}) {
        instance("tree-poly-family-independence", subject,
                 [&]() -> std::string {
                   const UniPoly via = tree_poly_via_basis(
                       WeightedGraph(g), registry_, basis(name));
                   if (via == tau()) return {};
                   return std::string(name) + " family gives " +
                          via.to_string() + " vs edge recursion " +
                          tau().to_string();
                 });
      }
    }

    instance("tree-poly-at-one", subject, [&]() -> std::string {
      const Rational at_one = tau().evaluate(1);
      if (at_one == 1) return {};
      return "value at 1 is " + rational_to_string(at_one);
    });

    if (enabled("family-coefficient-sum-is-one")) {
      for (const char* name : {"path", "star"}) {
        instance("family-coefficient-sum-is-one", subject,
                 [&]() -> std::string {
                   const SymFun in_family =
                       registry_.change_basis(xdc(), basis(name));
                   const Rational sum = in_family.coefficient_sum();
                   if (sum == 1) return {};
                   return std::string(name) + " coefficients sum to " +
                          rational_to_string(sum);
                 });
      }
    }

    if (is_forest(g, g.full_edge_set())) {
      instance("forest-tree-poly-is-x-power", subject, [&]() -> std::string {
        const int comps = component_count(g, g.full_edge_set());
        if (tau() == UniPoly::monomial(comps)) return {};
        return "got " + tau().to_string() + ", expected x^" +
               std::to_string(comps);
      });
    }

    if (enabled("tree-poly-edge-recursion")) {
      for (int e = 0; e < g.edge_count(); ++e) {
        instance("tree-poly-edge-recursion", subject, [&]() -> std::string {
          const UniPoly rhs = tree_poly_dc(delete_edge(g, e)) -
                              x_power_shifted(0, 1) *
                                  tree_poly_dc(contract_edge(g, e));
          if (tau() == rhs) return {};
          return "edge " + std::to_string(e) + ": " + tau().to_string() +
                 " vs " + rhs.to_string();
        });
      }
    }

    if (n > std::min(opt_.combinatorial_n_max, opt_.n_max)) return;

    instance("maximal-members-consistent", subject, [&]() -> std::string {
      const auto maximal = maximal_members(cx());
      for (const EdgeSubset m : cx().members) {
        const bool covered =
            std::any_of(maximal.begin(), maximal.end(),
                        [m](EdgeSubset t) { return (m & t) == m; });
        if (!covered)
          return "member " + edge_subset_to_json(m).dump() +
                 " lies in no maximal member";
      }
      return {};
    });

    if (enabled("signed-colouring-evaluation")) {
      for (int x = 0; x <= opt_.eval_x_max; ++x) {
        instance("signed-colouring-evaluation", subject, [&]() -> std::string {
          const Rational direct(signed_forest_colouring_eval(cx(), x));
          const Rational expected = tau().evaluate(x);
          if (direct == expected) return {};
          return "at x=" + std::to_string(x) + ": signed count " +
                 rational_to_string(direct) + " vs polynomial " +
                 rational_to_string(expected);
        });
      }
    }

    if (enabled("pair-count-matches-coefficients")) {
      const int comps = component_count(g, g.full_edge_set());
      for (int k = 1; k <= n; ++k) {
        instance("pair-count-matches-coefficients", subject,
                 [&]() -> std::string {
                   const auto pairs = cutset_forest_pairs(cx(), k);
                   for (std::size_t i = 1; i < pairs.size(); ++i)
                     if (!(pairs[i - 1] < pairs[i]))
                       return "pair list not strictly increasing";
                   const int sign = (comps + k) % 2 ? -1 : 1;
                   const Rational expected = Rational(sign) * tau().coeff(k);
                   if (Rational(static_cast<long long>(pairs.size())) ==
                       expected)
                     return {};
                   return "k=" + std::to_string(k) + ": " +
                          std::to_string(pairs.size()) +
                          " pairs vs signed coefficient " +
                          rational_to_string(expected);
                 });
      }
    }

    if (enabled("min-extension-stays-member") ||
        enabled("superset-sign-counts")) {
      for (const EdgeSubset m : cx().members) {
        if (nabla(g, m) != 0) {
          instance("min-extension-stays-member", subject,
                   [&]() -> std::string {
                     if (min_nabla_extension_is_member(cx(), m)) return {};
                     return "member " + edge_subset_to_json(m).dump() +
                            " plus its smallest crossing edge left the "
                            "complex";
                   });
        }
        instance("superset-sign-counts", subject, [&]() -> std::string {
          superset_sign_sum(cx(), m);  // throws on sign/witness mismatch
          return {};
        });
      }
    }

    static const std::vector<std::string> lattice_ids = {
        "lattice-chromatic", "lattice-inversion", "lattice-tree-poly-matches"};
    if (std::any_of(lattice_ids.begin(), lattice_ids.end(),
                    [this](const std::string& id) { return enabled(id); })) {
      const auto lat = ContractionLattice::build(g);

      instance("lattice-chromatic", subject, [&]() -> std::string {
        const UniPoly via = chi_via_lattice(lat);
        if (via == chi()) return {};
        return "lattice " + via.to_string() + " vs broken-circuit " +
               chi().to_string();
      });

      if (enabled("lattice-inversion")) {
        const std::size_t size = lat.elements().size();
        std::vector<UniPoly> taus(size);
        for (std::size_t j = 0; j < size; ++j)
          taus[j] = tau_sigma(lat, lat.elements()[j]);
        for (std::size_t i = 0; i < size; ++i) {
          instance("lattice-inversion", subject, [&]() -> std::string {
            UniPoly sum;
            for (std::size_t j = 0; j < size; ++j)
              if (lat.leq(static_cast<int>(i), static_cast<int>(j)))
                sum += taus[j];
            const int blocks = lat.elements()[i].block_count();
            const UniPoly expected = x_power_shifted(blocks, n - blocks);
            if (sum == expected) return {};
            return "based at " + lat.elements()[i].to_string() + ": " +
                   sum.to_string() + " vs " + expected.to_string();
          });
        }
      }

      instance("lattice-tree-poly-matches", subject, [&]() -> std::string {
        const UniPoly via = tau_sigma(lat, VertexPartition::singletons(n));
        if (via == tau()) return {};
        return "lattice " + via.to_string() + " vs edge recursion " +
               tau().to_string();
      });
    }
  }

  // --- product and gluing sweeps --------------------------------------

  void sweep_disjoint_unions() {
    if (!enabled("disjoint-union-multiplicative")) return;
    std::vector<Graph> small;
    for (int n = 1; n <= std::min(opt_.n_max, 3); ++n)
      enumerate_labelled_graphs(n,
                                [&](const Graph& g) { small.push_back(g); });
    for (const Graph& a : small)
      for (const Graph& b : small) {
        const Graph u = disjoint_union(a, b);
        const Lazy subject = [&] { return graph_subject(u); };
        instance("disjoint-union-multiplicative", subject,
                 [&]() -> std::string {
                   const SymFun xs = csf_deletion_contraction(u);
                   const SymFun prod = p_multiply(csf_deletion_contraction(a),
                                                  csf_deletion_contraction(b));
                   if (!(xs == prod))
                     return "colouring function is not the product of the "
                            "parts";
                   if (!(tree_poly_dc(u) == tree_poly_dc(a) * tree_poly_dc(b)))
                     return "tree polynomial is not the product of the parts";
                   if (!(chromatic_poly(u) ==
                         chromatic_poly(a) * chromatic_poly(b)))
                     return "chromatic polynomial is not the product of the "
                            "parts";
                   return {};
                 });
      }
  }

  void sweep_tree_gluings() {
    if (!enabled("tree-glue-invariance")) return;
    const std::vector<Graph> trees = {path_graph(2), path_graph(3),
                                      star_graph(4)};
    for (int n = 1; n <= std::min(opt_.n_max, 5); ++n)
      enumerate_labelled_graphs(n, [&](const Graph& g) {
        if (!is_connected(g)) return;
        const UniPoly base = tree_poly_dc(g);
        for (const Graph& t : trees) {
          const Graph glued = glue_at_clique(g, t, {0}, {0});
          const Lazy subject = [&] { return graph_subject(glued); };
          instance("tree-glue-invariance", subject, [&]() -> std::string {
            const UniPoly after = tree_poly_dc(glued);
            if (after == base) return {};
            return "glued " + after.to_string() + " vs host " +
                   base.to_string();
          });
        }
      });
  }

  void sweep_clique_gluings() {
    if (!enabled("clique-glue-quotient")) return;
    const int n_cap = std::min(opt_.n_max, 4);
    for (int k = 1; k <= std::min(3, n_cap); ++k) {
      std::vector<int> clique(static_cast<std::size_t>(k));
      for (int i = 0; i < k; ++i) clique[static_cast<std::size_t>(i)] = i;

      std::vector<Graph> hosts;
      for (int n = k; n <= n_cap; ++n)
        enumerate_labelled_graphs(n, [&](const Graph& g) {
          if (!is_connected(g)) return;
          for (int u = 0; u < k; ++u)
            for (int v = u + 1; v < k; ++v)
              if (!g.has_edge(u, v)) return;
          hosts.push_back(g);
        });

      for (std::size_t i = 0; i < hosts.size(); ++i)
        for (std::size_t j = i; j < hosts.size(); ++j) {
          const Graph& a = hosts[i];
          const Graph& b = hosts[j];
          const Graph glued = glue_at_clique(a, b, clique, clique);
          const Lazy subject = [&] { return graph_subject(glued); };
          instance("clique-glue-quotient", subject, [&]() -> std::string {
            const UniPoly quotient = clique_glue_tau(a, b, clique, clique);
            const UniPoly direct = tree_poly_dc(glued);
            if (quotient == direct) return {};
            return "quotient " + quotient.to_string() + " vs edge recursion " +
                   direct.to_string();
          });
        }
    }
  }

  // --- weighted sweep --------------------------------------------------

  void sweep_weighted() {
    static const std::vector<std::string> needed = {
        "csf-recursion-order-independent", "weighted-chi-ignores-weights",
        "csf-matches-colouring-oracle", "excess-weight-valuation",
        "mobius-transform-roundtrip"};
    if (std::none_of(needed.begin(), needed.end(),
                     [this](const std::string& id) { return enabled(id); }))
      return;
    for (int n = 1; n <= std::min(opt_.weighted_vertex_max, opt_.n_max); ++n)
      enumerate_labelled_graphs(n, [&](const Graph& g) {
        const UniPoly chi_g = chi_recursion(g);
        const UniPoly tau_g = tree_poly_dc(g);
        enumerate_weightings(
            g, weighted_total_cap(n), [&](const WeightedGraph& wg) {
              weighted_graph_checks(wg, chi_g, tau_g);
            });
      });
  }

  void weighted_graph_checks(const WeightedGraph& wg, const UniPoly& chi_g,
                             const UniPoly& tau_g) {
    const Lazy subject = [&wg] { return graph_subject(wg); };
    const int total = wg.total_weight();

    std::optional<SymFun> x_store;
    auto xdc = [&]() -> const SymFun& {
      if (!x_store)
        x_store = csf_deletion_contraction(wg, EdgeChoice::highest_index);
      return *x_store;
    };

    instance("csf-recursion-order-independent", subject, [&]() -> std::string {
      const SymFun low = csf_deletion_contraction(wg, EdgeChoice::lowest_index);
      if (low == xdc()) return {};
      return "lowest-pivot " + symfun_to_json(low).dump() +
             " vs highest-pivot " + symfun_to_json(xdc()).dump();
    });

    instance("weighted-chi-ignores-weights", subject, [&]() -> std::string {
      const UniPoly weighted = chromatic_poly_weighted(wg);
      if (weighted == chi_g) return {};
      return "weighted " + weighted.to_string() + " vs unweighted " +
             chi_g.to_string();
    });

    if (enabled("csf-matches-colouring-oracle")) {
      std::map<Partition, Rational> mono;
      bool mono_ready = false;
      for (const Partition& shape : partitions_of(total)) {
        instance("csf-matches-colouring-oracle", subject,
                 [&]() -> std::string {
                   if (!mono_ready) {
                     mono = p_to_monomials(xdc(), total);
                     mono_ready = true;
                   }
                   const auto it = mono.find(shape);
                   const Rational from_csf =
                       it == mono.end() ? Rational(0) : it->second;
                   const Rational counted = csf_colouring_oracle(wg, shape);
                   if (from_csf == counted) return {};
                   return "shape " + shape.to_string() + ": expansion gives " +
                          rational_to_string(from_csf) + ", oracle counts " +
                          rational_to_string(counted);
                 });
      }
    }

    std::optional<UniPoly> tw_store;
    auto tau_w = [&]() -> const UniPoly& {
      if (!tw_store) tw_store = tree_poly_weighted(wg);
      return *tw_store;
    };

    instance("excess-weight-valuation", subject, [&]() -> std::string {
      const UniPoly expected =
          x_power_shifted(0, wg.excess_weight()) * tau_g;
      if (!(tau_w() == expected))
        return "weighted recursion " + tau_w().to_string() + " vs shifted " +
               expected.to_string();
      const UniPoly via = tree_poly_via_basis(wg, registry_, basis("path"));
      if (!(via == expected))
        return "path-family expansion " + via.to_string() + " vs shifted " +
               expected.to_string();
      return {};
    });

    instance("mobius-transform-roundtrip", subject, [&]() -> std::string {
      const UniPoly there = reciprocity_transform(
          chi_g, total, ReciprocityDirection::chromatic_to_tree);
      if (!(there == tau_w()))
        return "chromatic maps to " + there.to_string() + ", expected " +
               tau_w().to_string();
      const UniPoly back = reciprocity_transform(
          tau_w(), total, ReciprocityDirection::tree_to_chromatic);
      if (!(back == chi_g))
        return "tree polynomial maps back to " + back.to_string() +
               ", expected " + chi_g.to_string();
      return {};
    });
  }

  // --- algebra checks --------------------------------------------------

  void run_algebra_checks() {
    if (enabled("reciprocity-involution")) {
      for (const char* name : {"path", "star"}) {
        const BasisId fam = basis(name);
        for (int d = 1; d <= opt_.degree_max; ++d)
          for (const Partition& lam : partitions_of(d)) {
            const Lazy subject = [&] {
              return std::string(name) + " family on " + lam.to_string();
            };
            instance("reciprocity-involution", subject, [&]() -> std::string {
              const SymFun f = SymFun::power_sum(lam);
              const SymFun once = registry_.reciprocity_map(f, fam);
              const SymFun twice = registry_.reciprocity_map(once, fam);
              if (twice == f) return {};
              return "double image " + symfun_to_json(twice).dump();
            });
          }
      }
    }

    if (enabled("collapse-multiplicative")) {
      std::mt19937_64 rng(0xc0ffee);
      std::vector<Partition> pool;
      for (int d = 1; d <= 3; ++d)
        for (const Partition& lam : partitions_of(d)) pool.push_back(lam);
      const auto random_symfun = [&] {
        SymFun f;
        const int terms = 1 + static_cast<int>(rng() % 3);
        for (int t = 0; t < terms; ++t) {
          const Partition& lam = pool[rng() % pool.size()];
          const long long c = static_cast<long long>(rng() % 7) - 3;
          if (c != 0) f.add_term(lam, Rational(c));
        }
        return f;
      };
      const BasisId path_basis = basis("path");
      for (int trial = 0; trial < 30; ++trial) {
        const SymFun f = random_symfun();
        const SymFun g = random_symfun();
        const Lazy subject = [&] {
          return "trial " + std::to_string(trial) + ": f=" +
                 symfun_to_json(f).dump() + " g=" + symfun_to_json(g).dump();
        };
        instance("collapse-multiplicative", subject, [&]() -> std::string {
          const SymFun fg = p_multiply(f, g);
          const UniPoly direct = collapse_by_length(fg);
          const UniPoly split = collapse_by_length(f) * collapse_by_length(g);
          if (!(direct == split))
            return "power-sum collapse " + direct.to_string() +
                   " vs factor product " + split.to_string();
          const UniPoly fam_direct = registry_.b_polynomial(fg, path_basis);
          const UniPoly fam_split = registry_.b_polynomial(f, path_basis) *
                                    registry_.b_polynomial(g, path_basis);
          if (!(fam_direct == fam_split))
            return "family collapse " + fam_direct.to_string() +
                   " vs factor product " + fam_split.to_string();
          return {};
        });
      }
    }

    if (enabled("binomial-basis-injective")) {
      std::mt19937_64 rng(0xbead);
      for (int N = 0; N <= std::max(7, opt_.n_max); ++N) {
        const Lazy subject = [N] { return "degree " + std::to_string(N); };
        instance("binomial-basis-injective", subject, [&]() -> std::string {
          const std::size_t dim = static_cast<std::size_t>(N) + 1;
          RationalMatrix m(dim, std::vector<Rational>(dim, Rational(0)));
          for (int k = 0; k <= N; ++k) {
            const UniPoly col = x_power_shifted(k, N - k);
            for (int r = 0; r <= N; ++r)
              m[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] =
                  col.coeff(r);
          }
          if (!mat_inverse(m))
            return "transition matrix is singular";
          std::vector<Rational> coeffs(dim);
          for (auto& c : coeffs)
            c = Rational(static_cast<long long>(rng() % 9) - 4);
          const UniPoly p(std::move(coeffs));
          const UniPoly twice = mobius_substitute(mobius_substitute(p, N), N);
          if (!(twice == p))
            return "substitution round-trip gives " + twice.to_string() +
                   " from " + p.to_string();
          return {};
        });
      }
    }

    if (enabled("power-sum-generator-tree-polys")) {
      for (int d = 1; d <= 7; ++d)
        for (const Partition& lam : partitions_of(d)) {
          const Lazy subject = [&lam] { return lam.to_string(); };
          instance("power-sum-generator-tree-polys", subject,
                   [&]() -> std::string {
                     const UniPoly expected = tau_p_lambda(lam);
                     const WeightedGraph wg(Graph(lam.length(), {}),
                                            lam.parts());
                     const UniPoly via_weight = tree_poly_weighted(wg);
                     if (!(via_weight == expected))
                       return "weighted recursion " + via_weight.to_string() +
                              " vs closed form " + expected.to_string();
                     if (d <= registry_degree_cap()) {
                       const UniPoly via_family =
                           tree_poly_via_basis(wg, registry_, basis("path"));
                       if (!(via_family == expected))
                         return "path-family expansion " +
                                via_family.to_string() + " vs closed form " +
                                expected.to_string();
                     }
                     return {};
                   });
        }
    }
  }

  SuiteOptions opt_;
  SuiteReport report_;
  std::map<std::string, std::size_t> index_;
  BasisRegistry registry_;
  std::map<std::string, BasisId> bases_;
  std::unordered_map<std::string, UniPoly> chi_memo_;
};

}  // namespace

SuiteReport run_suite(const SuiteOptions& options) {
  Harness h(options, nullptr);
  return h.run();
}

SuiteReport run_suite(const SuiteOptions& options,
                      const std::vector<std::string>& only_ids) {
  Harness h(options, &only_ids);
  return h.run();
}

}  // namespace chromagraph
