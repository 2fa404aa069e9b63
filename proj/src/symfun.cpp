#include "chromagraph/symfun.hpp"

#include "chromagraph/csf.hpp"

#include <algorithm>
#include <iterator>
#include <mutex>
#include <queue>
#include <random>
#include <stdexcept>

namespace chromagraph {

SymFun SymFun::zero(BasisId basis) { return SymFun(std::move(basis)); }

SymFun SymFun::one(BasisId basis) {
  SymFun f(std::move(basis));
  f.set_coeff(Partition(), Rational(1));
  return f;
}

SymFun SymFun::power_sum(const Partition& p) {
  SymFun f;
  f.set_coeff(p, Rational(1));
  return f;
}

Rational SymFun::coeff(const Partition& p) const {
  const auto it = coeffs_.find(p);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void SymFun::set_coeff(const Partition& p, Rational c) {
  if (c == 0)
    coeffs_.erase(p);
  else
    coeffs_[p] = std::move(c);
}

void SymFun::add_term(const Partition& p, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

int SymFun::top_degree() const {
  int top = -1;
  for (const auto& [p, c] : coeffs_) top = std::max(top, p.size());
  return top;
}

bool SymFun::is_homogeneous() const {
  int seen = -1;
  for (const auto& [p, c] : coeffs_) {
    if (seen < 0) seen = p.size();
    if (p.size() != seen) return false;
  }
  return true;
}

std::map<int, SymFun> SymFun::split_degrees() const {
  std::map<int, SymFun> out;
  for (const auto& [p, c] : coeffs_) {
    auto [it, inserted] = out.try_emplace(p.size(), SymFun(basis_));
    it->second.set_coeff(p, c);
  }
  return out;
}

Rational SymFun::coefficient_sum() const {
  Rational total(0);
  for (const auto& [p, c] : coeffs_) total += c;
  return total;
}

namespace {

void require_same_basis(const SymFun& a, const SymFun& b) {
  if (!(a.basis() == b.basis()))
    throw std::invalid_argument("operands live in different bases");
}

}  // namespace

SymFun& SymFun::operator+=(const SymFun& rhs) {
  require_same_basis(*this, rhs);
  for (const auto& [p, c] : rhs.coeffs_) add_term(p, c);
  return *this;
}

SymFun& SymFun::operator-=(const SymFun& rhs) {
  require_same_basis(*this, rhs);
  for (const auto& [p, c] : rhs.coeffs_) add_term(p, -c);
  return *this;
}

SymFun& SymFun::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [p, v] : coeffs_) v *= c;
  return *this;
}

SymFun p_multiply(const SymFun& a, const SymFun& b) {
  if (a.basis().kind != BasisKind::power_sum ||
      b.basis().kind != BasisKind::power_sum)
    throw std::invalid_argument("p_multiply needs power-sum operands");
  SymFun out;
  for (const auto& [pa, ca] : a.coeffs())
    for (const auto& [pb, cb] : b.coeffs())
      out.add_term(pa.merged_with(pb), ca * cb);
  return out;
}

UniPoly collapse_by_length(const SymFun& f) {
  std::vector<Rational> coeffs;
  for (const auto& [p, c] : f.coeffs()) {
    const std::size_t k = static_cast<std::size_t>(p.length());
    if (coeffs.size() <= k) coeffs.resize(k + 1, Rational(0));
    coeffs[k] += c;
  }
  return UniPoly(std::move(coeffs));
}

namespace {

const std::map<Partition, BigInt>& monomial_expansion(const Partition& lam,
                                                      int num_vars) {
  static std::map<std::pair<std::string, int>, std::map<Partition, BigInt>>
      cache;
  static std::mutex mutex;
  const std::pair<std::string, int> key{lam.to_string(), num_vars};
  {
    std::lock_guard<std::mutex> lock(mutex);
    const auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  std::map<Partition, BigInt> out;
  std::vector<int> expo(static_cast<std::size_t>(num_vars), 0);
  const auto& parts = lam.parts();
  std::function<void(std::size_t)> assign = [&](std::size_t i) {
    if (i == parts.size()) {
      std::vector<int> shape;
      for (std::size_t j = 0; j < expo.size(); ++j) {
        if (j > 0 && expo[j] > expo[j - 1]) return;  // not the leading monomial
        if (expo[j] > 0) shape.push_back(expo[j]);
      }
      out[Partition(std::move(shape))] += 1;
      return;
    }
    for (std::size_t j = 0; j < expo.size(); ++j) {
      expo[j] += parts[i];
      assign(i + 1);
      expo[j] -= parts[i];
    }
  };
  assign(0);
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(key, std::move(out)).first->second;
}

}  // namespace

std::map<Partition, Rational> p_to_monomials(const SymFun& f, int num_vars) {
  if (f.basis().kind != BasisKind::power_sum)
    throw std::invalid_argument("monomial expansion needs power-sum input");
  if (num_vars < std::max(f.top_degree(), 0))
    throw std::invalid_argument(
        "num_vars below the degree would truncate monomials");
  std::map<Partition, Rational> out;
  for (const auto& [lam, c] : f.coeffs())
    for (const auto& [shape, count] : monomial_expansion(lam, num_vars)) {
      auto [it, inserted] = out.try_emplace(shape, c * Rational(count));
      if (!inserted) it->second += c * Rational(count);
    }
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

GraphFamily::GraphFamily(std::string name, Generator generator)
    : name_(std::move(name)), generator_(std::move(generator)) {
  if (name_.empty()) throw std::invalid_argument("family needs a name");
  if (!generator_) throw std::invalid_argument("family needs a generator");
}

WeightedGraph GraphFamily::member(int n) const {
  if (n < 1) throw std::invalid_argument("family members start at 1");
  if (!generator_) throw std::invalid_argument("family has no generator");
  return generator_(n);
}

GraphFamily GraphFamily::paths() {
  return GraphFamily("path",
                     [](int n) { return WeightedGraph(path_graph(n)); });
}

GraphFamily GraphFamily::stars() {
  return GraphFamily("star",
                     [](int n) { return WeightedGraph(star_graph(n)); });
}

GraphFamily GraphFamily::cycles() {
  return GraphFamily("cycle", [](int n) {
    return WeightedGraph(n < 3 ? complete_graph(n) : cycle_graph(n));
  });
}

GraphFamily GraphFamily::cliques() {
  return GraphFamily("clique",
                     [](int n) { return WeightedGraph(complete_graph(n)); });
}

GraphFamily GraphFamily::single_vertices() {
  return GraphFamily("vertex", [](int n) {
    return WeightedGraph(Graph(1, {}), std::vector<int>{n});
  });
}

namespace {

Graph tree_from_pruefer(int n, const std::vector<int>& seq) {
  if (n == 1) return Graph(1, {});
  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (int a : seq) ++degree[static_cast<std::size_t>(a)];
  std::priority_queue<int, std::vector<int>, std::greater<int>> leaves;
  for (int v = 0; v < n; ++v)
    if (degree[static_cast<std::size_t>(v)] == 1) leaves.push(v);
  std::vector<std::pair<int, int>> edges;
  for (int a : seq) {
    const int leaf = leaves.top();
    leaves.pop();
    edges.push_back({std::min(leaf, a), std::max(leaf, a)});
    degree[static_cast<std::size_t>(leaf)] = 0;
    if (--degree[static_cast<std::size_t>(a)] == 1) leaves.push(a);
  }
  const int u = leaves.top();
  leaves.pop();
  const int v = leaves.top();
  edges.push_back({std::min(u, v), std::max(u, v)});
  return Graph(n, std::move(edges));
}

}  // namespace

GraphFamily GraphFamily::random_trees(std::uint64_t seed) {
  return GraphFamily(
      "random-tree-" + std::to_string(seed), [seed](int n) {
        std::mt19937_64 rng(seed ^
                            (0x9e3779b97f4a7c15ULL *
                             (static_cast<std::uint64_t>(n) + 1)));
        std::vector<int> seq;
        for (int i = 0; i + 2 < n; ++i)
          seq.push_back(static_cast<int>(rng() % static_cast<std::uint64_t>(n)));
        return WeightedGraph(tree_from_pruefer(n, seq));
      });
}

GraphFamily GraphFamily::from_edge_lists(
    std::string name,
    std::map<int, std::vector<std::pair<int, int>>> edge_lists) {
  return GraphFamily(std::move(name), [lists = std::move(edge_lists)](int n) {
    const auto it = lists.find(n);
    if (it == lists.end())
      throw std::invalid_argument("family file lacks member " +
                                  std::to_string(n));
    return WeightedGraph(Graph(n, it->second));
  });
}

bool is_tree_family(const GraphFamily& family, int up_to, std::string* reason) {
  for (int k = 1; k <= up_to; ++k) {
    WeightedGraph m;
    try {
      m = family.member(k);
    } catch (const std::exception& e) {
      if (reason) *reason = e.what();
      return false;
    }
    if (!m.has_unit_weights()) {
      if (reason)
        *reason = "member " + std::to_string(k) + " carries weights";
      return false;
    }
    if (m.graph().vertex_count() != k || !is_tree(m.graph())) {
      if (reason)
        *reason = "member " + std::to_string(k) + " is not a tree on " +
                  std::to_string(k) + " vertices";
      return false;
    }
  }
  return true;
}

BasisId BasisRegistry::register_chromatic_basis(const GraphFamily& family,
                                                int max_degree) {
  if (max_degree < 0)
    throw std::invalid_argument("max_degree must be >= 0");
  std::unique_lock lock(mutex_);
  int idx = -1;
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (entries_[i].family.name() == family.name()) {
      idx = static_cast<int>(i);
      break;
    }
  const BasisKind kind = BasisKind::chromatic_family;
  if (idx >= 0 && entries_[static_cast<std::size_t>(idx)].degree >= max_degree)
    return BasisId{kind, idx, family.name()};

  std::vector<SymFun> member_csf(static_cast<std::size_t>(max_degree) + 1);
  for (int k = 1; k <= max_degree; ++k) {
    const WeightedGraph m = family.member(k);
    if (m.total_weight() != k)
      throw std::invalid_argument("family " + family.name() + " member " +
                                  std::to_string(k) +
                                  " does not have total weight " +
                                  std::to_string(k));
    if (!is_connected(m.graph()))
      throw std::invalid_argument("family " + family.name() + " member " +
                                  std::to_string(k) + " is not connected");
    member_csf[static_cast<std::size_t>(k)] = csf_deletion_contraction(m);
  }

  Entry e;
  e.family = family;
  e.degree = max_degree;
  e.to_power.resize(static_cast<std::size_t>(max_degree) + 1);
  e.from_power.resize(static_cast<std::size_t>(max_degree) + 1);
  for (int d = 0; d <= max_degree; ++d) {
    const auto parts = partitions_of(d);
    const std::size_t size = parts.size();
    RationalMatrix m(size, std::vector<Rational>(size, Rational(0)));
    for (std::size_t col = 0; col < size; ++col) {
      SymFun prod = SymFun::one();
      for (int part : parts[col].parts())
        prod = p_multiply(prod, member_csf[static_cast<std::size_t>(part)]);
      for (std::size_t row = 0; row < size; ++row)
        m[row][col] = prod.coeff(parts[row]);
    }
    auto inv = mat_inverse(m);
    if (!inv)
      throw std::logic_error("transition matrix for " + family.name() +
                             " is singular at degree " + std::to_string(d));
    e.to_power[static_cast<std::size_t>(d)] = std::move(m);
    e.from_power[static_cast<std::size_t>(d)] = std::move(*inv);
  }

  if (idx >= 0) {
    entries_[static_cast<std::size_t>(idx)] = std::move(e);
  } else {
    entries_.push_back(std::move(e));
    idx = static_cast<int>(entries_.size()) - 1;
  }
  return BasisId{kind, idx, family.name()};
}

const BasisRegistry::Entry& BasisRegistry::entry(const BasisId& basis) const {
  if (basis.kind != BasisKind::chromatic_family)
    throw std::invalid_argument("expected a registered family basis");
  if (basis.family_index >= 0 &&
      basis.family_index < static_cast<int>(entries_.size()) &&
      entries_[static_cast<std::size_t>(basis.family_index)].family.name() ==
          basis.name)
    return entries_[static_cast<std::size_t>(basis.family_index)];
  for (const auto& e : entries_)
    if (e.family.name() == basis.name) return e;
  throw std::invalid_argument("unknown basis: " + basis.name);
}

BasisId BasisRegistry::find(const std::string& name) const {
  if (name == "p") return power_sum_basis();
  std::shared_lock lock(mutex_);
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (entries_[i].family.name() == name)
      return BasisId{BasisKind::chromatic_family, static_cast<int>(i), name};
  throw std::invalid_argument("unknown basis: " + name);
}

int BasisRegistry::registered_degree(const BasisId& basis) const {
  std::shared_lock lock(mutex_);
  return entry(basis).degree;
}

const GraphFamily& BasisRegistry::family(const BasisId& basis) const {
  std::shared_lock lock(mutex_);
  return entry(basis).family;
}

SymFun BasisRegistry::apply_per_degree(const std::vector<RationalMatrix>& mats,
                                       const SymFun& f, BasisId out_basis,
                                       const std::string& what) const {
  SymFun out = SymFun::zero(std::move(out_basis));
  for (const auto& [d, layer] : f.split_degrees()) {
    if (d >= static_cast<int>(mats.size()))
      throw std::out_of_range(what + ": degree " + std::to_string(d) +
                              " exceeds the registered degree " +
                              std::to_string(static_cast<int>(mats.size()) -
                                             1));
    const auto parts = partitions_of(d);
    std::vector<Rational> v(parts.size(), Rational(0));
    for (std::size_t i = 0; i < parts.size(); ++i)
      v[i] = layer.coeff(parts[i]);
    const auto y = mat_vec(mats[static_cast<std::size_t>(d)], v);
    for (std::size_t i = 0; i < parts.size(); ++i)
      out.add_term(parts[i], y[i]);
  }
  return out;
}

SymFun BasisRegistry::change_basis(const SymFun& f, const BasisId& to) const {
  if (f.basis().kind == BasisKind::monomial || to.kind == BasisKind::monomial)
    throw std::invalid_argument("monomial expansions are output-only");
  const bool from_p = f.basis().kind == BasisKind::power_sum;
  const bool to_p = to.kind == BasisKind::power_sum;
  if (from_p && to_p) return f;
  if (!from_p && !to_p && f.basis().name == to.name) return f;
  std::shared_lock lock(mutex_);
  if (from_p) {
    const Entry& en = entry(to);
    return apply_per_degree(en.from_power, f, to,
                            "change to " + to.name);
  }
  const Entry& src = entry(f.basis());
  SymFun in_p = apply_per_degree(src.to_power, f, power_sum_basis(),
                                 "change from " + f.basis().name);
  if (to_p) return in_p;
  const Entry& dst = entry(to);
  return apply_per_degree(dst.from_power, in_p, to, "change to " + to.name);
}

SymFun BasisRegistry::reciprocity_map(const SymFun& f_power_sum,
                                      const BasisId& family) const {
  if (f_power_sum.basis().kind != BasisKind::power_sum)
    throw std::invalid_argument("reciprocity acts on power-sum input");
  std::shared_lock lock(mutex_);
  const Entry& en = entry(family);
  return apply_per_degree(en.to_power, f_power_sum, power_sum_basis(),
                          "reciprocity via " + family.name);
}

UniPoly BasisRegistry::b_polynomial(const SymFun& f,
                                    const BasisId& basis) const {
  return collapse_by_length(change_basis(f, basis));
}

}  // namespace chromagraph
