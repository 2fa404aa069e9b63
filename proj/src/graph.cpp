#include "chromagraph/graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace chromagraph {

EdgeSubset edge_subset_from_indices(const std::vector<int>& indices) {
  EdgeSubset s = 0;
  for (int i : indices) {
    if (i < 0 || i >= 64) throw std::invalid_argument("edge index out of range");
    s |= EdgeSubset(1) << i;
  }
  return s;
}

std::vector<int> edge_subset_indices(EdgeSubset s) {
  std::vector<int> out;
  while (s) {
    out.push_back(std::countr_zero(s));
    s &= s - 1;
  }
  return out;
}

Graph::Graph(int vertex_count, std::vector<std::pair<int, int>> edges)
    : n_(vertex_count), edges_(std::move(edges)) {
  if (n_ < 0) throw std::invalid_argument("vertex count must be >= 0");
  std::set<std::pair<int, int>> seen;
  for (auto& [u, v] : edges_) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
      throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("loops are not allowed");
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second)
      throw std::invalid_argument("parallel edges are not allowed");
  }
  if (edges_.size() > 64)
    throw std::invalid_argument("at most 64 edges are supported");
}

std::pair<int, int> Graph::edge(int index) const {
  if (index < 0 || index >= edge_count())
    throw std::invalid_argument("edge index out of range");
  return edges_[static_cast<std::size_t>(index)];
}

bool Graph::has_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  for (const auto& e : edges_)
    if (e.first == u && e.second == v) return true;
  return false;
}

EdgeSubset Graph::full_edge_set() const {
  return edge_count() == 64 ? ~EdgeSubset(0)
                            : (EdgeSubset(1) << edge_count()) - 1;
}

std::string Graph::canonical_key() const {
  std::string key = std::to_string(n_);
  for (const auto& [u, v] : edges_) {
    key += ' ';
    key += std::to_string(u);
    key += ',';
    key += std::to_string(v);
  }
  return key;
}

WeightedGraph::WeightedGraph(Graph g)
    : g_(std::move(g)),
      weights_(static_cast<std::size_t>(g_.vertex_count()), 1) {}

WeightedGraph::WeightedGraph(Graph g, std::vector<int> weights)
    : g_(std::move(g)), weights_(std::move(weights)) {
  if (static_cast<int>(weights_.size()) != g_.vertex_count())
    throw std::invalid_argument("one weight per vertex required");
  for (int w : weights_)
    if (w < 1) throw std::invalid_argument("weights must be positive");
}

int WeightedGraph::total_weight() const {
  int total = 0;
  for (int w : weights_) total += w;
  return total;
}

int WeightedGraph::excess_weight() const {
  return total_weight() - g_.vertex_count();
}

bool WeightedGraph::has_unit_weights() const {
  for (int w : weights_)
    if (w != 1) return false;
  return true;
}

std::string WeightedGraph::canonical_key() const {
  std::string key = g_.canonical_key();
  key += " w";
  for (int w : weights_) {
    key += ' ';
    key += std::to_string(w);
  }
  return key;
}

Graph delete_edge(const Graph& g, int edge_index) {
  g.edge(edge_index);  // bounds check
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(g.edge_count()) - 1);
  for (int i = 0; i < g.edge_count(); ++i)
    if (i != edge_index) edges.push_back(g.edge(i));
  return Graph(g.vertex_count(), std::move(edges));
}

Graph contract_edge(const Graph& g, int edge_index) {
  const auto [a, b] = g.edge(edge_index);  // a < b
  auto remap = [a = a, b = b](int v) {
    if (v == b) return a;
    return v > b ? v - 1 : v;
  };
  std::vector<std::pair<int, int>> edges;
  std::set<std::pair<int, int>> seen;
  for (int i = 0; i < g.edge_count(); ++i) {
    if (i == edge_index) continue;
    auto [u, v] = g.edge(i);
    int x = remap(u), y = remap(v);
    if (x == y) continue;  // loop created by the contraction
    if (x > y) std::swap(x, y);
    if (!seen.insert({x, y}).second) continue;  // later parallel copy
    edges.push_back({x, y});
  }
  return Graph(g.vertex_count() - 1, std::move(edges));
}

WeightedGraph delete_edge(const WeightedGraph& g, int edge_index) {
  return WeightedGraph(delete_edge(g.graph(), edge_index), g.weights());
}

WeightedGraph contract_edge(const WeightedGraph& g, int edge_index) {
  const auto [a, b] = g.graph().edge(edge_index);
  std::vector<int> weights = g.weights();
  weights[static_cast<std::size_t>(a)] += weights[static_cast<std::size_t>(b)];
  weights.erase(weights.begin() + b);
  return WeightedGraph(contract_edge(g.graph(), edge_index),
                       std::move(weights));
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    for (int i = 0; i < n; ++i) parent[static_cast<std::size_t>(i)] = i;
  }
  int find(int v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      parent[static_cast<std::size_t>(v)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
      v = parent[static_cast<std::size_t>(v)];
    }
    return v;
  }
  /// Returns false when the endpoints were already connected.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent[static_cast<std::size_t>(b)] = a;
    return true;
  }
};

}  // namespace

std::vector<GraphComponent> components(const Graph& g) {
  return components(g, g.full_edge_set());
}

std::vector<GraphComponent> components(const Graph& g, EdgeSubset selected) {
  const int n = g.vertex_count();
  UnionFind uf(n);
  for (int i = 0; i < g.edge_count(); ++i) {
    if (!(selected >> i & 1)) continue;
    const auto [u, v] = g.edge(i);
    uf.unite(u, v);
  }
  std::vector<int> root_index(static_cast<std::size_t>(n), -1);
  std::vector<GraphComponent> out;
  for (int v = 0; v < n; ++v) {
    const int r = uf.find(v);
    if (root_index[static_cast<std::size_t>(r)] < 0) {
      root_index[static_cast<std::size_t>(r)] = static_cast<int>(out.size());
      out.push_back({});
    }
    out[static_cast<std::size_t>(root_index[static_cast<std::size_t>(r)])]
        .vertices.push_back(v);
  }
  for (int i = 0; i < g.edge_count(); ++i) {
    if (!(selected >> i & 1)) continue;
    const int r = uf.find(g.edge(i).first);
    out[static_cast<std::size_t>(root_index[static_cast<std::size_t>(r)])]
        .edges.push_back(i);
  }
  return out;
}

int component_count(const Graph& g, EdgeSubset selected) {
  const int n = g.vertex_count();
  UnionFind uf(n);
  int count = n;
  for (int i = 0; i < g.edge_count(); ++i) {
    if (!(selected >> i & 1)) continue;
    const auto [u, v] = g.edge(i);
    if (uf.unite(u, v)) --count;
  }
  return count;
}

Partition lambda_of(const Graph& g, EdgeSubset selected) {
  std::vector<int> sizes;
  for (const auto& c : components(g, selected))
    sizes.push_back(static_cast<int>(c.vertices.size()));
  return Partition::from_unsorted(std::move(sizes));
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
  std::vector<int> index(static_cast<std::size_t>(g.vertex_count()), -1);
  std::vector<int> sorted(vertices);
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const int v = sorted[i];
    if (v < 0 || v >= g.vertex_count())
      throw std::invalid_argument("vertex out of range");
    if (index[static_cast<std::size_t>(v)] >= 0)
      throw std::invalid_argument("duplicate vertex");
    index[static_cast<std::size_t>(v)] = static_cast<int>(i);
  }
  std::vector<std::pair<int, int>> edges;
  for (const auto& [u, v] : g.edges()) {
    const int iu = index[static_cast<std::size_t>(u)];
    const int iv = index[static_cast<std::size_t>(v)];
    if (iu >= 0 && iv >= 0) edges.push_back({iu, iv});
  }
  return Graph(static_cast<int>(sorted.size()), std::move(edges));
}

WeightedGraph induced_subgraph(const WeightedGraph& g,
                               const std::vector<int>& vertices) {
  std::vector<int> sorted(vertices);
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> weights;
  weights.reserve(sorted.size());
  for (int v : sorted) weights.push_back(g.weight(v));
  return WeightedGraph(induced_subgraph(g.graph(), sorted), std::move(weights));
}

bool is_connected(const Graph& g) {
  return g.vertex_count() <= 1 ||
         component_count(g, g.full_edge_set()) == 1;
}

bool is_tree(const Graph& g) {
  return g.vertex_count() >= 1 && is_connected(g) &&
         g.edge_count() == g.vertex_count() - 1;
}

bool is_forest(const Graph& g, EdgeSubset selected) {
  UnionFind uf(g.vertex_count());
  for (int i = 0; i < g.edge_count(); ++i) {
    if (!(selected >> i & 1)) continue;
    const auto [u, v] = g.edge(i);
    if (!uf.unite(u, v)) return false;
  }
  return true;
}

std::vector<EdgeSubset> k_cutsets(const Graph& g, int k) {
  if (k < 1 || k > std::max(g.vertex_count(), 1))
    throw std::invalid_argument("component count out of range");
  if (g.edge_count() > 24)
    throw std::invalid_argument("k_cutsets supports at most 24 edges");
  const EdgeSubset full = g.full_edge_set();
  std::vector<EdgeSubset> out;
  for (EdgeSubset s = 0;; ++s) {
    if (component_count(g, full & ~s) == k) out.push_back(s);
    if (s == full) break;
  }
  return out;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<std::pair<int, int>> edges = a.edges();
  for (const auto& [u, v] : b.edges())
    edges.push_back({u + a.vertex_count(), v + a.vertex_count()});
  return Graph(a.vertex_count() + b.vertex_count(), std::move(edges));
}

Graph glue_at_clique(const Graph& a, const Graph& b,
                     const std::vector<int>& clique_a,
                     const std::vector<int>& clique_b) {
  if (clique_a.size() != clique_b.size())
    throw std::invalid_argument("cliques must have equal size");
  auto check_clique = [](const Graph& g, const std::vector<int>& vs) {
    std::set<int> distinct;
    for (int v : vs) {
      if (v < 0 || v >= g.vertex_count())
        throw std::invalid_argument("clique vertex out of range");
      if (!distinct.insert(v).second)
        throw std::invalid_argument("clique vertices must be distinct");
    }
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j)
        if (!g.has_edge(vs[i], vs[j]))
          throw std::invalid_argument("vertices do not induce a clique");
  };
  check_clique(a, clique_a);
  check_clique(b, clique_b);

  std::vector<int> map_b(static_cast<std::size_t>(b.vertex_count()), -1);
  for (std::size_t i = 0; i < clique_b.size(); ++i)
    map_b[static_cast<std::size_t>(clique_b[i])] = clique_a[i];
  int next = a.vertex_count();
  for (int v = 0; v < b.vertex_count(); ++v)
    if (map_b[static_cast<std::size_t>(v)] < 0)
      map_b[static_cast<std::size_t>(v)] = next++;

  std::vector<std::pair<int, int>> edges = a.edges();
  std::set<std::pair<int, int>> seen(edges.begin(), edges.end());
  for (const auto& [u, v] : b.edges()) {
    int x = map_b[static_cast<std::size_t>(u)];
    int y = map_b[static_cast<std::size_t>(v)];
    if (x > y) std::swap(x, y);
    if (seen.insert({x, y}).second) edges.push_back({x, y});
  }
  return Graph(next, std::move(edges));
}

Graph path_graph(int n) {
  if (n < 1) throw std::invalid_argument("path needs at least one vertex");
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph(n, std::move(edges));
}

Graph star_graph(int n) {
  if (n < 1) throw std::invalid_argument("star needs at least one vertex");
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) edges.push_back({0, v});
  return Graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least three vertices");
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  edges.push_back({0, n - 1});
  return Graph(n, std::move(edges));
}

Graph complete_graph(int n) {
  if (n < 0) throw std::invalid_argument("vertex count must be >= 0");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph(n, std::move(edges));
}

VertexPartition::VertexPartition(int vertex_count,
                                 std::vector<std::vector<int>> blocks)
    : n_(vertex_count), blocks_(std::move(blocks)) {
  if (n_ < 0) throw std::invalid_argument("vertex count must be >= 0");
  block_of_.assign(static_cast<std::size_t>(n_), -1);
  for (auto& block : blocks_) {
    if (block.empty()) throw std::invalid_argument("empty block");
    std::sort(block.begin(), block.end());
    for (int v : block) {
      if (v < 0 || v >= n_)
        throw std::invalid_argument("block vertex out of range");
      if (block_of_[static_cast<std::size_t>(v)] >= 0)
        throw std::invalid_argument("blocks must be disjoint");
      block_of_[static_cast<std::size_t>(v)] = 0;  // placeholder
    }
  }
  for (int v = 0; v < n_; ++v)
    if (block_of_[static_cast<std::size_t>(v)] < 0)
      throw std::invalid_argument("blocks must cover every vertex");
  std::sort(blocks_.begin(), blocks_.end(),
            [](const auto& a, const auto& b) { return a[0] < b[0]; });
  for (std::size_t i = 0; i < blocks_.size(); ++i)
    for (int v : blocks_[i])
      block_of_[static_cast<std::size_t>(v)] = static_cast<int>(i);
}

VertexPartition VertexPartition::singletons(int vertex_count) {
  std::vector<std::vector<int>> blocks;
  for (int v = 0; v < vertex_count; ++v) blocks.push_back({v});
  return VertexPartition(vertex_count, std::move(blocks));
}

bool VertexPartition::refines(const VertexPartition& coarser) const {
  if (n_ != coarser.n_) return false;
  for (const auto& block : blocks_) {
    const int target = coarser.block_of(block[0]);
    for (int v : block)
      if (coarser.block_of(v) != target) return false;
  }
  return true;
}

std::string VertexPartition::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i) s += ',';
    s += '[';
    for (std::size_t j = 0; j < blocks_[i].size(); ++j) {
      if (j) s += ',';
      s += std::to_string(blocks_[i][j]);
    }
    s += ']';
  }
  s += ']';
  return s;
}

std::strong_ordering operator<=>(const VertexPartition& a,
                                 const VertexPartition& b) {
  if (a.n_ != b.n_) return a.n_ <=> b.n_;
  return a.blocks_ <=> b.blocks_;
}

bool is_connected_partition(const Graph& g, const VertexPartition& p) {
  if (p.vertex_count() != g.vertex_count()) return false;
  for (const auto& block : p.blocks())
    if (!is_connected(induced_subgraph(g, block))) return false;
  return true;
}

VertexPartition partition_from_edges(const Graph& g, EdgeSubset selected) {
  std::vector<std::vector<int>> blocks;
  for (const auto& c : components(g, selected)) blocks.push_back(c.vertices);
  return VertexPartition(g.vertex_count(), std::move(blocks));
}

}  // namespace chromagraph
