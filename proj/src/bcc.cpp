#include "chromagraph/bcc.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <unordered_set>

namespace chromagraph {

namespace {

std::vector<std::vector<std::pair<int, int>>> adjacency(const Graph& g) {
  std::vector<std::vector<std::pair<int, int>>> adj(
      static_cast<std::size_t>(g.vertex_count()));
  for (int i = 0; i < g.edge_count(); ++i) {
    const auto [u, v] = g.edge(i);
    adj[static_cast<std::size_t>(u)].push_back({v, i});
    adj[static_cast<std::size_t>(v)].push_back({u, i});
  }
  return adj;
}

}  // namespace

std::vector<EdgeSubset> broken_circuits(const Graph& g) {
  const auto adj = adjacency(g);
  std::vector<EdgeSubset> out;
  std::vector<char> used(static_cast<std::size_t>(g.vertex_count()), 0);
  std::vector<int> path;

  // Each cycle is walked exactly once: it starts at its smallest vertex and
  // proceeds first to the smaller of that vertex's two cycle neighbours.
  std::function<void(int, int, int, EdgeSubset)> dfs =
      [&](int start, int v, int incoming, EdgeSubset path_edges) {
        for (const auto& [w, ei] : adj[static_cast<std::size_t>(v)]) {
          if (ei == incoming) continue;
          if (w == start) {
            if (path[1] < v) {
              const EdgeSubset cycle = path_edges | (EdgeSubset(1) << ei);
              out.push_back(cycle & (cycle - 1));  // drop the smallest edge
            }
            continue;
          }
          if (w < start || used[static_cast<std::size_t>(w)]) continue;
          used[static_cast<std::size_t>(w)] = 1;
          path.push_back(w);
          dfs(start, w, ei, path_edges | (EdgeSubset(1) << ei));
          path.pop_back();
          used[static_cast<std::size_t>(w)] = 0;
        }
      };

  for (int s = 0; s < g.vertex_count(); ++s) {
    used[static_cast<std::size_t>(s)] = 1;
    path.assign(1, s);
    for (const auto& [w, ei] : adj[static_cast<std::size_t>(s)]) {
      if (w < s) continue;
      used[static_cast<std::size_t>(w)] = 1;
      path.push_back(w);
      dfs(s, w, ei, EdgeSubset(1) << ei);
      path.pop_back();
      used[static_cast<std::size_t>(w)] = 0;
    }
    used[static_cast<std::size_t>(s)] = 0;
  }
  std::sort(out.begin(), out.end());
  return out;
}

BrokenCircuitComplex bcc_members(const Graph& g) {
  if (g.edge_count() > 24)
    throw std::invalid_argument(
        "complex materialization supports at most 24 edges");
  const auto broken = broken_circuits(g);
  std::vector<std::vector<EdgeSubset>> by_edge(
      static_cast<std::size_t>(g.edge_count()));
  for (EdgeSubset bc : broken)
    for (int e : edge_subset_indices(bc))
      by_edge[static_cast<std::size_t>(e)].push_back(bc);

  std::vector<EdgeSubset> members;
  // Downward closure lets members grow one edge at a time in index order; a
  // newly violated broken circuit must involve the added edge.
  std::function<void(EdgeSubset, int)> extend = [&](EdgeSubset cur, int from) {
    members.push_back(cur);
    for (int e = from; e < g.edge_count(); ++e) {
      const EdgeSubset cand = cur | (EdgeSubset(1) << e);
      bool ok = true;
      for (EdgeSubset bc : by_edge[static_cast<std::size_t>(e)])
        if ((bc & cand) == bc) {
          ok = false;
          break;
        }
      if (ok) extend(cand, e + 1);
    }
  };
  extend(0, 0);
  std::sort(members.begin(), members.end());
  for (EdgeSubset s : members)
    if (!is_forest(g, s))
      throw std::logic_error("complex member contains a cycle");
  return {g, std::move(members)};
}

BrokenCircuitPredicate::BrokenCircuitPredicate(const Graph& g)
    : broken_(broken_circuits(g)) {}

bool BrokenCircuitPredicate::operator()(EdgeSubset s) const {
  for (EdgeSubset bc : broken_)
    if ((bc & s) == bc) return false;
  return true;
}

std::vector<EdgeSubset> maximal_members(const BrokenCircuitComplex& cx) {
  const Graph& g = cx.host;
  const std::unordered_set<EdgeSubset> member_set(cx.members.begin(),
                                                  cx.members.end());
  const EdgeSubset full = g.full_edge_set();
  const int host_components = component_count(g, full);
  std::vector<EdgeSubset> out;
  for (EdgeSubset s : cx.members) {
    bool inclusion_maximal = true;
    for (EdgeSubset rest = full & ~s; rest; rest &= rest - 1) {
      const EdgeSubset grown = s | (rest & ~(rest - 1));
      if (member_set.count(grown)) {
        inclusion_maximal = false;
        break;
      }
    }
    const bool spanning =
        g.vertex_count() - edge_subset_size(s) == host_components;
    if (inclusion_maximal != spanning)
      throw std::logic_error(
          "maximal member characterizations disagree on " +
          g.canonical_key());
    if (inclusion_maximal) out.push_back(s);
  }
  return out;
}

std::vector<EdgeSubset> maximal_members(const Graph& g) {
  return maximal_members(bcc_members(g));
}

std::optional<EdgeSubset> fundamental_cycle(const Graph& g, EdgeSubset forest,
                                            int edge_index) {
  const auto [eu, ev] = g.edge(edge_index);
  if (forest >> edge_index & 1)
    throw std::invalid_argument("edge already belongs to the forest");
  if (forest & ~g.full_edge_set())
    throw std::invalid_argument("forest contains unknown edges");
  if (!is_forest(g, forest))
    throw std::invalid_argument("edge set contains a cycle");

  // BFS through forest edges from eu toward ev, remembering arrival edges.
  std::vector<int> via(static_cast<std::size_t>(g.vertex_count()), -1);
  std::vector<int> queue{eu};
  via[static_cast<std::size_t>(eu)] = edge_index;  // marker for the root
  const auto adj = adjacency(g);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int v = queue[head];
    if (v == ev) break;
    for (const auto& [w, ei] : adj[static_cast<std::size_t>(v)]) {
      if (!(forest >> ei & 1)) continue;
      if (via[static_cast<std::size_t>(w)] >= 0) continue;
      via[static_cast<std::size_t>(w)] = ei;
      queue.push_back(w);
    }
  }
  if (via[static_cast<std::size_t>(ev)] < 0) return std::nullopt;
  EdgeSubset cycle = EdgeSubset(1) << edge_index;
  int v = ev;
  while (v != eu) {
    const int ei = via[static_cast<std::size_t>(v)];
    cycle |= EdgeSubset(1) << ei;
    const auto [a, b] = g.edge(ei);
    v = (v == a) ? b : a;
  }
  return cycle;
}

bool is_externally_active(const Graph& g, EdgeSubset forest, int edge_index) {
  const auto cycle = fundamental_cycle(g, forest, edge_index);
  if (!cycle) return false;
  return std::countr_zero(*cycle) == edge_index;
}

EdgeSubset nabla(const Graph& g, EdgeSubset selected) {
  std::vector<int> comp(static_cast<std::size_t>(g.vertex_count()), -1);
  const auto comps = components(g, selected);
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (int v : comps[c].vertices)
      comp[static_cast<std::size_t>(v)] = static_cast<int>(c);
  EdgeSubset out = 0;
  for (int i = 0; i < g.edge_count(); ++i) {
    const auto [u, v] = g.edge(i);
    if (comp[static_cast<std::size_t>(u)] != comp[static_cast<std::size_t>(v)])
      out |= EdgeSubset(1) << i;
  }
  return out;
}

namespace {

/// The smallest boundary edge stays outside t, and every other boundary edge
/// inside t is explained by the fundamental cycle of a smaller boundary edge
/// outside t.
bool activity_condition(const Graph& g, EdgeSubset boundary, EdgeSubset t) {
  if (!boundary) return true;
  const auto edges = edge_subset_indices(boundary);
  if (t >> edges[0] & 1) return false;
  std::vector<char> computed(edges.size(), 0);
  std::vector<std::optional<EdgeSubset>> cycles(edges.size());
  for (std::size_t j = 1; j < edges.size(); ++j) {
    if (!(t >> edges[j] & 1)) continue;
    bool explained = false;
    for (std::size_t i = 0; i < j; ++i) {
      if (t >> edges[i] & 1) continue;
      if (!computed[i]) {
        cycles[i] = fundamental_cycle(g, t, edges[i]);
        computed[i] = 1;
      }
      if (cycles[i] && (*cycles[i] >> edges[j] & 1)) {
        explained = true;
        break;
      }
    }
    if (!explained) return false;
  }
  return true;
}

}  // namespace

SupersetSignSum superset_sign_sum(const BrokenCircuitComplex& cx,
                                  EdgeSubset base) {
  const Graph& g = cx.host;
  if (!std::binary_search(cx.members.begin(), cx.members.end(), base))
    throw std::invalid_argument("base is not a member of the complex");
  const int n = g.vertex_count();
  const int host_components = component_count(g, g.full_edge_set());

  BigInt sum = 0;
  for (EdgeSubset s : cx.members) {
    if ((s & base) != base) continue;
    sum += ((n - edge_subset_size(s)) % 2) ? -1 : 1;
  }

  const EdgeSubset boundary = nabla(g, base);
  std::vector<EdgeSubset> witnesses;
  for (EdgeSubset t : cx.members) {
    if (n - edge_subset_size(t) != host_components) continue;  // not maximal
    if ((t & base) != base) continue;
    if (activity_condition(g, boundary, t)) witnesses.push_back(t);
  }

  const BigInt expected =
      BigInt(witnesses.size()) * ((host_components % 2) ? -1 : 1);
  if (sum != expected)
    throw std::logic_error("signed superset count mismatch on " +
                           g.canonical_key());
  return {std::move(sum), std::move(witnesses)};
}

SupersetSignSum superset_sign_sum(const Graph& g, EdgeSubset base) {
  return superset_sign_sum(bcc_members(g), base);
}

bool min_nabla_extension_is_member(const BrokenCircuitComplex& cx,
                                   EdgeSubset member) {
  if (!std::binary_search(cx.members.begin(), cx.members.end(), member))
    throw std::invalid_argument("not a member of the complex");
  const EdgeSubset boundary = nabla(cx.host, member);
  if (!boundary)
    throw std::invalid_argument("member already spans its components");
  const EdgeSubset grown = member | (boundary & ~(boundary - 1));
  return std::binary_search(cx.members.begin(), cx.members.end(), grown);
}

bool min_nabla_extension_is_member(const Graph& g, EdgeSubset member) {
  return min_nabla_extension_is_member(bcc_members(g), member);
}

std::vector<std::pair<EdgeSubset, EdgeSubset>> cutset_forest_pairs(
    const BrokenCircuitComplex& cx, int k) {
  const Graph& g = cx.host;
  const int n = g.vertex_count();
  if (k < 1 || k > std::max(n, 1))
    throw std::invalid_argument("component count out of range");
  const int host_components = component_count(g, g.full_edge_set());

  std::vector<EdgeSubset> maximal;
  for (EdgeSubset t : cx.members)
    if (n - edge_subset_size(t) == host_components) maximal.push_back(t);

  std::vector<std::pair<EdgeSubset, EdgeSubset>> out;
  for (EdgeSubset a : cx.members) {
    if (n - edge_subset_size(a) != k) continue;
    const EdgeSubset boundary = nabla(g, a);
    for (EdgeSubset t : maximal) {
      if ((t & a) != a) continue;
      if (activity_condition(g, boundary, t)) out.push_back({boundary, t});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<EdgeSubset, EdgeSubset>> cutset_forest_pairs(
    const Graph& g, int k) {
  return cutset_forest_pairs(bcc_members(g), k);
}

}  // namespace chromagraph
