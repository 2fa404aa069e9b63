#include "chromagraph/csf.hpp"

#include "chromagraph/bcc.hpp"

#include <functional>
#include <mutex>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace chromagraph {

SymFun csf_broken_circuit(const BrokenCircuitComplex& cx) {
  SymFun f = SymFun::zero();
  for (EdgeSubset s : cx.members) {
    const int sign = edge_subset_size(s) % 2 ? -1 : 1;
    f.add_term(lambda_of(cx.host, s), Rational(sign));
  }
  return f;
}

SymFun csf_broken_circuit(const Graph& g) {
  return csf_broken_circuit(bcc_members(g));
}

namespace {

SymFun csf_dc_impl(const WeightedGraph& g, EdgeChoice choice,
                   std::unordered_map<std::string, SymFun>& memo,
                   std::mutex& mutex) {
  if (g.graph().edge_count() == 0) {
    SymFun f = SymFun::zero();
    f.set_coeff(Partition::from_unsorted(g.weights()), Rational(1));
    return f;
  }
  const std::string key = g.canonical_key();
  {
    std::lock_guard<std::mutex> lock(mutex);
    const auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  const int e = choice == EdgeChoice::highest_index
                    ? g.graph().edge_count() - 1
                    : 0;
  SymFun f = csf_dc_impl(delete_edge(g, e), choice, memo, mutex) -
             csf_dc_impl(contract_edge(g, e), choice, memo, mutex);
  {
    std::lock_guard<std::mutex> lock(mutex);
    memo.emplace(key, f);
  }
  return f;
}

}  // namespace

SymFun csf_deletion_contraction(const WeightedGraph& g, EdgeChoice choice) {
  static std::unordered_map<std::string, SymFun> memo_high, memo_low;
  static std::mutex mutex_high, mutex_low;
  if (choice == EdgeChoice::highest_index)
    return csf_dc_impl(g, choice, memo_high, mutex_high);
  return csf_dc_impl(g, choice, memo_low, mutex_low);
}

SymFun csf_deletion_contraction(const Graph& g, EdgeChoice choice) {
  return csf_deletion_contraction(WeightedGraph(g), choice);
}

Rational csf_colouring_oracle(const WeightedGraph& g, const Partition& shape) {
  if (shape.size() != g.total_weight())
    throw std::invalid_argument("shape must partition the total weight");
  const int n = g.graph().vertex_count();
  const int colours = shape.length();
  std::vector<std::vector<int>> earlier(static_cast<std::size_t>(n));
  for (const auto& [u, v] : g.graph().edges())
    earlier[static_cast<std::size_t>(v)].push_back(u);

  std::vector<int> colour(static_cast<std::size_t>(n), -1);
  std::vector<int> load(static_cast<std::size_t>(colours), 0);
  long long count = 0;
  std::function<void(int)> assign = [&](int v) {
    if (v == n) {
      for (int c = 0; c < colours; ++c)
        if (load[static_cast<std::size_t>(c)] !=
            shape.parts()[static_cast<std::size_t>(c)])
          return;
      ++count;
      return;
    }
    for (int c = 0; c < colours; ++c) {
      if (load[static_cast<std::size_t>(c)] + g.weight(v) >
          shape.parts()[static_cast<std::size_t>(c)])
        continue;
      bool clash = false;
      for (int u : earlier[static_cast<std::size_t>(v)])
        if (colour[static_cast<std::size_t>(u)] == c) {
          clash = true;
          break;
        }
      if (clash) continue;
      colour[static_cast<std::size_t>(v)] = c;
      load[static_cast<std::size_t>(c)] += g.weight(v);
      assign(v + 1);
      load[static_cast<std::size_t>(c)] -= g.weight(v);
      colour[static_cast<std::size_t>(v)] = -1;
    }
  };
  assign(0);
  return Rational(count);
}

}  // namespace chromagraph
