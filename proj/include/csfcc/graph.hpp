#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "partition.hpp"

namespace csfcc {

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..n-1. Edges are stored as (u, v)
/// with u < v, sorted, without duplicates.
class Graph {
public:
  explicit Graph(int n_vertices, std::vector<Edge> edges = {}) : n_(n_vertices), edges_(std::move(edges)) {
    if (n_ < 1) throw std::domain_error("graph needs at least one vertex");
    for (auto& [u, v] : edges_) {
      if (u > v) std::swap(u, v);
      if (u < 0 || v >= n_) throw std::domain_error("edge endpoint out of range");
      if (u == v) throw std::domain_error("loops are not allowed in a simple graph");
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
      throw std::domain_error("duplicate edge in a simple graph");
  }

  int n_vertices() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t n_edges() const { return edges_.size(); }

  bool adjacent(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
  }

  Graph with_edges(const std::vector<Edge>& extra) const {
    std::vector<Edge> all = edges_;
    all.insert(all.end(), extra.begin(), extra.end());
    return Graph(n_, std::move(all));
  }

  std::string str() const {
    std::string s = std::to_string(n_) + ";";
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      if (i > 0) s += ',';
      s += std::to_string(edges_[i].first) + "-" + std::to_string(edges_[i].second);
    }
    return s;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

private:
  int n_;
  std::vector<Edge> edges_;
};

/// Path 0 - 1 - ... - (n-1).
inline Graph path_graph(int n) {
  if (n < 1) throw std::domain_error("path_graph: n must be >= 1");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, std::move(e));
}

/// Cycle on 0..n-1 in cyclic order.
inline Graph cycle_graph(int n) {
  if (n < 3) throw std::domain_error("cycle_graph: n must be >= 3 (shorter cycles need a multi-edge)");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(0, n - 1);
  return Graph(n, std::move(e));
}

/// Tadpole C_m^l: the cycle 0..m-1 with the tail m, m+1, ..., m+l-1 hanging
/// off vertex 0.
inline Graph tadpole_graph(int m, int l) {
  if (m < 3) throw std::domain_error("tadpole_graph: cycle length m must be >= 3");
  if (l < 0) throw std::domain_error("tadpole_graph: tail length l must be >= 0");
  std::vector<Edge> e = cycle_graph(m).edges();
  int prev = 0;
  for (int i = 0; i < l; ++i) {
    e.emplace_back(prev, m + i);
    prev = m + i;
  }
  return Graph(m + l, std::move(e));
}

/// Cycle-chord CC_ab: the cycle v_0..v_{a+b-1} plus the chord v_0 v_a. When
/// a = 1 or b = 1 the chord is already a cycle edge and the result is C_{a+b}.
inline Graph cycle_chord_graph(int a, int b) {
  if (a < 1 || b < 1) throw std::domain_error("cycle_chord_graph: a and b must be >= 1");
  if (a + b < 3) throw std::domain_error("cycle_chord_graph: a + b must be >= 3");
  Graph c = cycle_graph(a + b);
  if (c.adjacent(0, a)) return c;
  return c.with_edges({{0, a}});
}

/// Multipath graph G_lambda: two vertices joined by internally disjoint
/// paths with lambda_1, ..., lambda_l edges.
///
/// Labeling: the endpoints are 0 and lambda_1. The first path runs
/// 0, 1, ..., lambda_1 and the second continues lambda_1, ..., back to 0, so
/// that G_{ab} is cycle_graph(a+b) and G_{ab1} is cycle_chord_graph(a, b)
/// verbatim. Later paths use fresh vertices, walked from 0.
inline Graph multipath_graph(const Partition& lam) {
  if (lam.empty()) throw std::domain_error("multipath_graph: need at least one path");
  if (std::count(lam.parts().begin(), lam.parts().end(), 1) >= 2)
    throw std::domain_error(
        "multipath_graph: at most one path of length 1 is allowed; two would duplicate an edge "
        "(X of G_{...11} equals X of G_{...1}, so pass the reduced partition)");
  const int n = lam.size() - static_cast<int>(lam.length()) + 2;
  const int u = 0, v = lam[0];
  std::vector<Edge> e;
  for (int i = 0; i < lam[0]; ++i) e.emplace_back(i, i + 1);
  int next = lam[0] + 1;
  for (std::size_t k = 1; k < lam.length(); ++k) {
    int prev = k == 1 ? v : u;
    int target = k == 1 ? u : v;
    for (int i = 1; i < lam[k]; ++i) {
      e.emplace_back(prev, next);
      prev = next++;
    }
    e.emplace_back(prev, target);
  }
  return Graph(n, std::move(e));
}

/// Theta graph: the multipath graph on the sorted lengths (a, b, c).
inline Graph theta_graph(int a, int b, int c) { return multipath_graph(Partition{a, b, c}); }

/// Union-find over vertex indices with union by size; no path compression,
/// so unions can be reverted in LIFO order.
class RollbackUnionFind {
public:
  explicit RollbackUnionFind(int n) : parent_(n), size_(n, 1) { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }
  int component_size(int root) const { return size_[root]; }

  /// Joins the classes of roots ra != rb; returns the new root.
  int unite_roots(int ra, int rb) {
    if (size_[ra] < size_[rb]) std::swap(ra, rb);
    parent_[rb] = ra;
    size_[ra] += size_[rb];
    history_.push_back(rb);
    return ra;
  }
  bool unite(int a, int b) {
    int ra = find(a), rb = find(b);
    if (ra == rb) return false;
    unite_roots(ra, rb);
    return true;
  }
  void rollback() {
    int rb = history_.back();
    history_.pop_back();
    int ra = parent_[rb];
    size_[ra] -= size_[rb];
    parent_[rb] = rb;
  }

private:
  std::vector<int> parent_;
  std::vector<int> size_;
  std::vector<int> history_;
};

/// Multiset of component sizes of the spanning subgraph (V, S).
inline Partition component_partition(const Graph& g, const std::vector<Edge>& subset) {
  RollbackUnionFind uf(g.n_vertices());
  for (Edge e : subset) {
    if (!g.adjacent(e.first, e.second)) throw std::invalid_argument("component_partition: edge not in graph");
    uf.unite(e.first, e.second);
  }
  std::vector<int> sizes;
  for (int x = 0; x < g.n_vertices(); ++x)
    if (uf.find(x) == x) sizes.push_back(uf.component_size(x));
  return Partition(std::move(sizes));
}

}  // namespace csfcc
