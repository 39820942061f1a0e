#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "partition.hpp"

namespace csfcc {

/// Polynomial in one variable with exact coefficients; index = degree.
using Polynomial = std::vector<Coeff>;

inline Coeff evaluate(const Polynomial& poly, Coeff x) {
  Coeff r = 0;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) r = checked::add(checked::mul(r, x), *it);
  return r;
}

namespace detail {

using AdjMask = std::vector<std::uint64_t>;

inline AdjMask adjacency_masks(const Graph& g) {
  if (g.n_vertices() > 64) throw resource_error("graph too large for bitmask routines (> 64 vertices)");
  AdjMask adj(g.n_vertices(), 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= std::uint64_t{1} << v;
    adj[v] |= std::uint64_t{1} << u;
  }
  return adj;
}

inline std::uint64_t drop_bit(std::uint64_t mask, int v) {
  std::uint64_t low = mask & ((std::uint64_t{1} << v) - 1);
  std::uint64_t high = v + 1 < 64 ? mask >> (v + 1) : 0;
  return low | (high << v);
}

inline AdjMask remove_vertex(const AdjMask& adj, int v) {
  AdjMask out;
  out.reserve(adj.size() - 1);
  for (int x = 0; x < static_cast<int>(adj.size()); ++x)
    if (x != v) out.push_back(drop_bit(adj[x], v));
  return out;
}

inline Polynomial poly_mul_linear(const Polynomial& p, Coeff c) {
  // p(x) * (x + c)
  Polynomial r(p.size() + 1, 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    r[i + 1] = checked::add(r[i + 1], p[i]);
    r[i] = checked::add(r[i], checked::mul(p[i], c));
  }
  return r;
}

inline Polynomial poly_sub(Polynomial a, const Polynomial& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = checked::sub(a[i], b[i]);
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

class ChromaticSolver {
public:
  Polynomial solve(const AdjMask& adj) {
    const int n = static_cast<int>(adj.size());
    if (n == 0) return {1};
    if (auto it = memo_.find(adj); it != memo_.end()) return it->second;

    Polynomial result;
    int min_v = 0, min_deg = 65;
    bool complete = true;
    for (int v = 0; v < n; ++v) {
      int d = std::popcount(adj[v]);
      if (d < min_deg) {
        min_deg = d;
        min_v = v;
      }
      if (d != n - 1) complete = false;
    }
    if (complete) {
      // falling factorial x (x-1) ... (x-n+1)
      result = {1};
      for (int i = 0; i < n; ++i) result = poly_mul_linear(result, -i);
    } else if (min_deg <= 1) {
      // isolated vertex: factor x; leaf: factor (x - 1)
      result = poly_mul_linear(solve(remove_vertex(adj, min_v)), -min_deg);
    } else {
      int u = min_v;
      int w = std::countr_zero(adj[u]);
      AdjMask deleted = adj;
      deleted[u] &= ~(std::uint64_t{1} << w);
      deleted[w] &= ~(std::uint64_t{1} << u);
      AdjMask contracted = deleted;
      std::uint64_t merged = contracted[u] | contracted[w];
      contracted[u] = merged;
      for (int x = 0; x < n; ++x)
        if (merged >> x & 1U) contracted[x] |= std::uint64_t{1} << u;
      result = poly_sub(solve(deleted), solve(remove_vertex(contracted, w)));
    }
    memo_.emplace(adj, result);
    return result;
  }

private:
  std::map<AdjMask, Polynomial> memo_;
};

}  // namespace detail

/// Chromatic polynomial by deletion-contraction, peeling isolated vertices,
/// leaves and complete graphs directly.
inline Polynomial chromatic_polynomial(const Graph& g) {
  detail::ChromaticSolver solver;
  return solver.solve(detail::adjacency_masks(g));
}

/// Number of proper colorings V -> {1..k}.
inline Coeff count_proper_colorings(const Graph& g, int k) {
  if (k < 0) throw std::domain_error("count_proper_colorings: k must be >= 0");
  return evaluate(chromatic_polynomial(g), k);
}

inline constexpr int default_stable_partition_bound = 12;

/// Types of all partitions of V into independent sets.
inline std::set<Partition, TermOrder> stable_partition_types(const Graph& g,
                                                               int max_vertices = default_stable_partition_bound) {
  const int n = g.n_vertices();
  if (n > max_vertices)
    throw resource_error("stable_partition_types: " + std::to_string(n) + " vertices exceeds the bound of " +
                         std::to_string(max_vertices));
  const detail::AdjMask adj = detail::adjacency_masks(g);
  std::set<Partition, TermOrder> types;
  std::vector<std::uint64_t> blocks;
  std::vector<int> sizes;
  auto rec = [&](auto&& self, int v) -> void {
    if (v == n) {
      types.insert(Partition(sizes));
      return;
    }
    const std::uint64_t bit = std::uint64_t{1} << v;
    for (std::size_t j = 0; j < blocks.size(); ++j) {
      if (blocks[j] & adj[v]) continue;
      blocks[j] |= bit;
      ++sizes[j];
      self(self, v + 1);
      --sizes[j];
      blocks[j] &= ~bit;
    }
    blocks.push_back(bit);
    sizes.push_back(1);
    self(self, v + 1);
    blocks.pop_back();
    sizes.pop_back();
  };
  rec(rec, 0);
  return types;
}

struct NicenessReport {
  bool nice = true;
  /// (lambda, mu): lambda is attained, mu is dominated by lambda but not attained.
  std::optional<std::pair<Partition, Partition>> witness;
};

/// A graph is nice when its set of stable-partition types is closed
/// downward under dominance. The witness is the first failure with lambda
/// and mu both scanned in TermOrder.
inline NicenessReport is_nice(const Graph& g, int max_vertices = default_stable_partition_bound) {
  const auto types = stable_partition_types(g, max_vertices);
  const auto all = partitions(g.n_vertices());
  for (const Partition& lam : types) {
    for (const Partition& mu : all) {
      if (mu == lam || types.count(mu) != 0) continue;
      if (dominance_leq(mu, lam)) return {false, std::pair{lam, mu}};
    }
  }
  return {};
}

/// The eight graphs G_S = G + {e_j : j in S} for e_1 = v1v2, e_2 = v1v3,
/// e_3 = v2v3. Keyed by the bitmask of S (bit j-1 for e_j).
inline std::vector<Graph> triple_split_graphs(const Graph& g, int v1, int v2, int v3) {
  const int n = g.n_vertices();
  for (int v : {v1, v2, v3})
    if (v < 0 || v >= n) throw std::domain_error("triple_split_graphs: vertex out of range");
  if (v1 == v2 || v1 == v3 || v2 == v3) throw std::domain_error("triple_split_graphs: vertices must be distinct");
  if (g.adjacent(v1, v2) || g.adjacent(v1, v3) || g.adjacent(v2, v3))
    throw std::domain_error("triple_split_graphs: the three vertices must be pairwise non-adjacent");
  const Edge e[3] = {{v1, v2}, {v1, v3}, {v2, v3}};
  std::vector<Graph> out;
  for (int s = 0; s < 8; ++s) {
    std::vector<Edge> extra;
    for (int j = 0; j < 3; ++j)
      if (s >> j & 1) extra.push_back(e[j]);
    out.push_back(g.with_edges(extra));
  }
  return out;
}

/// Bitmask index into triple_split_graphs for the subset S of {1, 2, 3}.
constexpr int split_index(std::initializer_list<int> s) {
  int m = 0;
  for (int j : s) m |= 1 << (j - 1);
  return m;
}

}  // namespace csfcc
