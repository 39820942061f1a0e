#pragma once

#include <algorithm>
#include <thread>
#include <unordered_map>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "symfunc.hpp"

namespace csfcc {

struct OracleOptions {
  /// Largest edge count accepted; the enumeration is exponential in it.
  int max_edges = 24;
  /// Worker threads for the subset enumeration; 0 or 1 runs inline.
  int jobs = 1;
};

namespace detail {

// Component-size multisets are encoded exactly in 120 bits: five bits per
// size class 1..24 holding the number of components of that size.
using SizeKey = unsigned __int128;
inline constexpr int oracle_max_vertices = 24;

inline SizeKey size_bit(int size) { return SizeKey{1} << (5 * (size - 1)); }

struct SizeKeyHash {
  std::size_t operator()(SizeKey k) const {
    auto lo = static_cast<std::uint64_t>(k), hi = static_cast<std::uint64_t>(k >> 64);
    return std::hash<std::uint64_t>{}(lo ^ (hi * 0x9e3779b97f4a7c15ULL));
  }
};

using SizeTally = std::unordered_map<SizeKey, Coeff, SizeKeyHash>;

inline Partition decode_size_key(SizeKey key, int n) {
  std::vector<int> parts;
  for (int size = 1; size <= n; ++size) {
    int count = static_cast<int>(key >> (5 * (size - 1)) & 31U);
    parts.insert(parts.end(), count, size);
  }
  return Partition(std::move(parts));
}

/// Depth-first walk over edge subsets, signed by (-1)^|S|, tallying the
/// component-size multiset of each subset.
///
/// When an edge joins two vertices already connected by the included
/// edges, including or excluding it yields the same component structure for
/// every completion with opposite signs, so the whole subtree cancels and
/// is skipped.
class WhitneyWalker {
public:
  WhitneyWalker(const Graph& g, SizeTally& tally) : edges_(g.edges()), uf_(g.n_vertices()), tally_(tally) {
    key_ = SizeKey(g.n_vertices()) * size_bit(1);
  }

  /// Replays a fixed prefix of include/exclude decisions; false if the
  /// prefix lies in a cancelled subtree.
  bool replay(const std::vector<bool>& decisions) {
    for (std::size_t i = 0; i < decisions.size(); ++i) {
      auto [u, v] = edges_[i];
      int ru = uf_.find(u), rv = uf_.find(v);
      if (ru == rv) return false;
      if (decisions[i]) {
        join(ru, rv);
        sign_ = -sign_;
      }
    }
    return true;
  }

  void walk(std::size_t i) {
    if (i == edges_.size()) {
      Coeff& slot = tally_[key_];
      slot = checked::add(slot, sign_);
      return;
    }
    auto [u, v] = edges_[i];
    int ru = uf_.find(u), rv = uf_.find(v);
    if (ru == rv) return;
    walk(i + 1);
    SizeKey saved = key_;
    join(ru, rv);
    sign_ = -sign_;
    walk(i + 1);
    sign_ = -sign_;
    uf_.rollback();
    key_ = saved;
  }

  /// Collects the surviving decision prefixes of the given depth.
  void prefixes(std::size_t i, std::size_t depth, std::vector<bool>& cur, std::vector<std::vector<bool>>& out) {
    if (i == depth) {
      out.push_back(cur);
      return;
    }
    auto [u, v] = edges_[i];
    int ru = uf_.find(u), rv = uf_.find(v);
    if (ru == rv) return;
    cur.push_back(false);
    prefixes(i + 1, depth, cur, out);
    cur.back() = true;
    SizeKey saved = key_;
    join(ru, rv);
    prefixes(i + 1, depth, cur, out);
    uf_.rollback();
    key_ = saved;
    cur.pop_back();
  }

private:
  void join(int ru, int rv) {
    int a = uf_.component_size(ru), b = uf_.component_size(rv);
    key_ = key_ - size_bit(a) - size_bit(b) + size_bit(a + b);
    uf_.unite_roots(ru, rv);
  }

  const std::vector<Edge>& edges_;
  RollbackUnionFind uf_;
  SizeTally& tally_;
  SizeKey key_ = 0;
  Coeff sign_ = 1;
};

}  // namespace detail

/// Power-sum expansion X_G = sum over S subset of E of (-1)^|S| p_{lambda(S)},
/// lambda(S) the component sizes of (V, S).
inline SymFunc csf_oracle_powersum(const Graph& g, const OracleOptions& opt = {}) {
  if (static_cast<int>(g.n_edges()) > opt.max_edges)
    throw resource_error("oracle: " + std::to_string(g.n_edges()) + " edges exceeds the bound of " +
                         std::to_string(opt.max_edges));
  if (g.n_vertices() > detail::oracle_max_vertices)
    throw resource_error("oracle: more than " + std::to_string(detail::oracle_max_vertices) + " vertices");

  std::vector<detail::SizeTally> tallies;
  const int jobs = std::max(1, opt.jobs);
  if (jobs == 1 || g.n_edges() < 8) {
    tallies.emplace_back();
    detail::WhitneyWalker(g, tallies.back()).walk(0);
  } else {
    std::size_t depth = std::min<std::size_t>(g.n_edges() / 2, 10);
    std::vector<std::vector<bool>> tasks;
    {
      detail::SizeTally unused;
      std::vector<bool> cur;
      detail::WhitneyWalker(g, unused).prefixes(0, depth, cur, tasks);
    }
    tallies.resize(jobs);
    std::vector<std::thread> workers;
    for (int w = 0; w < jobs; ++w) {
      workers.emplace_back([&, w] {
        for (std::size_t t = w; t < tasks.size(); t += jobs) {
          detail::WhitneyWalker walker(g, tallies[w]);
          if (walker.replay(tasks[t])) walker.walk(depth);
        }
      });
    }
    for (auto& th : workers) th.join();
  }

  SymFunc result(Basis::PowerSum);
  for (const auto& tally : tallies)
    for (const auto& [key, c] : tally) result.add_term(detail::decode_size_key(key, g.n_vertices()), c);
  return result;
}

/// Brute-force e-expansion of X_G via the subset expansion and Newton's
/// identities. Uses none of the closed formulas.
inline SymFunc csf_oracle(const Graph& g, const OracleOptions& opt = {}) {
  return p_to_e(csf_oracle_powersum(g, opt));
}

}  // namespace csfcc
