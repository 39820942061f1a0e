#pragma once

#include <chrono>
#include <optional>
#include <vector>

#include "coloring.hpp"
#include "graph_spec.hpp"
#include "oracle.hpp"

namespace csfcc {

struct PhaseTimings {
  double formula_ms = 0;
  double oracle_ms = 0;
  double specialization_ms = 0;
};

struct VerificationReport {
  GraphSpec spec;
  int n_vertices = 0;
  std::size_t n_edges = 0;
  std::optional<SymFunc> formula_result;
  SymFunc oracle_result;
  /// Term-by-term agreement; empty when the family has no closed formula.
  std::optional<bool> equal;
  EPositivityReport e_positive;
  bool positivity_expected = false;
  /// Proper-coloring counts for k = 0..n and whether X_G specializes to them.
  std::vector<Coeff> coloring_counts;
  bool specialization_ok = false;
  PhaseTimings timings;

  bool passed() const {
    if (equal == false || !specialization_ok) return false;
    return !(positivity_expected && !e_positive.positive);
  }
};

namespace detail {
template <class Fn>
auto timed(double& ms, Fn&& fn) {
  auto start = std::chrono::steady_clock::now();
  auto r = fn();
  ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}
}  // namespace detail

/// Runs the closed formula (when the family has one) and the oracle, and
/// cross-checks the oracle against proper-coloring counts for k = 0..n.
inline VerificationReport verify(const GraphSpec& spec, const OracleOptions& opt = {}) {
  VerificationReport rep;
  rep.spec = spec;
  const Graph g = build_graph(spec);
  rep.n_vertices = g.n_vertices();
  rep.n_edges = g.n_edges();
  rep.formula_result = detail::timed(rep.timings.formula_ms, [&] { return closed_formula(spec); });
  rep.oracle_result = detail::timed(rep.timings.oracle_ms, [&] { return csf_oracle(g, opt); });
  if (rep.formula_result) rep.equal = *rep.formula_result == rep.oracle_result;
  rep.e_positive = is_e_positive(rep.oracle_result);
  rep.positivity_expected = positivity_known(spec);
  rep.specialization_ok = detail::timed(rep.timings.specialization_ms, [&] {
    const Polynomial chi = chromatic_polynomial(g);
    bool ok = true;
    for (int k = 0; k <= g.n_vertices(); ++k) {
      rep.coloring_counts.push_back(evaluate(chi, k));
      ok = ok && principal_specialization(rep.oracle_result, k) == rep.coloring_counts.back();
    }
    return ok;
  });
  return rep;
}

/// Checks both triple-deletion identities on G and the vertices v1, v2, v3
/// (pairwise non-adjacent), computing every X_{G_S} with the oracle:
///   X_{G_12}  = X_{G_1}  + X_{G_23} - X_{G_3}
///   X_{G_123} = X_{G_13} + X_{G_23} - X_{G_3}
inline bool check_triple_deletion(const Graph& g, int v1, int v2, int v3, const OracleOptions& opt = {}) {
  const auto family = triple_split_graphs(g, v1, v2, v3);
  auto x = [&](std::initializer_list<int> s) { return csf_oracle(family[split_index(s)], opt); };
  const SymFunc x1 = x({1}), x3 = x({3}), x12 = x({1, 2}), x13 = x({1, 3}), x23 = x({2, 3}), x123 = x({1, 2, 3});
  return x12 == x1 + x23 - x3 && x123 == x13 + x23 - x3;
}

}  // namespace csfcc
