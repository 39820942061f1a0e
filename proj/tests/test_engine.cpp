#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include <gtest/gtest.h>

#include "csfcc/csfcc.hpp"

using namespace csfcc;

namespace {

SymFunc e(Partition lam, Coeff c = 1) { return SymFunc::monomial(Basis::Elementary, std::move(lam), c); }
SymFunc cc33() { return e({6}, 54) + e({5, 1}, 16) + e({4, 2}, 26) + e({2, 2, 2}, 2); }

std::filesystem::path temp_file(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / name;
  std::filesystem::remove(p);
  return p;
}

}  // namespace

TEST(Oracle, SmallGraphs) {
  EXPECT_EQ(csf_oracle(path_graph(2)), e({2}, 2));
  EXPECT_EQ(csf_oracle(path_graph(3)), e({2, 1}) + e({3}, 3));
  EXPECT_EQ(csf_oracle(Graph(3)), e({1, 1, 1}));
  EXPECT_EQ(csf_oracle(cycle_graph(3)), e({3}, 6));
  EXPECT_EQ(csf_oracle(cycle_chord_graph(3, 3)), cc33());
}

TEST(Oracle, PowerSumOfSingleEdge) {
  SymFunc px = csf_oracle_powersum(path_graph(2));
  EXPECT_EQ(px.basis(), Basis::PowerSum);
  EXPECT_EQ(px.coefficient({1, 1}), 1);
  EXPECT_EQ(px.coefficient({2}), -1);
}

TEST(Oracle, ParallelMatchesSerial) {
  for (const Graph& g : {theta_graph(4, 4, 3), cycle_chord_graph(6, 5), multipath_graph({3, 3, 2, 2})}) {
    SymFunc serial = csf_oracle(g);
    for (int jobs : {2, 3, 5}) EXPECT_EQ(csf_oracle(g, {24, jobs}), serial);
  }
}

TEST(Oracle, Bounds) {
  EXPECT_THROW(csf_oracle(cycle_graph(10), {9, 1}), resource_error);
  EXPECT_NO_THROW(csf_oracle(cycle_graph(10), {10, 1}));
  EXPECT_THROW(csf_oracle(path_graph(25)), resource_error);
}

TEST(Formulas, SmallValues) {
  EXPECT_EQ(csf_path(1), e({1}));
  EXPECT_EQ(csf_path(3), e({2, 1}) + e({3}, 3));
  EXPECT_EQ(csf_cycle(3), e({3}, 6));
  EXPECT_EQ(csf_cycle(2), e({2}, 2));
  EXPECT_EQ(csf_cycle(2), csf_oracle(path_graph(2)));
  EXPECT_EQ(csf_cycle_chord(3, 3), cc33());
  EXPECT_THROW(csf_path(0), std::domain_error);
  EXPECT_THROW(csf_cycle(1), std::domain_error);
  EXPECT_THROW(csf_tadpole(3, -1), std::domain_error);
  EXPECT_THROW(csf_tadpole(1, 3), std::domain_error);
  EXPECT_THROW(csf_cycle_chord(1, 4), std::domain_error);
  EXPECT_THROW(csf_cycle_chord_cI(1, 1), std::domain_error);
}

TEST(Formulas, TadpoleEndpoints) {
  for (int n = 3; n <= 8; ++n) {
    EXPECT_EQ(csf_tadpole(n, 0), csf_cycle(n));
    EXPECT_EQ(csf_tadpole(2, n - 2), csf_path(n));
  }
  EXPECT_EQ(csf_tadpole(3, 1), csf_oracle(tadpole_graph(3, 1)));
}

TEST(Formulas, AgreeWithOracle) {
  for (int n = 1; n <= 9; ++n) EXPECT_EQ(csf_path(n), csf_oracle(path_graph(n))) << n;
  for (int n = 3; n <= 9; ++n) EXPECT_EQ(csf_cycle(n), csf_oracle(cycle_graph(n))) << n;
  for (int m = 3; m <= 9; ++m)
    for (int l = 0; m + l <= 9; ++l) EXPECT_EQ(csf_tadpole(m, l), csf_oracle(tadpole_graph(m, l))) << m << "," << l;
  for (int a = 2; a <= 8; ++a)
    for (int b = 2; a + b <= 10; ++b)
      EXPECT_EQ(csf_cycle_chord(a, b), csf_oracle(cycle_chord_graph(a, b))) << a << "," << b;
}

TEST(Formulas, TelescopedCoefficients) {
  EXPECT_EQ(cycle_chord_c({2, 4}, 3), 1);
  EXPECT_EQ(cycle_chord_c({4, 2}, 3), 5);
  EXPECT_EQ(cycle_chord_c({2, 4}, 3) + cycle_chord_c({4, 2}, 3), delta({2, 4}, 3) + delta({4, 2}, 3));
  for (int a = 2; a <= 8; ++a)
    for (int b = 2; a + b <= 10; ++b) EXPECT_EQ(csf_cycle_chord_cI(a, b), csf_cycle_chord(a, b)) << a << "," << b;
  for (int n = 3; n <= 9; ++n) {
    EXPECT_EQ(csf_cycle_chord_cI(n - 1, 1), csf_cycle(n));
    EXPECT_EQ(csf_cycle_chord_cI(1, n - 1), csf_cycle(n));
  }
}

TEST(Formulas, CycleChordPhiSymmetrization) {
  // c_I + c_phi(I) = Delta_I + Delta_phi(I) for every composition
  for (int n = 4; n <= 11; ++n)
    for (const Composition& c : compositions(n))
      for (int b = 2; b <= n - 2; ++b)
        ASSERT_EQ(cycle_chord_c(c, b) + cycle_chord_c(phi(c), b), delta(c, b) + delta(phi(c), b)) << c.str();
}

TEST(Formulas, CorollaryClosedForms) {
  for (int a = 2; a <= 8; ++a)
    for (int b = a; b <= 8; ++b) {
      const int n = a + b;
      SymFunc x = csf_cycle_chord(a, b);
      EXPECT_EQ(x.coefficient({n}), a * b * n);
      EXPECT_EQ(x.coefficient({n - 1, 1}), (a - 1) * (b - 1) * (n - 2));
      EXPECT_TRUE(is_e_positive(x).positive);
      EXPECT_EQ(x, csf_cycle_chord(b, a));
    }
}

TEST(Formulas, PositivityOfPathsAndCycles) {
  for (int n = 1; n <= 14; ++n) EXPECT_TRUE(is_e_positive(csf_path(n)).positive);
  for (int n = 2; n <= 14; ++n) EXPECT_TRUE(is_e_positive(csf_cycle(n)).positive);
}

TEST(Formulas, ChromaticSpecialization) {
  std::vector<std::pair<Graph, SymFunc>> cases{{tadpole_graph(4, 3), csf_tadpole(4, 3)},
                                               {cycle_chord_graph(4, 5), csf_cycle_chord(4, 5)},
                                               {path_graph(8), csf_path(8)},
                                               {cycle_graph(7), csf_cycle(7)}};
  for (const auto& [g, x] : cases)
    for (int k = 0; k <= g.n_vertices(); ++k) EXPECT_EQ(principal_specialization(x, k), count_proper_colorings(g, k));
}

TEST(TripleDeletion, SmallAndRandom) {
  EXPECT_TRUE(check_triple_deletion(Graph(3), 0, 1, 2));
  EXPECT_TRUE(check_triple_deletion(path_graph(6), 0, 2, 4));

  std::mt19937 rng(2024);
  int checked_instances = 0;
  while (checked_instances < 50) {
    std::uniform_int_distribution<int> nv(3, 8);
    const int n = nv(rng);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const int v1 = perm[0], v2 = perm[1], v3 = perm[2];
    std::bernoulli_distribution coin(0.4);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        bool among = (u == v1 || u == v2 || u == v3) && (v == v1 || v == v2 || v == v3);
        if (!among && coin(rng)) edges.emplace_back(u, v);
      }
    ASSERT_TRUE(check_triple_deletion(Graph(n, edges), v1, v2, v3));
    ++checked_instances;
  }
}

TEST(TripleDeletion, CycleChordRecurrence) {
  // path v0..v5 with e1 = v0v3, e2 = v0v5, e3 = v3v5
  auto fam = triple_split_graphs(path_graph(6), 0, 3, 5);
  EXPECT_EQ(fam[split_index({1, 2})], cycle_chord_graph(3, 3));
  EXPECT_TRUE(check_triple_deletion(path_graph(6), 0, 3, 5));
  EXPECT_EQ(csf_oracle(fam[split_index({2, 3})]), csf_cycle_chord(4, 2));
  EXPECT_EQ(csf_oracle(fam[split_index({1})]), csf_tadpole(4, 2));
  EXPECT_EQ(csf_oracle(fam[split_index({3})]), csf_tadpole(3, 3));
  EXPECT_EQ(csf_cycle_chord(3, 3), csf_cycle_chord(4, 2) + csf_tadpole(4, 2) - csf_tadpole(3, 3));
}

TEST(Verify, Reports) {
  auto r1 = verify(parse_graph_spec("cc:4,3"));
  EXPECT_EQ(r1.equal, true);
  EXPECT_TRUE(r1.e_positive.positive);
  EXPECT_TRUE(r1.specialization_ok);
  EXPECT_TRUE(r1.passed());

  auto r2 = verify(parse_graph_spec("theta:3,2,2"));
  EXPECT_FALSE(r2.formula_result);
  EXPECT_FALSE(r2.equal);
  EXPECT_TRUE(r2.e_positive.positive);
  EXPECT_TRUE(r2.positivity_expected);
  EXPECT_TRUE(r2.passed());

  auto r3 = verify(parse_graph_spec("cycle:5"));
  EXPECT_EQ(r3.equal, true);
  EXPECT_EQ(r3.coloring_counts.size(), 6u);

  auto r4 = verify(parse_graph_spec("cc:5,1"));
  EXPECT_EQ(r4.equal, true);

  auto r5 = verify(parse_graph_spec("glambda:2,2,2,1"));
  EXPECT_FALSE(r5.formula_result);
  EXPECT_FALSE(r5.positivity_expected);
  EXPECT_TRUE(r5.specialization_ok);
}

TEST(ThetaScan, CellsAndRows) {
  EXPECT_EQ(theta_cells(4), (std::vector<std::tuple<int, int, int>>{{2, 2, 1}}));
  EXPECT_EQ(theta_cells(5), (std::vector<std::tuple<int, int, int>>{{3, 2, 1}, {2, 2, 2}}));
  for (int n = 3; n <= 12; ++n)
    for (auto [a, b, c] : theta_cells(n)) {
      EXPECT_TRUE(a >= b && b >= c && c >= 1 && b >= 2);
      EXPECT_EQ(a + b + c - 1, n);
    }

  ThetaScanRow r = theta_row(2, 2, 2);
  EXPECT_EQ(r.n, 5);
  EXPECT_EQ(r.method, "oracle");
  SymFunc x = csf_oracle(theta_graph(2, 2, 2));
  EXPECT_EQ(r.e_positive, is_e_positive(x).positive);

  ThetaScanRow chord = theta_row(4, 3, 1);
  EXPECT_EQ(chord.method, "formula");
  EXPECT_EQ(theta_row(4, 3, 1, {}).e_positive, true);
}

TEST(ThetaScan, PositivityForShortThirdPath) {
  ThetaScanOptions opt;
  opt.n_max = 11;
  auto res = scan_theta(opt);
  EXPECT_FALSE(res.error);
  for (const auto& r : res.rows)
    if (r.c <= 2) {
      EXPECT_TRUE(r.e_positive) << r.a << "," << r.b << "," << r.c;
    }
}

TEST(ThetaScan, CheckpointResume) {
  auto path = temp_file("csfcc_theta_checkpoint.jsonl");
  ThetaScanOptions opt;
  opt.n_max = 7;
  opt.checkpoint = path;
  auto first = scan_theta(opt);

  std::vector<bool> resumed_flags;
  opt.n_max = 9;
  opt.on_row = [&](const ThetaScanRow&, bool resumed) { resumed_flags.push_back(resumed); };
  auto second = scan_theta(opt);

  ThetaScanOptions fresh;
  fresh.n_max = 9;
  EXPECT_EQ(second.rows, scan_theta(fresh).rows);
  ASSERT_GE(resumed_flags.size(), first.rows.size());
  for (std::size_t i = 0; i < resumed_flags.size(); ++i) EXPECT_EQ(resumed_flags[i], i < first.rows.size());

  std::ifstream in(path);
  std::string line;
  std::size_t lines = 0;
  while (std::getline(in, line)) {
    auto j = nlohmann::json::parse(line);
    EXPECT_EQ(j.at("schema"), theta_scan_schema);
    EXPECT_EQ(theta_row_from_json(j), second.rows[lines]);
    ++lines;
  }
  EXPECT_EQ(lines, second.rows.size());
  std::filesystem::remove(path);
}

TEST(ThetaScan, PartialResultsOnResourceBound) {
  auto path = temp_file("csfcc_theta_partial.jsonl");
  ThetaScanOptions opt;
  opt.n_max = 9;
  opt.oracle.max_edges = 8;
  opt.checkpoint = path;
  auto res = scan_theta(opt);
  ASSERT_TRUE(res.error);
  for (const auto& r : res.rows) EXPECT_TRUE(r.c == 1 || r.a + r.b + r.c <= 8);
  EXPECT_FALSE(res.rows.empty());

  // a resumed run with the bound lifted drops the stale error marker
  opt.oracle.max_edges = 24;
  auto done = scan_theta(opt);
  EXPECT_FALSE(done.error);
  std::ifstream in(path);
  std::string line;
  while (std::getline(in, line)) EXPECT_FALSE(nlohmann::json::parse(line).contains("error"));
  std::filesystem::remove(path);
}
