#include <random>

#include <gtest/gtest.h>

#include "csfcc/render.hpp"
#include "csfcc/symfunc.hpp"

using namespace csfcc;

namespace {

SymFunc e(Partition lam, Coeff c = 1) { return SymFunc::monomial(Basis::Elementary, std::move(lam), c); }
SymFunc p(Partition lam, Coeff c = 1) { return SymFunc::monomial(Basis::PowerSum, std::move(lam), c); }

SymFunc cc33() { return e({6}, 54) + e({5, 1}, 16) + e({4, 2}, 26) + e({2, 2, 2}, 2); }

SymFunc random_e(std::mt19937& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree), coef(-5, 5), terms(0, 4);
  SymFunc f(Basis::Elementary);
  for (int i = terms(rng); i > 0; --i) {
    auto ps = partitions(deg(rng));
    std::uniform_int_distribution<std::size_t> pick(0, ps.size() - 1);
    f.add_term(ps[pick(rng)], coef(rng));
  }
  return f;
}

}  // namespace

TEST(SymFunc, MonomialAndArithmetic) {
  EXPECT_EQ(e({6}, 54).coefficient({6}), 54);
  EXPECT_EQ(e({}, 1).coefficient({}), 1);
  EXPECT_EQ(p({2, 1}, -3).coefficient({2, 1}), -3);
  EXPECT_TRUE(e({3}, 0).is_zero());

  SymFunc f = e({2, 1}) + e({3}, 3);
  EXPECT_EQ(f + SymFunc(Basis::Elementary), f);
  EXPECT_TRUE((e({2}, 2) + e({2}, -2)).is_zero());
  EXPECT_EQ(scale(f, 2), e({2, 1}, 2) + e({3}, 6));
  EXPECT_TRUE(scale(f, 0).is_zero());
  EXPECT_THROW(e({2}) + p({2}), basis_mismatch);
}

TEST(SymFunc, MulE) {
  EXPECT_EQ(mul_e(e({2}), e({2})), e({2, 2}));
  EXPECT_EQ(mul_e(e({1}) - e({2}), e({3})), e({3, 1}) - e({3, 2}));
  EXPECT_EQ(mul_e(e({}), cc33()), cc33());
  EXPECT_THROW(mul_e(e({1}), p({1})), basis_mismatch);
}

TEST(SymFunc, MulERingLaws) {
  std::mt19937 rng(7);
  for (int i = 0; i < 60; ++i) {
    SymFunc f = random_e(rng, 4), g = random_e(rng, 4), h = random_e(rng, 3);
    EXPECT_EQ(mul_e(f, g), mul_e(g, f));
    EXPECT_EQ(mul_e(mul_e(f, g), h), mul_e(f, mul_e(g, h)));
    EXPECT_EQ(mul_e(f, g + h), mul_e(f, g) + mul_e(f, h));
    EXPECT_EQ(mul_e(e({}), f), f);
  }
}

TEST(SymFunc, Coefficient) {
  EXPECT_EQ(cc33().coefficient({4, 2}), 26);
  EXPECT_EQ(cc33().coefficient({3, 3}), 0);
  EXPECT_EQ(SymFunc().coefficient({}), 0);
}

TEST(Newton, LowDegreeImages) {
  EXPECT_EQ(p_to_e(p({1})), e({1}));
  EXPECT_EQ(p_to_e(p({2})), e({1, 1}) - e({2}, 2));
  EXPECT_EQ(p_to_e(p({3})), e({1, 1, 1}) - e({2, 1}, 3) + e({3}, 3));
  EXPECT_EQ(p_to_e(p({})), e({}));
  EXPECT_THROW(p_to_e(e({1})), basis_mismatch);
}

TEST(Newton, PowerSumSpecializesToK) {
  for (int m = 1; m <= 12; ++m) {
    SymFunc img = p_to_e(p({m}));
    for (int k = 0; k <= m; ++k) EXPECT_EQ(principal_specialization(img, k), k) << "m=" << m;
  }
}

TEST(Newton, Linearity) {
  std::mt19937 rng(11);
  for (int n = 1; n <= 7; ++n) {
    auto ps = partitions(n);
    for (const Partition& lam : ps) {
      SymFunc prod = e({});
      for (int part : lam.parts()) prod = mul_e(prod, p_to_e(p({part})));
      ASSERT_EQ(p_to_e(p(lam)), prod) << lam.str();
    }
    std::uniform_int_distribution<std::size_t> pick(0, ps.size() - 1);
    std::uniform_int_distribution<int> coef(-9, 9);
    SymFunc f(Basis::PowerSum), g(Basis::PowerSum);
    for (int i = 0; i < 4; ++i) {
      f.add_term(ps[pick(rng)], coef(rng));
      g.add_term(ps[pick(rng)], coef(rng));
    }
    EXPECT_EQ(p_to_e(f + g), p_to_e(f) + p_to_e(g));
  }
}

TEST(Positivity, Reports) {
  EXPECT_TRUE(is_e_positive(cc33()).positive);
  auto rep = is_e_positive(e({2}) - e({1, 1}));
  EXPECT_FALSE(rep.positive);
  ASSERT_EQ(rep.witnesses.size(), 1u);
  EXPECT_EQ(rep.witnesses[0].first, (Partition{1, 1}));
  EXPECT_EQ(rep.witnesses[0].second, -1);
  EXPECT_TRUE(is_e_positive(SymFunc()).positive);
  EXPECT_THROW(is_e_positive(p({1})), basis_mismatch);

  SymFunc f = e({2}) - e({1, 1});
  f.add_term({3}, 0);
  EXPECT_EQ(is_e_positive(f).witnesses, rep.witnesses);
}

TEST(Specialization, Values) {
  EXPECT_EQ(principal_specialization(e({3}), 3), 1);
  EXPECT_EQ(principal_specialization(e({2, 1}) + e({3}, 3), 2), 2);
  EXPECT_EQ(principal_specialization(cc33(), 2), 2);
  EXPECT_EQ(principal_specialization(p({2, 1}, 5), 3), 45);
  EXPECT_EQ(principal_specialization(e({}, 7), 0), 7);
  EXPECT_THROW(principal_specialization(cc33(), -1), std::domain_error);
}

TEST(Render, TextLatexJson) {
  EXPECT_EQ(to_latex(cc33()), "54e_6+16e_{51}+26e_{42}+2e_{222}");
  EXPECT_EQ(to_text(cc33()), "54e_6 + 16e_51 + 26e_42 + 2e_222");
  EXPECT_EQ(to_latex(e({2}) - e({1, 1})), "e_2-e_{11}");
  EXPECT_EQ(to_latex(e({10, 1}, 3)), "3e_{10,1}");
  EXPECT_EQ(to_text(e({10, 1}, -3)), "-3e_(10,1)");
  EXPECT_EQ(to_latex(e({}, 4)), "4");
  EXPECT_EQ(to_text(SymFunc()), "0");
  EXPECT_EQ(to_text(p({2, 1}, -3)), "-3p_21");

  EXPECT_EQ(to_json(cc33()).dump(), R"({"basis":"e","terms":[[[6],54],[[5,1],16],[[4,2],26],[[2,2,2],2]]})");
  EXPECT_EQ(symfunc_from_json(to_json(cc33())), cc33());
  EXPECT_EQ(symfunc_from_json(to_json(p({3, 1}, -2))), p({3, 1}, -2));
}

TEST(Checked, OverflowAborts) {
  SymFunc big = e({1}, std::numeric_limits<Coeff>::max());
  EXPECT_THROW(big + e({1}), std::overflow_error);
  EXPECT_THROW(scale(big, 2), std::overflow_error);
  EXPECT_EQ(checked::binomial(30, 15), 155117520);
  EXPECT_EQ(checked::binomial(3, 5), 0);
}
