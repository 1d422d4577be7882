#include <gtest/gtest.h>

#include "qnull/groebner.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace qnull;

namespace {

const std::vector<std::string> Y2 = {"y1", "y2"};
const std::vector<std::string> Y3 = {"y1", "y2", "y3"};

CPoly var(const std::vector<std::string>& vars, const std::string& n) {
  return CPoly::variable(vars, n);
}

CPoly term(const std::vector<std::string>& vars, CPoly::Exponents e, Rational c) {
  CPoly p(vars);
  p.add_term(e, c);
  return p;
}

TEST(Order, LexAndGrevlex) {
  MonomialOrder lex = MonomialOrder::lex();
  MonomialOrder grevlex = MonomialOrder::grevlex();
  // lex y1 > y2: y1 beats any power of y2.
  EXPECT_TRUE(lex.less({0, 3}, {1, 0}));
  EXPECT_FALSE(lex.less({1, 0}, {0, 3}));
  // grevlex is degree-first.
  EXPECT_TRUE(grevlex.less({1, 0}, {0, 3}));
  // Same degree: x^2 > xy > y^2.
  EXPECT_TRUE(grevlex.less({1, 1}, {2, 0}));
  EXPECT_TRUE(grevlex.less({0, 2}, {1, 1}));
  // Permuted significance order reverses the lex verdict.
  MonomialOrder rev{MonomialOrder::Kind::lex, {1, 0}};
  EXPECT_TRUE(rev.less({1, 0}, {0, 3}));
}

TEST(Buchberger, SingleGenerator) {
  GroebnerBasis basis = buchberger({var(Y2, "y1")}, MonomialOrder::lex());
  ASSERT_EQ(basis.elements.size(), 1u);
  EXPECT_EQ(basis.elements[0], var(Y2, "y1"));
}

TEST(Buchberger, TwoCoordinateGenerators) {
  GroebnerBasis basis =
      buchberger({var(Y3, "y2"), var(Y3, "y3")}, MonomialOrder::grevlex());
  ASSERT_EQ(basis.elements.size(), 2u);
  EXPECT_EQ(basis.elements[0], var(Y3, "y2"));
  EXPECT_EQ(basis.elements[1], var(Y3, "y3"));
}

TEST(Buchberger, LexTextbookExample) {
  // {y1^2 - y2, y1*y2 - 1} under lex y1 > y2 has reduced basis
  // {y1 - y2^2, y2^3 - 1}.
  CPoly g1 = sub_c(term(Y2, {2, 0}, 1), var(Y2, "y2"));
  CPoly g2 = sub_c(term(Y2, {1, 1}, 1), CPoly::constant(Y2, 1));
  GroebnerBasis basis = buchberger({g1, g2}, MonomialOrder::lex());
  ASSERT_EQ(basis.elements.size(), 2u);
  EXPECT_EQ(basis.elements[0], sub_c(var(Y2, "y1"), term(Y2, {0, 2}, 1)));
  EXPECT_EQ(basis.elements[1], sub_c(term(Y2, {0, 3}, 1), CPoly::constant(Y2, 1)));
  EXPECT_TRUE(ideal_member(sub_c(term(Y2, {0, 3}, 1), CPoly::constant(Y2, 1)), basis));
}

TEST(Buchberger, GrevlexSameIdeal) {
  CPoly g1 = sub_c(term(Y2, {2, 0}, 1), var(Y2, "y2"));
  CPoly g2 = sub_c(term(Y2, {1, 1}, 1), CPoly::constant(Y2, 1));
  GroebnerBasis basis = buchberger({g1, g2}, MonomialOrder::grevlex());
  ASSERT_EQ(basis.elements.size(), 3u);
  EXPECT_EQ(basis.elements[0], g1);
  EXPECT_EQ(basis.elements[1], g2);
  EXPECT_EQ(basis.elements[2], sub_c(term(Y2, {0, 2}, 1), var(Y2, "y1")));
}

TEST(Buchberger, ZeroAndUnitIdeals) {
  GroebnerBasis zero = buchberger({CPoly(Y2)}, MonomialOrder::grevlex());
  EXPECT_TRUE(zero.elements.empty());
  EXPECT_EQ(normal_form(var(Y2, "y1"), zero), var(Y2, "y1"));
  EXPECT_TRUE(ideal_member(CPoly(Y2), zero));
  EXPECT_FALSE(ideal_member(var(Y2, "y1"), zero));

  GroebnerBasis unit =
      buchberger({CPoly::constant(Y2, rat(3))}, MonomialOrder::grevlex());
  EXPECT_TRUE(unit.trivial_unit());
  EXPECT_TRUE(ideal_member(var(Y2, "y2"), unit));
}

TEST(NormalForm, Examples) {
  GroebnerBasis basis = buchberger({var(Y2, "y1")}, MonomialOrder::grevlex());
  EXPECT_TRUE(normal_form(term(Y2, {2, 0}, 1), basis).is_zero());
  EXPECT_EQ(normal_form(add_c(var(Y2, "y1"), var(Y2, "y2")), basis), var(Y2, "y2"));
}

TEST(NormalForm, Idempotent) {
  qtest::Rng rng(71);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<CPoly> gens = {qtest::rand_cpoly(rng, Y2, 3, 3),
                               qtest::rand_cpoly(rng, Y2, 3, 3)};
    if (gens[0].is_zero() && gens[1].is_zero()) continue;
    GroebnerBasis basis = buchberger(gens, MonomialOrder::grevlex());
    CPoly f = qtest::rand_cpoly(rng, Y2, 4, 4);
    CPoly nf = normal_form(f, basis);
    EXPECT_EQ(normal_form(nf, basis), nf);
  }
}

TEST(Buchberger, SPolynomialsReduceToZero) {
  qtest::Rng rng(73);
  for (int trial = 0; trial < 15; ++trial) {
    std::vector<CPoly> gens = {qtest::rand_cpoly(rng, Y3, 3, 3),
                               qtest::rand_cpoly(rng, Y3, 3, 3),
                               qtest::rand_cpoly(rng, Y3, 2, 2)};
    GroebnerBasis basis = buchberger(gens, MonomialOrder::grevlex());
    for (std::size_t i = 0; i < basis.elements.size(); ++i) {
      for (std::size_t j = i + 1; j < basis.elements.size(); ++j) {
        CPoly s = detail::s_polynomial(basis.elements[i], basis.elements[j],
                                       basis.order);
        EXPECT_TRUE(normal_form(s, basis).is_zero());
      }
    }
  }
}

TEST(Buchberger, Deterministic) {
  qtest::Rng rng(79);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<CPoly> gens = {qtest::rand_cpoly(rng, Y3, 3, 3),
                               qtest::rand_cpoly(rng, Y3, 3, 3)};
    GroebnerBasis b1 = buchberger(gens, MonomialOrder::grevlex());
    GroebnerBasis b2 = buchberger(gens, MonomialOrder::grevlex());
    EXPECT_EQ(b1.elements, b2.elements);
  }
}

TEST(Buchberger, MembershipMatchesCofactorOracle) {
  qtest::Rng rng(83);
  const int bound = 6;
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<CPoly> gens;
    int ngens = 2 + (trial % 2);
    for (int g = 0; g < ngens; ++g) {
      CPoly cand = qtest::rand_cpoly(rng, Y3, 3, 3);
      if (!cand.is_zero()) gens.push_back(cand);
    }
    if (gens.empty()) continue;
    GroebnerBasis basis = buchberger(gens, MonomialOrder::grevlex());

    // Constructed member: cofactors of degree <= 2 guarantee the oracle
    // sees it within the bound.
    CPoly member(Y3);
    for (const CPoly& g : gens)
      member = add_c(member, mul_c(qtest::rand_cpoly(rng, Y3, 2, 2), g));
    EXPECT_TRUE(ideal_member(member, basis));
    EXPECT_TRUE(qtest::membership_by_cofactors(member, gens, bound));

    // Random probe: both deciders must agree.
    CPoly probe = qtest::rand_cpoly(rng, Y3, 3, 2);
    bool gb = ideal_member(probe, basis);
    bool oracle = qtest::membership_by_cofactors(probe, gens, bound);
    EXPECT_EQ(gb, oracle);
    ++checked;
  }
  EXPECT_GE(checked, 50);
}

TEST(Buchberger, ResourceCaps) {
  CPoly g1 = sub_c(term(Y2, {2, 0}, 1), var(Y2, "y2"));
  CPoly g2 = sub_c(term(Y2, {1, 1}, 1), CPoly::constant(Y2, 1));
  GroebnerLimits tight;
  tight.max_basis_size = 2;
  EXPECT_THROW(buchberger({g1, g2}, MonomialOrder::grevlex(), tight), ResourceError);
  GroebnerLimits tiny_steps;
  tiny_steps.max_reduction_steps = 1;
  EXPECT_THROW(buchberger({g1, g2}, MonomialOrder::grevlex(), tiny_steps),
               ResourceError);
}

}  // namespace
