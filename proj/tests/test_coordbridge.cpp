#include <gtest/gtest.h>

#include "qnull/coordbridge.hpp"
#include "support.hpp"

using namespace qnull;

namespace {

const QuatAlgebra H(rat(-1), rat(-1));

NcPoly x1(int n = 1) { return NcPoly::variable(H, n, 1); }

Quaternion unit(int k) { return Quaternion::basis_unit(H, k); }

CPoly yvar(int nvars, int i, int j) {
  return CPoly::variable(coordinate_vars(nvars), coordinate_var(i, j));
}

TEST(Expand, Constant) {
  ComponentVector v = expand(NcPoly::constant(H, 1, Quaternion::one(H)));
  EXPECT_EQ(v.components[0], CPoly::constant(coordinate_vars(1), 1));
  for (int k = 1; k < 4; ++k) EXPECT_TRUE(v.components[k].is_zero());
}

TEST(Expand, VariableTimesI) {
  // x1 * i with a = b = -1 expands to (-y11, y10, y13, -y12).
  ComponentVector v = expand(scale_right(x1(), unit(1)));
  EXPECT_EQ(v.components[0], neg_c(yvar(1, 1, 1)));
  EXPECT_EQ(v.components[1], yvar(1, 1, 0));
  EXPECT_EQ(v.components[2], yvar(1, 1, 3));
  EXPECT_EQ(v.components[3], neg_c(yvar(1, 1, 2)));
}

TEST(Expand, CommutatorWithI) {
  NcPoly comm = sub(scale_right(x1(), unit(1)), scale_left(unit(1), x1()));
  ComponentVector v = expand(comm);
  EXPECT_TRUE(v.components[0].is_zero());
  EXPECT_TRUE(v.components[1].is_zero());
  EXPECT_EQ(v.components[2], scale_c(2, yvar(1, 1, 3)));
  EXPECT_EQ(v.components[3], scale_c(-2, yvar(1, 1, 2)));
}

TEST(Expand, IsLinear) {
  qtest::Rng rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    NcPoly f = qtest::rand_ncpoly(rng, H, 2);
    NcPoly g = qtest::rand_ncpoly(rng, H, 2);
    ComponentVector vf = expand(f), vg = expand(g), vsum = expand(add(f, g));
    for (int k = 0; k < 4; ++k)
      EXPECT_EQ(vsum.components[k], add_c(vf.components[k], vg.components[k]));
  }
}

TEST(Expand, PointwiseAgreement) {
  qtest::Rng rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    NcPoly f = qtest::rand_ncpoly(rng, H, 2);
    ComponentVector v = expand(f);
    for (int t = 0; t < 20; ++t) {
      auto point = qtest::rand_point(rng, H, 2);
      auto coords = coords_of_point(point);
      Quaternion reassembled(H, eval_c(v.components[0], coords),
                             eval_c(v.components[1], coords),
                             eval_c(v.components[2], coords),
                             eval_c(v.components[3], coords));
      EXPECT_EQ(reassembled, eval(f, point));
    }
  }
}

TEST(Realize, ConstantAndProjection) {
  ComponentVector one(H, 1);
  one.components[0] = CPoly::constant(coordinate_vars(1), 1);
  EXPECT_TRUE(equals_fn(realize(one), NcPoly::constant(H, 1, Quaternion::one(H))));

  ComponentVector proj(H, 1);
  proj.components[0] = yvar(1, 1, 0);
  NcPoly f = realize(proj);
  EXPECT_EQ(eval(f, {Quaternion(H, rat(2), rat(5), rat(0), rat(0))}),
            Quaternion::scalar(H, rat(2)));
}

TEST(Realize, RoundTripExample) {
  ComponentVector v(H, 1);
  v.components[0] = yvar(1, 1, 2);
  v.components[1] = yvar(1, 1, 3);
  EXPECT_EQ(expand(realize(v)), v);
}

TEST(Realize, RoundTripRandom) {
  qtest::Rng rng(37);
  const auto cv = coordinate_vars(1);
  for (int trial = 0; trial < 15; ++trial) {
    ComponentVector v(H, 1);
    for (int k = 0; k < 4; ++k) v.components[k] = qtest::rand_cpoly(rng, cv, 2, 3);
    EXPECT_EQ(expand(realize(v)), v);
  }
}

TEST(Realize, RoundTripGeneralAlgebra) {
  QuatAlgebra A(rat(-2), rat(-3));
  qtest::Rng rng(43);
  const auto cv = coordinate_vars(1);
  for (int trial = 0; trial < 8; ++trial) {
    ComponentVector v(A, 1);
    for (int k = 0; k < 4; ++k) v.components[k] = qtest::rand_cpoly(rng, cv, 2, 2);
    EXPECT_EQ(expand(realize(v)), v);
  }
}

TEST(ReducedNorm, Examples) {
  CPoly expected = add_c(add_c(pow_c(yvar(1, 1, 0), 2), pow_c(yvar(1, 1, 1), 2)),
                         add_c(pow_c(yvar(1, 1, 2), 2), pow_c(yvar(1, 1, 3), 2)));
  EXPECT_EQ(reduced_norm_poly(x1()), expected);
  // Norm of x1 * i equals norm of x1 since nrd(i) = 1.
  EXPECT_EQ(reduced_norm_poly(scale_right(x1(), unit(1))), expected);

  Quaternion c(H, rat(1), rat(2), rat(0), rat(-1));
  EXPECT_EQ(reduced_norm_poly(NcPoly::constant(H, 1, c)),
            CPoly::constant(coordinate_vars(1), nrd(c)));
}

TEST(ReducedNorm, PointwiseAndTrace) {
  qtest::Rng rng(53);
  for (int trial = 0; trial < 15; ++trial) {
    NcPoly f = qtest::rand_ncpoly(rng, H, 1);
    CPoly n = reduced_norm_poly(f);
    CPoly t = reduced_trace_poly(f);
    for (int u = 0; u < 5; ++u) {
      auto point = qtest::rand_point(rng, H, 1);
      auto coords = coords_of_point(point);
      EXPECT_EQ(eval_c(n, coords), nrd(eval(f, point)));
      EXPECT_EQ(eval_c(t, coords), trd(eval(f, point)));
    }
  }
}

TEST(ReducedNorm, Multiplicative) {
  qtest::Rng rng(59);
  QuatAlgebra A(rat(-1), rat(-2));
  for (int trial = 0; trial < 10; ++trial) {
    const QuatAlgebra& alg = trial % 2 == 0 ? H : A;
    NcPoly f = qtest::rand_ncpoly(rng, alg, 1, 2, 2);
    NcPoly g = qtest::rand_ncpoly(rng, alg, 1, 2, 2);
    EXPECT_EQ(reduced_norm_poly(mul_poly(f, g)),
              mul_c(reduced_norm_poly(f), reduced_norm_poly(g)));
  }
}

TEST(Central, CharacterizedByComponents) {
  qtest::Rng rng(61);
  for (int trial = 0; trial < 10; ++trial) {
    NcPoly f = qtest::rand_ncpoly(rng, H, 1, 2, 2);
    NcPoly central = extract_component(f, 0);
    EXPECT_TRUE(is_central_function(central));
    ComponentVector v = expand(central);
    EXPECT_TRUE(v.components[1].is_zero() && v.components[2].is_zero() &&
                v.components[3].is_zero());
  }
  EXPECT_FALSE(is_central_function(x1()));
}

}  // namespace
