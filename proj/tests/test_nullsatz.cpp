#include <gtest/gtest.h>

#include <algorithm>

#include "catalog_entries.hpp"
#include "qnull/nullsatz.hpp"
#include "support.hpp"

using namespace qnull;
using qtest::commutant_map;
using qtest::commutator_ideal;
using qtest::hamilton;
using qtest::nc1;
using qtest::norm_ideal;
using qtest::nrd_x1_map;
using qtest::unit_ideal;
using qtest::y12j_map;
using qtest::zero_ideal;

namespace {

const std::vector<std::string>& CV() {
  static const std::vector<std::string> cv = coordinate_vars(1);
  return cv;
}

Box whole_box(int nvars) { return Box(static_cast<std::size_t>(nvars) * 4, {rat(-1), rat(1)}); }

CPoly yv(const std::string& name) { return CPoly::variable(CV(), name); }

TEST(Catalog, MapsMeanWhatTheyClaim) {
  EXPECT_NO_THROW(qtest::self_check_catalog_maps());
}

TEST(CentralPart, CommutatorIdeal) {
  CentralIdeal jc = central_part(commutator_ideal());
  // Same ideal as <y1_2, y1_3>: identical reduced bases.
  GroebnerBasis expected =
      buchberger({yv("y1_2"), yv("y1_3")}, MonomialOrder::grevlex());
  EXPECT_EQ(jc.basis().elements, expected.elements);
}

TEST(CentralPart, UnitAndNormIdeals) {
  CentralIdeal unit = central_part(unit_ideal());
  EXPECT_TRUE(unit.basis().trivial_unit());

  CentralIdeal norm = central_part(norm_ideal());
  GroebnerBasis expected = buchberger(
      {reduced_norm_poly(NcPoly::variable(hamilton(), 1, 1))}, MonomialOrder::grevlex());
  EXPECT_EQ(norm.basis().elements, expected.elements);
}

TEST(CentralPart, ZeroIdeal) {
  CentralIdeal zero = central_part(zero_ideal());
  EXPECT_TRUE(zero.basis().elements.empty());
  ASSERT_EQ(zero.generators().size(), 1u);
  EXPECT_TRUE(zero.generators()[0].is_zero());
}

TEST(RadD, NormIdealAccept) {
  RadDWitness w{CPoly::variable({"z1"}, "z1"), {CertKind::LastVariablePower}, {}};
  VerdictReport rep =
      check_radd_witness(norm_ideal(), NcPoly::variable(hamilton(), 1, 1), w);
  EXPECT_TRUE(rep.accepted);
  EXPECT_EQ(rep.verdict(), "accept");
  EXPECT_EQ(rep.normal_form, "0");
  EXPECT_EQ(rep.certificate_class, "LastVariablePower");
  EXPECT_FALSE(rep.asserted);
}

TEST(RadD, CommutantAccept) {
  RadDWitness w{CPoly::variable({"z1"}, "z1"), {CertKind::LastVariablePower}, {}};
  VerdictReport rep = check_radd_witness(commutator_ideal(), commutant_map(), w);
  EXPECT_TRUE(rep.accepted);
}

TEST(RadD, CommutantRejectWithNormalForm) {
  RadDWitness w{CPoly::variable({"z1"}, "z1"), {CertKind::LastVariablePower}, {}};
  VerdictReport rep =
      check_radd_witness(commutator_ideal(), NcPoly::variable(hamilton(), 1, 1), w);
  EXPECT_FALSE(rep.accepted);
  // nrd(x1) mod <y1_2, y1_3> leaves the y1_0, y1_1 squares.
  EXPECT_EQ(rep.normal_form, "y1_0^2 + y1_1^2");
}

TEST(RadD, CertificateMismatchRejects) {
  std::vector<std::string> zv = {"z1", "z2"};
  CPoly product = mul_c(CPoly::variable(zv, "z1"), CPoly::variable(zv, "z2"));
  RadDWitness w{product, {CertKind::PositiveDefiniteDiagonal}, {yv("y1_3")}};
  VerdictReport rep = check_radd_witness(commutator_ideal(), commutant_map(), w);
  EXPECT_FALSE(rep.accepted);
  EXPECT_FALSE(rep.certificate_ok);
  // And the product form really is not quasi-anisotropic.
  EXPECT_TRUE(falsify_quasi_anisotropy(product, 100).has_value());
}

TEST(RadD, PddWitnessWithCentralCompanion) {
  std::vector<std::string> zv = {"z1", "z2"};
  CPoly p = add_c(pow_c(CPoly::variable(zv, "z1"), 2),
                  pow_c(CPoly::variable(zv, "z2"), 2));
  RadDWitness w{p, {CertKind::PositiveDefiniteDiagonal}, {yv("y1_3")}};
  VerdictReport rep = check_radd_witness(commutator_ideal(), y12j_map(), w);
  EXPECT_TRUE(rep.accepted);
  EXPECT_EQ(rep.certificate_class, "PositiveDefiniteDiagonal");
}

TEST(RadD, ArityAndResourceErrors) {
  RadDWitness w{CPoly::variable({"z1"}, "z1"), {CertKind::LastVariablePower},
                {yv("y1_3")}};
  EXPECT_THROW(check_radd_witness(commutator_ideal(), commutant_map(), w),
               std::invalid_argument);
  RadDWitness ok{CPoly::variable({"z1"}, "z1"), {CertKind::LastVariablePower}, {}};
  GroebnerLimits tight;
  tight.max_reduction_steps = 1;
  EXPECT_THROW(check_radd_witness(norm_ideal(), nrd_x1_map(), ok, tight),
               ResourceError);
}

TEST(RadDPrime, PassThroughAccepts) {
  RadDPrimeWitness w{CPoly::variable({"w1"}, "w1"), {CertKind::LastVariablePower}, {}};
  VerdictReport rep =
      check_raddprime_witness(norm_ideal(), NcPoly::variable(hamilton(), 1, 1), w);
  EXPECT_TRUE(rep.accepted);
}

TEST(RadDPrime, ZeroIdealRejects) {
  RadDPrimeWitness w{CPoly::variable({"w1"}, "w1"), {CertKind::LastVariablePower}, {}};
  VerdictReport rep =
      check_raddprime_witness(zero_ideal(), NcPoly::variable(hamilton(), 1, 1), w);
  EXPECT_FALSE(rep.accepted);
  EXPECT_NE(rep.normal_form, "0");
}

TEST(Transform, WorkedExample) {
  // p = z1^2 + z2^2, f1 = y1_0 gives q = (w1/2 - w2/2 - w3/2)^2 + w4^2 up to
  // the deterministic pool order [y1_0, 1, y1_0 + 1].
  std::vector<std::string> zv = {"z1", "z2"};
  CPoly p = add_c(pow_c(CPoly::variable(zv, "z1"), 2),
                  pow_c(CPoly::variable(zv, "z2"), 2));
  RadDWitness w{p, {CertKind::PositiveDefiniteDiagonal}, {yv("y1_0")}};
  TransformResult result = transform_witness(w, hamilton(), 1, 2);

  ASSERT_EQ(result.power_args.size(), 3u);
  CPoly y = yv("y1_0");
  CPoly y_plus_1 = add_c(y, CPoly::constant(CV(), 1));
  CPoly one = CPoly::constant(CV(), 1);
  auto in_pool = [&](const CPoly& g) {
    return std::find(result.power_args.begin(), result.power_args.end(), g) !=
           result.power_args.end();
  };
  EXPECT_TRUE(in_pool(y));
  EXPECT_TRUE(in_pool(one));
  EXPECT_TRUE(in_pool(y_plus_1));

  // q = (-w1/2 - w2/2 + w3/2)^2 + w4^2 in pool order.
  std::vector<std::string> wv = {"w1", "w2", "w3", "w4"};
  CPoly lin(wv);
  lin.add_term({1, 0, 0, 0}, rat(-1, 2));
  lin.add_term({0, 1, 0, 0}, rat(-1, 2));
  lin.add_term({0, 0, 1, 0}, rat(1, 2));
  CPoly expected_q = add_c(pow_c(lin, 2), pow_c(CPoly::variable(wv, "w4"), 2));
  EXPECT_EQ(result.witness.q, expected_q);

  EXPECT_TRUE(verify_transform_identity(p, w.centrals, result.witness.q,
                                        result.power_args, 2));
  EXPECT_EQ(result.witness.cert.kind, CertKind::Asserted);

  // Certificate-class closure: no counterexample to quasi-anisotropy.
  EXPECT_FALSE(falsify_quasi_anisotropy(result.witness.q, 3000).has_value());

  // The realized companions are central with N_D(g) = g^2.
  for (std::size_t t = 0; t < result.power_args.size(); ++t) {
    EXPECT_TRUE(is_central_function(result.witness.companions[t]));
    EXPECT_EQ(reduced_norm_poly(result.witness.companions[t]),
              pow_c(result.power_args[t], 2));
  }
}

TEST(Transform, PassThroughWithoutCentrals) {
  RadDWitness w{CPoly::variable({"z1"}, "z1"), {CertKind::LastVariablePower}, {}};
  TransformResult result = transform_witness(w, hamilton(), 1, 2);
  EXPECT_TRUE(result.power_args.empty());
  EXPECT_TRUE(result.witness.companions.empty());
  EXPECT_EQ(result.witness.q, CPoly::variable({"w1"}, "w1"));
}

TEST(Transform, AcceptedWitnessStaysAcceptedAfterTransform) {
  std::vector<std::string> zv = {"z1", "z2"};
  CPoly p = add_c(pow_c(CPoly::variable(zv, "z1"), 2),
                  pow_c(CPoly::variable(zv, "z2"), 2));
  RadDWitness w{p, {CertKind::PositiveDefiniteDiagonal}, {yv("y1_3")}};
  TwoSidedIdeal J = commutator_ideal();
  NcPoly f = y12j_map();
  ASSERT_TRUE(check_radd_witness(J, f, w).accepted);

  TransformResult result = transform_witness(w, hamilton(), 1, 2);
  VerdictReport rep = check_raddprime_witness(J, f, result.witness);
  EXPECT_TRUE(rep.accepted);
  EXPECT_TRUE(rep.asserted);  // transformed certificates are Asserted
}

TEST(Transform, RandomIdentityReexpansion) {
  qtest::Rng rng(101);
  std::vector<std::string> zv = {"z1", "z2", "z3"};
  for (int trial = 0; trial < 10; ++trial) {
    CPoly p(zv);
    for (std::size_t t = 0; t < 3; ++t) {
      CPoly::Exponents e(3, 0);
      e[t] = 2;
      p.add_term(e, rat(1 + static_cast<long>(trial % 2)));
    }
    RadDWitness w{p, {CertKind::PositiveDefiniteDiagonal},
                  {qtest::rand_cpoly(rng, CV(), 3, 2), qtest::rand_cpoly(rng, CV(), 3, 2)}};
    TransformResult result = transform_witness(w, hamilton(), 1, 2);
    EXPECT_TRUE(verify_transform_identity(w.p, w.centrals, result.witness.q,
                                          result.power_args, 2));
  }
}

TEST(Ap, AcceptAndReject) {
  EXPECT_TRUE(check_ap_certificate(norm_ideal(), NcPoly::variable(hamilton(), 1, 1),
                                   {{}, 1})
                  .accepted);
  EXPECT_TRUE(check_ap_certificate(commutator_ideal(), commutant_map(), {{}, 1})
                  .accepted);
  for (int k = 1; k <= 3; ++k) {
    VerdictReport rep = check_ap_certificate(
        commutator_ideal(), NcPoly::variable(hamilton(), 1, 1), {{}, k});
    EXPECT_FALSE(rep.accepted) << "k = " << k;
    EXPECT_NE(rep.normal_form, "0");
  }
}

TEST(Ap, CompanionAndGeneralAlgebraNote) {
  VerdictReport rep = check_ap_certificate(commutator_ideal(), y12j_map(),
                                           {{qtest::y13_central_map()}, 2});
  EXPECT_TRUE(rep.accepted);
  EXPECT_TRUE(rep.notes.empty());

  QuatAlgebra A(rat(-2), rat(-1));
  TwoSidedIdeal J(A, 1, {NcPoly::variable(A, 1, 1)});
  VerdictReport flagged =
      check_ap_certificate(J, NcPoly::variable(A, 1, 1), {{}, 1});
  EXPECT_TRUE(flagged.accepted);
  ASSERT_EQ(flagged.notes.size(), 1u);
  EXPECT_NE(flagged.notes[0].find("algebra is not (-1,-1"), std::string::npos);
}

TEST(Ap, InducedRadDWitness) {
  struct Case {
    TwoSidedIdeal J;
    NcPoly f;
    ApCertificate cert;
  };
  std::vector<Case> cases;
  cases.push_back({norm_ideal(), NcPoly::variable(hamilton(), 1, 1), {{}, 1}});
  cases.push_back({commutator_ideal(), commutant_map(), {{}, 1}});
  cases.push_back({commutator_ideal(), y12j_map(), {{qtest::y13_central_map()}, 2}});
  for (auto& c : cases) {
    ASSERT_TRUE(check_ap_certificate(c.J, c.f, c.cert).accepted);
    RadDWitness induced = induce_radd_from_ap(c.J, c.f, c.cert);
    EXPECT_TRUE(check_form_certificate(induced.p, induced.cert));
    VerdictReport rep = check_radd_witness(c.J, c.f, induced);
    EXPECT_TRUE(rep.accepted);
  }
  EXPECT_THROW(induce_radd_from_ap(cases[0].J, cases[0].f, {{}, 3}),
               std::invalid_argument);
}

TEST(ZeroLocus, WorkedCounts) {
  Box box = whole_box(1);
  auto commutant = zero_locus_grid(commutator_ideal(), box, rat(1));
  EXPECT_EQ(commutant.size(), 9u);
  for (const auto& pt : commutant) {
    EXPECT_TRUE(pt[0].coord(2).is_zero());
    EXPECT_TRUE(pt[0].coord(3).is_zero());
    EXPECT_LE(abs_val(pt[0].coord(0)), 1);
    EXPECT_LE(abs_val(pt[0].coord(1)), 1);
  }
  EXPECT_EQ(zero_locus_grid(norm_ideal(), box, rat(1)).size(), 1u);
  EXPECT_EQ(zero_locus_grid(zero_ideal(), box, rat(1)).size(), 81u);
  EXPECT_EQ(zero_locus_grid(unit_ideal(), box, rat(1)).size(), 0u);
}

TEST(ZeroLocus, MatchesCentralZeroSet) {
  Box box = whole_box(1);
  std::vector<TwoSidedIdeal> ideals = {commutator_ideal(), norm_ideal(), zero_ideal(),
                                       unit_ideal()};
  for (const TwoSidedIdeal& J : ideals) {
    auto nc_side = zero_locus_grid(J, box, rat(1));
    auto c_side = central_zero_set_grid(central_part(J), box, rat(1));
    std::vector<std::vector<Rational>> nc_coords;
    for (const auto& pt : nc_side) nc_coords.push_back(coords_of_point(pt));
    std::sort(nc_coords.begin(), nc_coords.end());
    std::sort(c_side.begin(), c_side.end());
    EXPECT_EQ(nc_coords, c_side);
  }
}

TEST(ZeroLocus, FractionalStep) {
  Box box = whole_box(1);
  // Step 1/2 gives 5 values per coordinate: 25 commutant points.
  EXPECT_EQ(zero_locus_grid(commutator_ideal(), box, rat(1, 2)).size(), 25u);
}

TEST(Vanishes, JCommutatorWitness) {
  // x1*j - j*x1 is 2 y1_1 k on the i-commutant, so it fails off y1_1 = 0.
  NcPoly fj = nc1("x1*j - j*x1");
  SampleReport rep = vanishes_on_zero_locus(commutator_ideal(), fj, whole_box(1), rat(1));
  EXPECT_FALSE(rep.success);
  EXPECT_FALSE(rep.failure_point.empty());
  EXPECT_EQ(rep.failure_value, "-2k");  // first grid point has y1_1 = -1

  SampleReport good =
      vanishes_on_zero_locus(commutator_ideal(), commutant_map(), whole_box(1), rat(1));
  EXPECT_TRUE(good.success);
  EXPECT_EQ(good.locus_size, 9u);

  SampleReport zero = vanishes_on_zero_locus(
      commutator_ideal(), NcPoly::zero(hamilton(), 1), whole_box(1), rat(1));
  EXPECT_TRUE(zero.success);
}

TEST(DRadical, SampledConsistency) {
  std::vector<NcPoly> probes = {y12j_map(), NcPoly::variable(hamilton(), 1, 1),
                                NcPoly::zero(hamilton(), 1)};
  DRadicalSampleReport rep =
      check_d_radical_on_samples(commutator_ideal(), probes, whole_box(1), rat(1));
  ASSERT_EQ(rep.probes.size(), 3u);
  EXPECT_EQ(rep.probes[0].status, "consistent");
  EXPECT_EQ(rep.probes[1].status, "consistent-vacuous");
  EXPECT_EQ(rep.probes[2].status, "consistent");
  EXPECT_TRUE(rep.all_consistent);
}

TEST(Soundness, AcceptedWitnessesVanishOnSampledLocus) {
  for (const auto& entry : qtest::build_catalog()) {
    LoadedCertificate cert = elaborate_certificate(entry.file);
    VerdictReport rep;
    if (cert.radd) {
      rep = check_radd_witness(cert.J, cert.f, *cert.radd);
    } else if (cert.raddprime) {
      rep = check_raddprime_witness(cert.J, cert.f, *cert.raddprime);
    } else {
      rep = check_ap_certificate(cert.J, cert.f, *cert.ap);
    }
    EXPECT_EQ(rep.accepted, entry.expect_accept) << entry.name;
    if (rep.accepted && !rep.asserted) {
      SampleReport sampled =
          vanishes_on_zero_locus(cert.J, cert.f, whole_box(cert.J.nvars), rat(1));
      EXPECT_TRUE(sampled.success) << entry.name;
    }
    if (!rep.accepted) {
      EXPECT_NE(rep.normal_form, "0") << entry.name;
    }
  }
}

}  // namespace
