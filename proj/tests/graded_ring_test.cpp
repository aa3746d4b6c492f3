#include "chowforge/graded_ring.hpp"

#include <gtest/gtest.h>

#include <random>

#include "chowforge/error.hpp"

namespace chowforge {
namespace {

RingPresentation projective_line_bundle() {
  return ring_define({{"z", 1}, {"c1", 1}, {"c2", 2}}, {"z^2 + c1*z + c2"});
}

RingPresentation one_point_ring() {
  return ring_define({{"psi1", 1}, {"delta", 1}},
                     {"delta*psi1 + (2*g-1)*delta^2",
                      "psi1^2 + (16*g^4-24*g^3+16*g^2+8*g-3)/(4*(2*g+1)^2*(g+1)^2)*delta^2", "delta^3"});
}

TEST(RingDefine, QuadraticRelationRewritesSquare) {
  RingPresentation p = projective_line_bundle();
  EXPECT_EQ(p.normal_form(p.parse("z^2")), p.parse("-c1*z - c2"));
}

TEST(RingDefine, TruncatedPolynomialBasis) {
  RingPresentation p = ring_define({{"delta", 1}}, {"delta^3"});
  EXPECT_EQ(p.graded_component_dim(0), 1);
  EXPECT_EQ(p.graded_component_dim(1), 1);
  EXPECT_EQ(p.graded_component_dim(2), 1);
  EXPECT_EQ(p.graded_component_dim(3), 0);
  EXPECT_TRUE(p.is_zero(p.parse("delta^4")));
}

TEST(RingDefine, FreeRingIsIdentity) {
  RingPresentation p = ring_define({{"x", 1}}, {});
  RingElement e = p.parse("x^5 + 3*x + g");
  EXPECT_EQ(p.normal_form(e), e);
  EXPECT_FALSE(p.is_zero(p.var("x")));
}

TEST(RingDefine, UnknownGeneratorInRelation) {
  try {
    ring_define({{"x", 1}}, {"y^2"});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownGenerator);
  }
}

TEST(RingDefine, BasisSizeBoundSignalsPathologicalInput) {
  RingOptions tiny;
  tiny.max_basis_size = 1;
  EXPECT_THROW(ring_define(make_generators({{"x", 1}, {"y", 1}}),
                           {parse_element(make_generators({{"x", 1}, {"y", 1}}), "x^2 - y^2"),
                            parse_element(make_generators({{"x", 1}, {"y", 1}}), "x*y - y^2")},
                           tiny),
               Error);
}

TEST(NormalForm, CubeOfFiberClass) {
  RingPresentation p = projective_line_bundle();
  EXPECT_EQ(p.normal_form(p.parse("z^3")), p.parse("(c1^2 - c2)*z + c1*c2"));
}

TEST(IsZero, OnePointRelations) {
  RingPresentation p = one_point_ring();
  EXPECT_TRUE(p.is_zero(p.parse("delta*psi1 + (2*g-1)*delta^2")));
  EXPECT_FALSE(p.is_zero(p.var("psi1")));
  EXPECT_EQ(p.graded_component_dim(2), 1);
  EXPECT_EQ(p.graded_component_dim(3), 0);
}

TEST(GradedDim, FreeRingCountsGenerators) {
  RingPresentation p = ring_define({{"psi1", 1}, {"psi2", 1}, {"psi3", 1}}, {});
  EXPECT_EQ(p.graded_component_dim(1), 3);
  EXPECT_EQ(p.graded_component_dim(2), 6);
}

TEST(GradedDim, InhomogeneousRelationsRejected) {
  RingPresentation p = ring_define({{"x", 1}}, {"x^2 + x"});
  try {
    p.graded_component_dim(1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInhomogeneousRelations);
  }
}

TEST(Certify, RelationsAndSPolynomialsReduceToZero) {
  EXPECT_TRUE(projective_line_bundle().certify());
  EXPECT_TRUE(one_point_ring().certify());
  RingPresentation mixed = ring_define({{"x", 1}, {"y", 1}, {"w", 2}},
                                       {"x^2 - y*x + w", "x*y^2 - g*w*y", "y^3 + w*x"});
  EXPECT_TRUE(mixed.certify());
}

// Brute-force oracle: in Q[x]/(x^k) the normal form truncates exponents >= k.
TEST(NormalForm, TruncationOracle) {
  std::mt19937 rng(21);
  std::uniform_int_distribution<long> coef(-4, 4);
  for (int k = 1; k <= 6; ++k) {
    RingPresentation p = ring_define({{"x", 1}}, {"x^" + std::to_string(k)});
    for (int trial = 0; trial < 20; ++trial) {
      RingElement e(p.generators());
      RingElement truncated(p.generators());
      for (int d = 0; d <= 9; ++d) {
        RatFunc c(coef(rng));
        e.add_term({d}, c);
        if (d < k) truncated.add_term({d}, c);
      }
      EXPECT_EQ(p.normal_form(e), truncated);
    }
  }
}

RingElement random_element(const GeneratorSetPtr& gens, std::mt19937& rng, int max_exp) {
  std::uniform_int_distribution<long> coef(-3, 3);
  std::uniform_int_distribution<int> expo(0, max_exp);
  std::uniform_int_distribution<int> with_g(0, 2);
  RingElement e(gens);
  for (int t = 0; t < 4; ++t) {
    Exponents ex(gens->size());
    for (auto& v : ex) v = expo(rng);
    RatFunc c(coef(rng));
    if (with_g(rng) == 0) c = c * RatFunc(UniPoly::from_ints({coef(rng), 1}));
    e.add_term(ex, c);
  }
  return e;
}

TEST(NormalForm, IdempotentAndLinear) {
  std::mt19937 rng(99);
  for (const auto& p : {projective_line_bundle(), one_point_ring()}) {
    for (int i = 0; i < 40; ++i) {
      RingElement a = random_element(p.generators(), rng, 3);
      RingElement b = random_element(p.generators(), rng, 3);
      RatFunc s = RatFunc::normalize(UniPoly::from_ints({1, 2}), UniPoly::from_ints({-1, 1}));
      RingElement na = p.normal_form(a);
      EXPECT_EQ(p.normal_form(na), na);
      EXPECT_EQ(p.normal_form(s * a + b), s * na + p.normal_form(b));
    }
  }
}

TEST(NormalForm, SpecializationCommutes) {
  std::mt19937 rng(5);
  RingPresentation sym = one_point_ring();
  for (long g0 : {2L, 3L, 4L, 5L}) {
    std::vector<RingElement> rels;
    for (const auto& r : sym.relations()) rels.push_back(r.specialize(g0));
    RingPresentation num = ring_define(sym.generators(), rels);
    for (int i = 0; i < 20; ++i) {
      RingElement e = random_element(sym.generators(), rng, 3);
      EXPECT_EQ(num.normal_form(e.specialize(g0)), sym.normal_form(e).specialize(g0));
    }
  }
}

TEST(RingElementText, CanonicalSerialization) {
  auto gens = make_generators({{"c1", 1}, {"c2", 2}});
  RingElement e = parse_element(gens, "(8*g^3+12*g^2+4*g)*c1^2+(-8*g^3+8*g)*c2");
  EXPECT_EQ(e.to_string(), "(8*g^3+12*g^2+4*g)*c1^2+(-8*g^3+8*g)*c2");
  EXPECT_EQ(parse_element(gens, e.to_string()), e);
  EXPECT_EQ(parse_element(gens, "-2*g*c1 - c2 + 1/2").to_string(), "-c2-2*g*c1+1/2");
}

TEST(RingElement, SubstitutionIsMultiplicative) {
  auto gens = make_generators({{"z", 1}, {"w", 1}, {"c1", 1}, {"d1", 1}});
  std::map<std::string, RingElement> images{{"z", parse_element(gens, "-c1")},
                                            {"w", parse_element(gens, "-d1")}};
  EXPECT_EQ(parse_element(gens, "z*w").substitute(images, gens), parse_element(gens, "c1*d1"));
  EXPECT_EQ(parse_element(gens, "c1 + d1").substitute(images, gens), parse_element(gens, "c1 + d1"));
}

}  // namespace
}  // namespace chowforge
