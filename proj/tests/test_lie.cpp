#include <gtest/gtest.h>

#include <cmath>

#include "hdef/hdef.hpp"

using namespace hdef;
using Q = ExactComplex;
using F = FloatComplex;

namespace {
Q r(long n, long d = 1) { return Q(Rational(n, d)); }
const Q I = Q::i();

struct Entry {
  std::size_t i, j;
  std::vector<Q> coeffs;
};

StructureConstants<Q> table(std::vector<std::string> names, const std::vector<Entry>& entries) {
  auto sc = StructureConstants<Q>::empty(std::move(names));
  for (const auto& e : entries) sc.set(e.i, e.j, e.coeffs);
  return sc;
}

// Brackets of the J^alpha generators at parameter theta, indices 0..3 = J1..J4.
StructureConstants<Q> expected_j_table(const Q& th) {
  return table({"J1_alpha", "J2_alpha", "J3_alpha", "J4_alpha"},
               {{0, 1, {0, 0, I, 0}},
                {1, 2, {I, 0, 0, 0}},
                {2, 3, {I * th, 0, 0, 0}},
                {3, 0, {0, 0, I * th, 0}},
                {2, 0, {0, I, 0, I * th}},
                {1, 3, {0, 0, 0, 0}}});
}

StructureConstants<Q> expected_x_table(const Q& th) {
  const Q f = r(1) - th * th;
  return table({"X1_theta", "X2_theta", "X3_theta", "Y_theta"},
               {{0, 1, {0, 0, 1, 0}}, {1, 2, {f, 0, 0, 0}}, {2, 0, {0, f, 0, 0}}});
}

StructureConstants<Q> su2_plus_u1_table() {
  return table({"Z1_theta", "Z2_theta", "Z3_theta", "Y_theta"},
               {{0, 1, {0, 0, 1, 0}}, {1, 2, {1, 0, 0, 0}}, {2, 0, {0, 1, 0, 0}}});
}

const std::vector<Q> kAlphas{r(3, 5), r(5, 13), r(8, 17)};
}  // namespace

TEST(Lie, UndeformedGenerators) {
  auto sc = structure_constants(undeformed_generators<Q>());
  EXPECT_TRUE(sc.closed);
  auto expected = expected_j_table(r(0));
  expected.names = sc.names;
  EXPECT_TRUE(same_table(sc, expected));
  EXPECT_TRUE(jacobi_holds(sc));
  auto cls = classify(sc);
  EXPECT_EQ(cls.kind, LieClass::su2_plus_u1);
  EXPECT_TRUE(cls.real_form_rotated);
}

TEST(Lie, DeformedBracketsExactAtAlphaPoints) {
  for (const Q& alpha : kAlphas) {
    auto p = AlphaPoint<Q>::from(alpha);
    auto sc = structure_constants(bilinear_generators(p));
    EXPECT_TRUE(sc.closed);
    EXPECT_EQ(sc.max_residual, 0.0);
    EXPECT_TRUE(same_table(sc, expected_j_table(p.theta))) << alpha;
    EXPECT_TRUE(jacobi_holds(sc, 0.0));
  }
  auto p = AlphaPoint<Q>::from(r(3, 5));
  auto j = bilinear_generators(p);
  EXPECT_EQ(commutator(j.elements[2], j.elements[0]), j.elements[1] * I + j.elements[3] * (I * r(24, 25)));
}

TEST(Lie, BasisChangeTable) {
  for (const Q& alpha : kAlphas) {
    auto p = AlphaPoint<Q>::from(alpha);
    auto x = basis_change(bilinear_generators(p), p.theta);
    auto sc = structure_constants(x);
    EXPECT_TRUE(same_table(sc, expected_x_table(p.theta))) << alpha;
    EXPECT_TRUE(jacobi_holds(sc, 0.0));
    for (std::size_t i = 0; i < 3; ++i) EXPECT_TRUE(commutator(x.elements[3], x.elements[i]).is_zero());
  }
  auto p = AlphaPoint<Q>::from(r(3, 5));
  auto sc = structure_constants(basis_change(bilinear_generators(p), p.theta));
  EXPECT_EQ(sc(1, 2, 0), r(49, 625));
  EXPECT_EQ(sc(2, 0, 1), r(49, 625));
}

TEST(Lie, ThetaZeroLimitIsSu2) {
  auto x = basis_change(undeformed_generators<Q>(), r(0));
  auto sc = structure_constants(x);
  EXPECT_TRUE(same_table(sc, expected_x_table(r(0))));
  EXPECT_EQ(classify(sc).kind, LieClass::su2_plus_u1);
  EXPECT_EQ(rescale(x, r(0)).elements[0], x.elements[0]);
}

TEST(Lie, RescaledTableIsSu2) {
  for (const Q& alpha : kAlphas) {
    auto p = AlphaPoint<Q>::from(alpha);
    auto z = rescale(basis_change(bilinear_generators(p), p.theta), p.theta);
    auto sc = structure_constants(z);
    EXPECT_TRUE(same_table(sc, su2_plus_u1_table())) << alpha;
    EXPECT_TRUE(jacobi_holds(sc, 0.0));
    auto cls = classify(sc);
    EXPECT_EQ(cls.kind, LieClass::su2_plus_u1);
    EXPECT_FALSE(cls.real_form_rotated);
    EXPECT_EQ(cls.derived_dim, 3u);
    EXPECT_EQ(cls.center_dim, 1u);
  }
}

// Z1 = s X1, Z2 = X2, Z3 = s X3 leaves [Z2, Z3] = s^2 Z1, so it is not the su(2) table.
TEST(Lie, LiteralRescalingFactorsDoNotNormalize) {
  auto p = AlphaPoint<Q>::from(r(3, 5));
  auto x = basis_change(bilinear_generators(p), p.theta);
  auto sc = structure_constants(rescale_literal(x, p.theta));
  EXPECT_FALSE(same_table(sc, su2_plus_u1_table()));
  EXPECT_EQ(sc(1, 2, 0), r(49, 625));
  EXPECT_EQ(sc(0, 1, 2), r(1));
}

TEST(Lie, AbstractAndOperatorRoutesAgree) {
  for (const Q& alpha : kAlphas) {
    auto p = AlphaPoint<Q>::from(alpha);
    auto concrete = bilinear_generators(p);
    auto abstract = abstract_bilinear_generators(p.theta);
    EXPECT_TRUE(same_table(structure_constants(concrete), structure_constants(abstract)));
    auto xc = basis_change(concrete, p.theta);
    auto xa = basis_change(abstract, p.theta);
    EXPECT_TRUE(same_table(structure_constants(xc), structure_constants(xa)));
    EXPECT_TRUE(same_table(structure_constants(rescale(xc, p.theta)), structure_constants(rescale(xa, p.theta))));
  }
}

TEST(Lie, ClassificationStableInFloat) {
  for (double alpha : {0.6, 0.3, 0.9}) {
    auto p = AlphaPoint<F>::from(F(alpha));
    auto sc = structure_constants(rescale(basis_change(bilinear_generators(p), p.theta), p.theta));
    EXPECT_LT(sc.max_residual, 1e-10);
    EXPECT_EQ(classify(sc).kind, LieClass::su2_plus_u1) << alpha;
  }
}

TEST(Lie, ThetaOneConcreteOperatorsCollapse) {
  auto p = AlphaPoint<F>::from(F(1 / std::sqrt(2.0)));
  auto j = bilinear_generators(p);
  EXPECT_TRUE(near(j.elements[0], WeylOp<F>{}));
  EXPECT_TRUE(near(j.elements[1], -j.elements[3]));
  EXPECT_THROW(structure_constants(j), std::invalid_argument);
}

TEST(Lie, ThetaOneRescalingSingular) {
  auto x = basis_change(abstract_bilinear_generators(F(1.0)), F(1.0));
  try {
    rescale(x, F(1.0));
    FAIL() << "expected rescaling to be rejected";
  } catch (const std::domain_error& e) {
    EXPECT_STREQ(e.what(), "rescaling singular at theta = 1");
  }
}

TEST(Lie, ThetaOneLimitIsHeisenberg) {
  auto sc = theta_limit_table(F(1.0), default_theta_samples<F>());
  EXPECT_TRUE(sc.closed);
  EXPECT_LT(sc.max_residual, 1e-10);
  EXPECT_TRUE(jacobi_holds(sc));
  EXPECT_NEAR(sc(0, 1, 2).real(), 1.0, 1e-10);
  EXPECT_NEAR(std::abs(sc(1, 2, 0)), 0.0, 1e-10);
  EXPECT_NEAR(std::abs(sc(2, 0, 1)), 0.0, 1e-10);
  auto cls = classify(sc);
  EXPECT_EQ(cls.kind, LieClass::heisenberg_plus_u1);
  EXPECT_EQ(cls.derived_dim, 1u);
  EXPECT_EQ(cls.center_dim, 2u);

  auto exact = theta_limit_table(r(1), default_theta_samples<Q>());
  EXPECT_TRUE(exact.closed);
  EXPECT_TRUE(same_table(exact, expected_x_table(r(1))));
  EXPECT_EQ(classify(exact).kind, LieClass::heisenberg_plus_u1);
}

TEST(Lie, ThetaLimitReproducesInteriorTables) {
  auto sc = theta_limit_table(r(24, 25), default_theta_samples<Q>());
  EXPECT_TRUE(same_table(sc, expected_x_table(r(24, 25))));
}

// The J-algebra itself at theta = 1 is the oscillator algebra, not h + u(1).
TEST(Lie, ThetaOneJAlgebraIsNotHeisenbergPlusU1) {
  auto sc = structure_constants(abstract_bilinear_generators(F(1.0)));
  EXPECT_TRUE(sc.closed);
  auto cls = classify(sc);
  EXPECT_EQ(cls.kind, LieClass::unknown);
  EXPECT_EQ(cls.derived_dim, 3u);
  EXPECT_EQ(cls.center_dim, 1u);
}

TEST(Lie, ClassifyRejectsAndDeclines) {
  auto bad = table({"a", "b", "c"}, {{0, 1, {0, 1, 0}}, {1, 2, {1, 0, 0}}});  // cyclic sum is -a
  EXPECT_FALSE(jacobi_holds(bad));
  EXPECT_THROW(classify(bad), std::invalid_argument);
  auto abelian = StructureConstants<Q>::empty({"a", "b", "c", "d"});
  EXPECT_EQ(classify(abelian).kind, LieClass::unknown);
  // sl(2, R) + u(1): semisimple part with an indefinite Killing form
  auto sl2 = table({"h", "e", "f", "y"}, {{0, 1, {0, 2, 0, 0}}, {0, 2, {0, 0, -2, 0}}, {1, 2, {1, 0, 0, 0}}});
  EXPECT_TRUE(jacobi_holds(sl2));
  EXPECT_EQ(classify(sl2).kind, LieClass::unknown);
}
