#include <gtest/gtest.h>

#include <random>

#include "hdef/hdef.hpp"
#include "hdef/io/json.hpp"
#include "oracles.hpp"

using namespace hdef;
using Q = ExactComplex;
using io::Json;

TEST(Json, HermitePolynomialIsCanonical) {
  auto j = io::encode(complex_hermite_sum<Q>(2, 1).scaled);
  EXPECT_EQ(j.dump(),
            R"({"terms":[{"z":1,"zbar":0,"re":"-2/1","im":"0/1"},{"z":2,"zbar":1,"re":"1/1","im":"0/1"}]})");
  EXPECT_EQ(io::encode(real_hermite<Q>(2)).dump(),
            R"({"terms":[{"x1":0,"x2":0,"re":"-2/1","im":"0/1"},{"x1":2,"x2":0,"re":"4/1","im":"0/1"}]})");
}

TEST(Json, WeylOpSchema) {
  auto j = io::encode(WeylOp<Q>::creation(2) * Q::i());
  EXPECT_EQ(j.dump(), R"({"terms":[{"c1":0,"c2":1,"d1":0,"d2":0,"re":"0/1","im":"1/1"}]})");
}

TEST(Json, PolynomialRoundTrip) {
  std::mt19937 rng(41);
  for (int t = 0; t < 30; ++t) {
    auto p = oracle::to_lib(oracle::random_poly(rng, 6, 6));
    auto text = io::encode(p).dump();
    auto back = io::decode_poly<BiPoly<Q>>(Json::parse(text));
    EXPECT_EQ(back, p);
    EXPECT_EQ(io::encode(back).dump(), text);
  }
  auto rp = real_hermite<Q>(5);
  EXPECT_EQ(io::decode_poly<RealPoly<Q>>(io::encode(rp)), rp);
}

TEST(Json, OperatorAndMatrixRoundTrip) {
  std::mt19937 rng(43);
  for (int t = 0; t < 10; ++t) {
    auto g = oracle::random_gl2(rng);
    auto op = deformed_creation(g, 1) * deformed_annihilation(g, 2) + deformed_creation(g, 2);
    EXPECT_EQ(io::decode_weyl<Q>(Json::parse(io::encode(op).dump())), op);
    auto m = rep_matrix(g, 3);
    auto text = io::encode(m).dump();
    EXPECT_EQ(io::decode_rep_matrix<Q>(Json::parse(text)), m);
    EXPECT_EQ(io::encode(io::decode_rep_matrix<Q>(Json::parse(text))).dump(), text);
  }
  auto s = ScaledWeyl<Q>{WeylOp<Q>::creation(1), 1};
  auto js = io::encode(s);
  EXPECT_EQ(js.at("sqrt2_power"), 1);
  auto back = io::decode_scaled_weyl<Q>(js);
  EXPECT_EQ(back.op, s.op);
  EXPECT_EQ(back.sqrt2_power, 1u);
}

TEST(Json, ExactDecoderRefusesFloats) {
  Json j = Json::parse(R"({"terms":[{"z":1,"zbar":0,"re":0.5,"im":"0/1"}]})");
  EXPECT_THROW(io::decode_poly<BiPoly<Q>>(j), std::invalid_argument);
  auto f = io::decode_poly<BiPoly<FloatComplex>>(j);
  EXPECT_DOUBLE_EQ(f.coefficient(1, 0).real(), 0.5);
  Json bad = Json::parse(R"({"L":2,"rows":[[{"re":"1/1","im":"0/1"}]]})");
  EXPECT_THROW(io::decode_rep_matrix<Q>(bad), std::invalid_argument);
}

TEST(Json, FloatCoefficientsAreNumbers) {
  auto j = io::encode(complex_hermite_sum<FloatComplex>(1, 1).scaled);
  EXPECT_TRUE(j["terms"][0]["re"].is_number());
}

TEST(Json, ReportSchemas) {
  auto g = alpha_matrix(AlphaPoint<Q>::from(Q(Rational(3, 5))));
  auto b = io::encode(biorthogonality_check(g, 2));
  EXPECT_EQ(b.at("Lmax"), 2);
  EXPECT_TRUE(b.at("violations").empty());
  EXPECT_EQ(b.at("status"), "pass");

  auto sc = structure_constants(undeformed_generators<Q>());
  auto s = io::encode(sc, classify(sc).kind);
  EXPECT_EQ(s.at("basis").size(), 4u);
  EXPECT_EQ(s.at("brackets").size(), 6u);
  EXPECT_EQ(s.at("class"), "su2_plus_u1");
  EXPECT_EQ(s.at("brackets")[0].at("residual_norm"), 0.0);
  EXPECT_EQ(s.at("brackets")[0].at("coeffs").size(), 4u);

  auto rep = ncqm_commutator_suite(AlphaPoint<Q>::from(Q(Rational(3, 5))));
  auto r = io::encode(rep);
  EXPECT_EQ(r.at("suite"), "ncqm");
  EXPECT_EQ(r.at("status"), "pass");
}

TEST(Json, DictionaryExport) {
  DictionaryParams<Q> params;
  params.alpha = Q(Rational(3, 5));
  params.theta = Q(Rational(3, 5));
  params.gamma = Q(Rational(16, 15));
  auto d = build_dictionary(params);
  auto j = io::encode(d);
  EXPECT_TRUE(j.contains("Q1"));
  EXPECT_EQ(j.at("Q1").at("sqrt2_power"), 1);
  EXPECT_FALSE(j.at("J3_alpha").contains("sqrt2_power"));
  EXPECT_EQ(io::decode_weyl<Q>(j.at("J3_alpha")), d.op("J3_alpha"));
}
