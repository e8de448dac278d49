#include <gtest/gtest.h>

#include "printers.hpp"

#include "cboom/io.hpp"

using namespace cboom;

TEST(Parse, Elements) {
  const FieldCtx f11 = FieldCtx::prime(11);
  EXPECT_EQ(parse_element(f11, "-1"), f11.from_int(10));
  // reduced digit by digit; 123456789012345678901234567890 mod 11 = 7
  EXPECT_EQ(parse_element(f11, "123456789012345678901234567890"), f11.from_int(7));
  const FieldCtx f16 = parse_field("2^4", "Y^4 + Y + 1");
  EXPECT_EQ(parse_element(f16, "g^4"), parse_element(f16, "g + 1"));
  EXPECT_THROW(parse_element(f11, "x"), Error);
}

TEST(Parse, Polynomials) {
  const FieldCtx f7 = FieldCtx::prime(7);
  EXPECT_EQ(parse_unipoly(f7, "X^2 + 2X + 1"), parse_unipoly(f7, "(x+1)^2"));
  EXPECT_EQ(parse_unipoly(f7, "3x^{2}"), parse_unipoly(f7, "3*x^2"));
  EXPECT_EQ(parse_bipoly(f7, "z x - x z"), BiPoly(f7));
  EXPECT_EQ(parse_bipoly(f7, "2 z x^2"), BiPoly::monomial(f7, f7.from_int(2), Monomial2{2, 1}));
  EXPECT_THROW(parse_unipoly(f7, "x + z"), Error);
  EXPECT_THROW(parse_unipoly(f7, "x +"), Error);
  EXPECT_THROW(parse_unipoly(f7, "(x"), Error);
}

TEST(Parse, Fields) {
  EXPECT_EQ(parse_field("11", "").order(), 11u);
  EXPECT_EQ(parse_field("2^4", "").order(), 16u);
  EXPECT_EQ(parse_field("2^4", "Y^4 + Y^3 + 1").order(), 16u);
  EXPECT_THROW(parse_field("12", ""), Error);
  EXPECT_THROW(parse_field("2^4", "Y^3 + Y + 1"), Error);
  EXPECT_THROW(parse_field("7", "Y^2 + 1"), Error);
  EXPECT_THROW(parse_field("abc", ""), Error);
}

TEST(Json, RoundTrips) {
  const FieldCtx f16 = parse_field("2^4", "Y^4 + Y + 1");
  for (const Elt& e : f16.elements()) EXPECT_EQ(element_from_json(f16, to_json(f16, e)), e);
  const UniPoly u = parse_unipoly(f16, "g x^5 + (g^2 + 1) x + g^3");
  EXPECT_EQ(unipoly_from_json(f16, to_json(u)), u);
  const BiPoly b = parse_bipoly(f16, "g z^3 x + x^2 + g^7");
  EXPECT_EQ(bipoly_from_json(f16, to_json(b)), b);
  const GroebnerBasis g = buchberger({parse_bipoly(f16, "z^2 + x"), parse_bipoly(f16, "x^3 + g")}, TermOrder::DRL);
  const GroebnerBasis back = basis_from_json(f16, to_json(g));
  EXPECT_EQ(back.polys, g.polys);
  EXPECT_EQ(back.order, g.order);
  const FieldCtx f11 = FieldCtx::prime(11);
  EXPECT_EQ(element_from_json(f11, nlohmann::json(-3)), f11.from_int(8));
  EXPECT_EQ(element_from_json(f11, nlohmann::json("5")), f11.from_int(5));
}

TEST(Json, FieldDescription) {
  const nlohmann::json j = field_json(parse_field("2^4", "Y^4 + Y + 1"));
  EXPECT_EQ(j["p"], 2);
  EXPECT_EQ(j["n"], 4);
  EXPECT_EQ(j["modulus"], (std::vector<int>{1, 1, 0, 0, 1}));
}
