#include <gtest/gtest.h>

#include "printers.hpp"

#include <random>

#include "cboom/bpoly.hpp"
#include "cboom/io.hpp"

using namespace cboom;

namespace {

BiPoly B(const FieldCtx& ctx, const char* s) { return parse_bipoly(ctx, s); }

}  // namespace

TEST(BiPoly, LiftsFromUnivariate) {
  const FieldCtx f7 = FieldCtx::prime(7);
  const UniPoly x3 = parse_unipoly(f7, "x^3");
  EXPECT_EQ(from_uni_in(Var::Z, x3), B(f7, "z^3"));
  EXPECT_EQ(from_uni_in(Var::X, x3), B(f7, "x^3"));
  EXPECT_TRUE(from_uni_in(Var::Z, UniPoly(f7)).is_zero());
  EXPECT_EQ(from_uni_of_sum(x3), B(f7, "(x + z)^3"));
}

TEST(BiPoly, Shift) {
  const FieldCtx f7 = FieldCtx::prime(7);
  EXPECT_EQ(shift(B(f7, "x^2"), Var::X, f7.one()), B(f7, "x^2 + 2x + 1"));
  const BiPoly f = B(f7, "3x^2 z + z^4 + 6");
  EXPECT_EQ(shift(f, Var::Z, f7.zero()), f);
  const Elt a = f7.from_int(3);
  EXPECT_EQ(shift(B(f7, "x^7"), Var::X, a), B(f7, "x^7") + BiPoly::constant(f7, f7.pow(a, 7)));
  // shift agrees with evaluation
  for (const Elt& x : f7.elements())
    for (const Elt& z : f7.elements()) EXPECT_EQ(eval2(shift(f, Var::Z, a), x, z), eval2(f, x, f7.add(z, a)));
}

TEST(BiPoly, TopComponent) {
  const FieldCtx f257 = FieldCtx::prime(257);
  EXPECT_EQ(top_component(B(f257, "z^5 + x^5 - 48 + 5z^4")), B(f257, "z^5 + x^5"));
  EXPECT_EQ(top_component(B(f257, "x^2 + xz + z^2")), B(f257, "x^2 + xz + z^2"));
  EXPECT_EQ(top_component(B(f257, "x^3 + 1")), B(f257, "x^3"));
  EXPECT_TRUE(top_component(B(f257, "x^4 z + 3x + 9")).is_homogeneous());
}

TEST(BiPoly, ExactDivisionByDiagonal) {
  const FieldCtx f7 = FieldCtx::prime(7);
  EXPECT_EQ(divide_exact_by_z_minus_x(B(f7, "z^2 - x^2")), B(f7, "z + x"));
  EXPECT_EQ(divide_exact_by_z_minus_x(B(f7, "z^3 - x^3")), B(f7, "z^2 + zx + x^2"));
  try {
    divide_exact_by_z_minus_x(B(f7, "z^2 + x^2"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotDivisible);
  }
  std::mt19937_64 rng(2);
  const FieldCtx f11 = FieldCtx::prime(11);
  for (int i = 0; i < 50; ++i) {
    BiPoly g(f11);
    for (int t = 0; t < 5; ++t)
      g = g + BiPoly::monomial(f11, f11.random(rng),
                               Monomial2{static_cast<std::uint32_t>(rng() % 5), static_cast<std::uint32_t>(rng() % 5)});
    EXPECT_EQ(divide_exact_by_z_minus_x(B(f11, "z - x") * g), g);
  }
}

TEST(BiPoly, Evaluation) {
  const FieldCtx f11 = FieldCtx::prime(11);
  EXPECT_TRUE(eval2(B(f11, "z - x"), f11.from_int(3), f11.from_int(3)).is_zero());
  EXPECT_EQ(eval2(B(f11, "7"), f11.from_int(4), f11.from_int(9)), f11.from_int(7));
  EXPECT_EQ(eval2(B(f11, "x^2 z + 1"), f11.from_int(2), f11.from_int(3)), f11.from_int(13));
}

TEST(BiPoly, RingIdentities) {
  const FieldCtx f = FieldCtx::extension_of_degree(2, 4);
  const BiPoly a = B(f, "g x + z^2"), b = B(f, "x z + g^3"), c = B(f, "z + 1");
  EXPECT_EQ(a * (b + c), a * b + a * c);
  EXPECT_EQ((a - a), BiPoly(f));
  EXPECT_EQ((a * b).total_degree(), a.total_degree() + b.total_degree());
}
