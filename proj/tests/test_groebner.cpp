#include <gtest/gtest.h>

#include "printers.hpp"

#include <random>

#include "cboom/boomerang.hpp"
#include "cboom/groebner.hpp"
#include "cboom/io.hpp"

using namespace cboom;

namespace {

BiPoly B(const FieldCtx& ctx, const std::string& s) { return parse_bipoly(ctx, s); }
Monomial2 M(std::uint32_t x, std::uint32_t z) { return Monomial2{x, z}; }

// Affine zeros of a system over the base field, by evaluation.
std::uint64_t count_zeros(const std::vector<BiPoly>& sys) {
  const FieldCtx& ctx = sys.front().ctx();
  std::uint64_t n = 0;
  for (const Elt& x : ctx.elements())
    for (const Elt& z : ctx.elements()) {
      bool all = true;
      for (const BiPoly& f : sys) all = all && eval2(f, x, z).is_zero();
      n += all;
    }
  return n;
}

UniPoly random_monic(const FieldCtx& ctx, int d, std::mt19937_64& rng) {
  std::vector<Elt> c(d + 1);
  for (int i = 1; i < d; ++i) c[i] = ctx.random(rng);
  c[d] = ctx.one();
  return UniPoly(ctx, c);
}

}  // namespace

TEST(TermOrder, Comparisons) {
  EXPECT_TRUE(compare(TermOrder::DRL, M(0, 2), M(1, 1)) > 0);
  EXPECT_TRUE(compare(TermOrder::LEX, M(0, 1), M(9, 0)) > 0);
  EXPECT_TRUE(compare(TermOrder::DRL, M(1, 1), M(1, 1)) == 0);
  EXPECT_TRUE(compare(TermOrder::DRL, M(3, 0), M(0, 2)) > 0);
  // both orders are total, multiplicative and refine divisibility
  std::mt19937_64 rng(1);
  for (TermOrder o : {TermOrder::DRL, TermOrder::LEX})
    for (int i = 0; i < 500; ++i) {
      const Monomial2 a = M(rng() % 6, rng() % 6), b = M(rng() % 6, rng() % 6), c = M(rng() % 6, rng() % 6);
      EXPECT_TRUE(compare(o, a, b) == compare(o, a * c, b * c));
      EXPECT_TRUE(compare(o, a * c, a) >= 0);
    }
}

TEST(Division, Examples) {
  const FieldCtx f11 = FieldCtx::prime(11);
  const BiPoly g2 = B(f11, "z x^4 - x^5");
  EXPECT_EQ(remainder(B(f11, "x^4 (z^4 + x^4)"), {g2}, TermOrder::DRL), B(f11, "2 x^8"));
  const BiPoly f = B(f11, "z^3 x + 4x^2 + 1");
  EXPECT_TRUE(remainder(f, {f}, TermOrder::DRL).is_zero());
  EXPECT_EQ(remainder(B(f11, "1"), {B(f11, "x"), B(f11, "z")}, TermOrder::DRL), B(f11, "1"));
}

TEST(Division, IdentityHolds) {
  const FieldCtx f13 = FieldCtx::prime(13);
  std::mt19937_64 rng(3);
  auto rnd = [&](int terms, int deg) {
    BiPoly r(f13);
    for (int t = 0; t < terms; ++t)
      r = r + BiPoly::monomial(f13, f13.random(rng), M(rng() % deg, rng() % deg));
    return r;
  };
  for (TermOrder o : {TermOrder::DRL, TermOrder::LEX})
    for (int i = 0; i < 50; ++i) {
      const BiPoly f = rnd(8, 7);
      std::vector<BiPoly> ds = {rnd(3, 4), rnd(3, 4)};
      if (ds[0].is_zero() || ds[1].is_zero()) continue;
      const Division d = divide(f, ds, o);
      EXPECT_EQ(d.quotients[0] * ds[0] + d.quotients[1] * ds[1] + d.remainder, f);
      for (const auto& [m, c] : d.remainder.terms())
        for (const BiPoly& dv : ds) EXPECT_FALSE(leading_monomial(dv, o).divides(m));
    }
}

TEST(SPolynomial, Examples) {
  const FieldCtx f11 = FieldCtx::prime(11);
  EXPECT_EQ(s_polynomial(B(f11, "z^4 + x^4"), B(f11, "z^5 + x^5"), TermOrder::DRL), B(f11, "z x^4 - x^5"));
  const BiPoly f = B(f11, "z^2 + 3x");
  EXPECT_TRUE(s_polynomial(f, f, TermOrder::DRL).is_zero());
  EXPECT_TRUE(remainder(s_polynomial(B(f11, "x"), B(f11, "z"), TermOrder::DRL), {B(f11, "x"), B(f11, "z")},
                        TermOrder::DRL)
                  .is_zero());
}

TEST(Buchberger, ClosedFormBases) {
  for (std::uint64_t p : {11u, 13u}) {
    const FieldCtx ctx = FieldCtx::prime(p);
    const GroebnerBasis m1 = buchberger({B(ctx, "z^5 + x^5"), B(ctx, "z^4 + x^4")}, TermOrder::DRL);
    EXPECT_EQ(m1.polys, (std::vector<BiPoly>{B(ctx, "x^8"), B(ctx, "z x^4 - x^5"), B(ctx, "z^4 + x^4")}));
    EXPECT_EQ(staircase(m1).count, 20u);
    const BiPoly sum = B(ctx, "z^3 + z^2 x + z x^2 + x^3");
    const GroebnerBasis p1 = buchberger({B(ctx, "z^5 - x^5"), sum}, TermOrder::DRL);
    EXPECT_EQ(p1.polys, (std::vector<BiPoly>{B(ctx, "x^7"), B(ctx, "z x^4 - x^5"), sum}));
    EXPECT_EQ(staircase(p1).count, 15u);
  }
  const FieldCtx f7 = FieldCtx::prime(7);
  const GroebnerBasis single = buchberger({B(f7, "3 z^2 x + 1")}, TermOrder::DRL);
  ASSERT_EQ(single.polys.size(), 1u);
  EXPECT_EQ(single.polys[0], B(f7, "z^2 x + 5"));
}

TEST(Buchberger, Criterion) {
  const FieldCtx f7 = FieldCtx::prime(7);
  EXPECT_FALSE(verify_buchberger_criterion({B(f7, "x + z"), B(f7, "x - z")}, TermOrder::DRL));
  // for c^2 != 1 the generators themselves already form a basis
  const FieldCtx f11 = FieldCtx::prime(11);
  const BoomerangSystem s = build_system(parse_unipoly(f11, "x^3 + 2x"), f11.from_int(3), f11.one(), f11.from_int(4));
  EXPECT_TRUE(verify_buchberger_criterion(s.generators(), TermOrder::DRL));
  std::mt19937_64 rng(5);
  for (int i = 0; i < 20; ++i) {
    const BoomerangSystem t = build_system(random_monic(f11, 3 + i % 3, rng), f11.from_int(1 + rng() % 10),
                                           f11.from_int(1 + rng() % 10), f11.random(rng));
    for (TermOrder o : {TermOrder::DRL, TermOrder::LEX})
      EXPECT_TRUE(verify_buchberger_criterion(buchberger(t.generators(), o).polys, o));
  }
}

TEST(Staircase, Counts) {
  const FieldCtx f7 = FieldCtx::prime(7);
  EXPECT_EQ(staircase(buchberger({B(f7, "x"), B(f7, "z")}, TermOrder::DRL)).count, 1u);
  EXPECT_EQ(staircase(buchberger({B(f7, "1")}, TermOrder::DRL)).count, 0u);
  EXPECT_FALSE(staircase(buchberger({B(f7, "z x")}, TermOrder::DRL)).finite);
  const Staircase st = staircase_of({M(8, 0), M(4, 1), M(0, 4)});
  EXPECT_TRUE(st.finite);
  EXPECT_EQ(st.count, 20u);
  EXPECT_EQ(st.standard.size(), 20u);
}

TEST(Staircase, BoundsSolutionCount) {
  std::mt19937_64 rng(7);
  const FieldCtx f13 = FieldCtx::prime(13);
  for (int i = 0; i < 30; ++i) {
    const int d = 3 + i % 3;
    const BoomerangSystem s = build_system(random_monic(f13, d, rng), f13.from_int(1 + rng() % 12),
                                           f13.from_int(1 + rng() % 12), f13.random(rng));
    const Staircase st = staircase(buchberger(s.generators(), TermOrder::DRL));
    const auto top = dimension_bound_via_top_components(s.generators());
    ASSERT_TRUE(st.finite);
    ASSERT_TRUE(top.has_value());
    EXPECT_LE(count_zeros({s.F1, s.F2}), st.count);
    EXPECT_LE(st.count, *top);
  }
}

TEST(Staircase, TopComponentBounds) {
  const FieldCtx f257 = FieldCtx::prime(257);
  const UniPoly x5 = parse_unipoly(f257, "x^5");
  EXPECT_EQ(dimension_bound_via_top_components(build_system(x5, f257.from_int(-1), f257.one(), f257.from_int(48)).generators()),
            20u);
  EXPECT_EQ(dimension_bound_via_top_components(build_system(x5, f257.from_int(3), f257.one(), f257.from_int(48)).generators()),
            25u);
  EXPECT_EQ(dimension_bound_via_top_components(build_system(x5, f257.one(), f257.one(), f257.from_int(48)).generators()),
            15u);
}

TEST(Fglm, MatchesDirectLexBasis) {
  std::mt19937_64 rng(11);
  for (const FieldCtx& ctx : {FieldCtx::prime(11), FieldCtx::prime(13), FieldCtx::extension_of_degree(2, 3)}) {
    for (int i = 0; i < 15; ++i) {
      const std::uint64_t q = *ctx.order();
      const BoomerangSystem s = build_system(random_monic(ctx, 3 + i % 3, rng), ctx.from_index(1 + rng() % (q - 1)),
                                             ctx.from_index(1 + rng() % (q - 1)), ctx.random(rng));
      const GroebnerBasis drl = buchberger(s.generators(), TermOrder::DRL);
      if (!staircase(drl).finite) continue;
      const GroebnerBasis lex = fglm(drl);
      EXPECT_EQ(lex.polys, buchberger(s.generators(), TermOrder::LEX).polys);
      EXPECT_TRUE(same_ideal(drl, lex));
      EXPECT_EQ(staircase(lex).count, staircase(drl).count);
    }
  }
}

TEST(Fglm, Trivial) {
  const FieldCtx f7 = FieldCtx::prime(7);
  const GroebnerBasis g = buchberger({B(f7, "z - x"), B(f7, "x^3 - 1")}, TermOrder::DRL);
  const GroebnerBasis lex = fglm(g);
  EXPECT_EQ(lex.order, TermOrder::LEX);
  const auto shape = lex_shape(lex);
  ASSERT_TRUE(shape);
  EXPECT_EQ(shape->g1, parse_unipoly(f7, "x"));
  EXPECT_EQ(shape->g2, parse_unipoly(f7, "x^3 - 1"));
  EXPECT_THROW(fglm(buchberger({B(f7, "z x")}, TermOrder::DRL)), Error);
}

TEST(LexShape, NotInShapePosition) {
  const FieldCtx f7 = FieldCtx::prime(7);
  EXPECT_FALSE(lex_shape(buchberger({B(f7, "z^2 - x"), B(f7, "x^3")}, TermOrder::LEX)));
}
