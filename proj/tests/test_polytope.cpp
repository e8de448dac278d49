#include <gtest/gtest.h>

#include "printers.hpp"

#include <numeric>
#include <random>

#include "cboom/io.hpp"
#include "cboom/polytope.hpp"

using namespace cboom;

namespace {

using LP = LatticePoint;

LatticePolytope hull(std::vector<LP> pts) { return LatticePolytope::hull(pts); }

// Minkowski sum by brute force: hull of every pairwise sum.
LatticePolytope brute_sum(const LatticePolytope& a, const LatticePolytope& b) {
  std::vector<LP> pts;
  for (const LP& p : a.vertices())
    for (const LP& q : b.vertices()) pts.push_back(p + q);
  return LatticePolytope::hull(pts);
}

}  // namespace

TEST(Polytope, NewtonPolytope) {
  const FieldCtx f7 = FieldCtx::prime(7);
  EXPECT_EQ(newton_polytope(parse_bipoly(f7, "x z")).vertices(), (std::vector<LP>{{1, 1}}));
  EXPECT_EQ(newton_polytope(parse_bipoly(f7, "1 + x + z")), hull({{0, 0}, {1, 0}, {0, 1}}));
}

TEST(Polytope, HullDropsInteriorAndCollinear) {
  const LatticePolytope h = hull({{0, 0}, {2, 0}, {1, 0}, {0, 2}, {1, 1}, {0, 1}, {1, 0}});
  EXPECT_EQ(h.vertices(), (std::vector<LP>{{0, 0}, {2, 0}, {0, 2}}));
  EXPECT_TRUE(h.contains({1, 1}));
  EXPECT_FALSE(h.contains({2, 1}));
}

TEST(Polytope, MinkowskiSum) {
  const LatticePolytope a = hull({{0, 0}, {3, 1}, {1, 4}});
  EXPECT_EQ(minkowski_sum(a, hull({{0, 0}})), a);
  EXPECT_EQ(minkowski_sum(hull({{0, 0}, {1, 0}}), hull({{0, 0}, {0, 1}})), hull({{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
  std::mt19937_64 rng(4);
  for (int i = 0; i < 200; ++i) {
    std::vector<LP> pa, pb;
    for (int k = 0; k < 1 + static_cast<int>(rng() % 6); ++k) pa.push_back({static_cast<std::int64_t>(rng() % 9), static_cast<std::int64_t>(rng() % 9)});
    for (int k = 0; k < 1 + static_cast<int>(rng() % 6); ++k) pb.push_back({static_cast<std::int64_t>(rng() % 9), static_cast<std::int64_t>(rng() % 9)});
    const LatticePolytope ha = hull(pa), hb = hull(pb);
    EXPECT_EQ(minkowski_sum(ha, hb), brute_sum(ha, hb));
  }
}

TEST(Polytope, NewtonOfProductIsMinkowskiSum) {
  const FieldCtx f13 = FieldCtx::prime(13);
  std::mt19937_64 rng(6);
  auto rnd = [&] {
    BiPoly r(f13);
    for (int t = 0; t < 1 + static_cast<int>(rng() % 6); ++t)
      r = r + BiPoly::monomial(f13, f13.from_int(1 + rng() % 12), Monomial2{static_cast<std::uint32_t>(rng() % 6), static_cast<std::uint32_t>(rng() % 6)});
    return r;
  };
  for (int i = 0; i < 200; ++i) {
    const BiPoly f = rnd(), g = rnd();
    if (f.is_zero() || g.is_zero()) continue;
    EXPECT_EQ(newton_polytope(f * g), minkowski_sum(newton_polytope(f), newton_polytope(g)));
  }
}

TEST(Triangle, Area) {
  EXPECT_EQ(triangle_area2({0, 0}, {7, 0}, {1, 6}), 42);
  EXPECT_EQ(triangle_area2({0, 0}, {1, 1}, {3, 3}), 0);
  EXPECT_EQ(triangle_area2({0, 0}, {1, 0}, {0, 1}), 1);
}

TEST(Triangle, PointInTriangleMatchesAreaSplit) {
  const LP a{0, 0}, b{7, 0}, c{1, 6};
  EXPECT_TRUE(point_in_triangle(a, a, b, c));
  EXPECT_FALSE(point_in_triangle({8, 8}, a, b, c));
  // P inside iff the three sub-areas add up to the whole
  const std::int64_t whole = triangle_area2(a, b, c);
  for (std::int64_t u = -1; u <= 8; ++u)
    for (std::int64_t v = -1; v <= 7; ++v) {
      const LP p{u, v};
      const bool split = triangle_area2(p, a, b) + triangle_area2(p, b, c) + triangle_area2(p, c, a) == whole;
      EXPECT_EQ(point_in_triangle(p, a, b, c), split) << u << "," << v;
    }
  try {
    point_in_triangle({0, 0}, {0, 0}, {1, 1}, {2, 2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegenerateTriangle);
  }
}

TEST(Triangle, Indecomposability) {
  for (std::int64_t d = 2; d <= 30; ++d) EXPECT_TRUE(triangle_indecomposable({0, 0}, {1, d - 1}, {d, 0}));
  EXPECT_FALSE(triangle_indecomposable({0, 0}, {0, 2}, {2, 0}));
  EXPECT_TRUE(triangle_indecomposable({0, 0}, {0, 1}, {1, 0}));
  // the doubled triangle really is a sum of two unit triangles
  const LatticePolytope unit = hull({{0, 0}, {0, 1}, {1, 0}});
  EXPECT_EQ(minkowski_sum(unit, unit), hull({{0, 0}, {0, 2}, {2, 0}}));
}

TEST(Certificate, Examples) {
  const FieldCtx f11 = FieldCtx::prime(11);
  const auto r = certify_absolutely_irreducible_difference(parse_unipoly(f11, "x^7"), f11.from_int(3));
  const auto* cert = std::get_if<IrreducibilityCertificate>(&r);
  ASSERT_NE(cert, nullptr);
  EXPECT_EQ(cert->gcd, 1);
  EXPECT_TRUE(check_certificate(*cert));
  EXPECT_EQ(cert->triangle, hull({{0, 0}, {7, 0}, {1, 6}}));

  EXPECT_TRUE(std::holds_alternative<Inapplicable>(
      certify_absolutely_irreducible_difference(parse_unipoly(f11, "x^11"), f11.one())));

  const auto sq = certify_absolutely_irreducible_difference(parse_unipoly(f11, "x^2"), f11.one());
  ASSERT_TRUE(std::holds_alternative<IrreducibilityCertificate>(sq));
  EXPECT_EQ(std::get<IrreducibilityCertificate>(sq).triangle, hull({{0, 0}, {2, 0}, {1, 1}}));
}

TEST(Certificate, RandomPolynomials) {
  std::mt19937_64 rng(8);
  for (const FieldCtx& ctx : {FieldCtx::prime(11), FieldCtx::prime(13), FieldCtx::extension_of_degree(2, 4)}) {
    const auto p = static_cast<int>(ctx.characteristic());
    for (int d = 2; d <= 20; ++d) {
      std::vector<Elt> c(d + 1);
      for (auto& e : c) e = ctx.random(rng);
      while (c[d].is_zero()) c[d] = ctx.random(rng);
      Elt a;
      while (a.is_zero()) a = ctx.random(rng);
      const auto r = certify_absolutely_irreducible_difference(UniPoly(ctx, c), a);
      if (d % p == 0) {
        EXPECT_TRUE(std::holds_alternative<Inapplicable>(r));
      } else {
        ASSERT_TRUE(std::holds_alternative<IrreducibilityCertificate>(r));
        EXPECT_TRUE(check_certificate(std::get<IrreducibilityCertificate>(r)));
      }
    }
  }
}
