#include <gtest/gtest.h>

#include "printers.hpp"

#include <numeric>
#include <random>

#include "cboom/io.hpp"
#include "cboom/upoly.hpp"

using namespace cboom;

namespace {

UniPoly P(const FieldCtx& ctx, const char* s) { return parse_unipoly(ctx, s); }

UniPoly random_poly(const FieldCtx& ctx, int d, std::mt19937_64& rng) {
  std::vector<Elt> c(d + 1);
  for (auto& e : c) e = ctx.random(rng);
  while (c.back().is_zero()) c.back() = ctx.random(rng);
  return UniPoly(ctx, c);
}

// Roots of a prime-field polynomial counted by evaluating on every element of
// an independently constructed F_{p^n}.
std::uint64_t brute_roots(const UniPoly& f, unsigned n) {
  const FieldCtx& base = f.ctx();
  const FieldCtx big = n == 1 ? base : FieldCtx::extension_of_degree(base.characteristic(), n);
  std::vector<Elt> lifted;
  for (const Elt& c : f.coeffs()) lifted.push_back(big.from_int(static_cast<std::int64_t>(base.index(c))));
  const UniPoly g(big, lifted);
  std::uint64_t count = 0;
  for (const Elt& x : big.elements())
    if (g.eval(x).is_zero()) ++count;
  return count;
}

}  // namespace

TEST(UniPoly, Evaluation) {
  const FieldCtx f11 = FieldCtx::prime(11);
  EXPECT_EQ(P(f11, "x^7").eval(f11.from_int(2)), f11.from_int(7));
  EXPECT_EQ(P(f11, "x^3 + 5").eval(f11.zero()), f11.from_int(5));
}

TEST(UniPoly, GcdAndDivision) {
  const FieldCtx f5 = FieldCtx::prime(5), f7 = FieldCtx::prime(7), f11 = FieldCtx::prime(11);
  EXPECT_EQ(gcd(P(f5, "x^2 - 1"), P(f5, "x - 1")), P(f5, "x - 1"));
  const auto [q, r] = divmod(P(f7, "x^3"), P(f7, "x - 1"));
  EXPECT_EQ(q, P(f7, "x^2 + x + 1"));
  EXPECT_EQ(r, P(f7, "1"));
  EXPECT_EQ(pow_mod(P(f11, "x"), 11, P(f11, "x^2 - 2")), P(f11, "10x"));

  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    const UniPoly a = random_poly(f11, 1 + static_cast<int>(rng() % 12), rng);
    const UniPoly b = random_poly(f11, 1 + static_cast<int>(rng() % 6), rng);
    const auto [qq, rr] = divmod(a, b);
    EXPECT_EQ(qq * b + rr, a);
    EXPECT_LT(rr.degree(), b.degree());
    const UniPoly g = gcd(a, b);
    EXPECT_TRUE((a % g).is_zero());
    EXPECT_TRUE((b % g).is_zero());
  }
}

TEST(UniPoly, Irreducibility) {
  const FieldCtx f2 = FieldCtx::prime(2), f11 = FieldCtx::prime(11), f5 = FieldCtx::prime(5);
  EXPECT_TRUE(is_irreducible(P(f2, "x^4 + x + 1")));
  EXPECT_TRUE(is_irreducible(P(f11, "x^2 + 6x + 1")));
  EXPECT_FALSE(is_irreducible(P(f5, "x^2 - 1")));
  // degree <= 3: irreducible iff rootless
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const UniPoly f = random_poly(f11, 2 + static_cast<int>(rng() % 2), rng).monic();
    EXPECT_EQ(is_irreducible(f), brute_roots(f, 1) == 0) << f.to_string();
  }
}

TEST(UniPoly, FactorizationReconstructs) {
  std::mt19937_64 rng(7);
  for (const FieldCtx& ctx : {FieldCtx::prime(11), FieldCtx::prime(2), FieldCtx::extension_of_degree(2, 4),
                              FieldCtx::extension_of_degree(3, 2)}) {
    for (int i = 0; i < 40; ++i) {
      UniPoly f = random_poly(ctx, 1 + static_cast<int>(rng() % 15), rng);
      if (i % 3 == 0) f = f * f * random_poly(ctx, 2, rng);
      const FactorList fl = factor(f, i);
      EXPECT_EQ(fl.product(ctx), f) << ctx.describe();
      EXPECT_EQ(fl.unit, f.leading());
      for (std::size_t k = 0; k < fl.factors.size(); ++k) {
        EXPECT_TRUE(fl.factors[k].poly.is_monic());
        EXPECT_TRUE(is_irreducible(fl.factors[k].poly));
        if (k) EXPECT_TRUE(canonical_less(fl.factors[k - 1].poly, fl.factors[k].poly));
      }
    }
  }
  const FieldCtx f7 = FieldCtx::prime(7);
  const FactorList sq = factor(P(f7, "(x - 1)^2"));
  ASSERT_EQ(sq.factors.size(), 1u);
  EXPECT_EQ(sq.factors[0].poly, P(f7, "x - 1"));
  EXPECT_EQ(sq.factors[0].multiplicity, 2u);
}

TEST(UniPoly, FactorizationIsSeedIndependent) {
  const FieldCtx f257 = FieldCtx::prime(257);
  std::mt19937_64 rng(11);
  const UniPoly f = random_poly(f257, 30, rng);
  const FactorList a = factor(f, 1), b = factor(f, 99);
  ASSERT_EQ(a.factors.size(), b.factors.size());
  for (std::size_t i = 0; i < a.factors.size(); ++i) EXPECT_EQ(a.factors[i].poly, b.factors[i].poly);
}

TEST(UniPoly, RootsInExtensionMatchEnumeration) {
  std::mt19937_64 rng(13);
  for (std::uint64_t p : {2u, 3u, 5u}) {
    const FieldCtx ctx = FieldCtx::prime(p);
    for (int i = 0; i < 15; ++i) {
      const UniPoly f = random_poly(ctx, 2 + static_cast<int>(rng() % 8), rng);
      for (unsigned n : {1u, 2u, 3u}) EXPECT_EQ(count_roots_in_extension(f, n), brute_roots(f, n)) << f.to_string();
    }
  }
  const FieldCtx f11 = FieldCtx::prime(11);
  EXPECT_EQ(count_roots_in_extension(P(f11, "x^2 + 1"), 1), 0u);
  EXPECT_EQ(count_roots_in_extension(P(f11, "x^2 + 1"), 2), 2u);
}

TEST(UniPoly, SplittingDegreeIsLcm) {
  std::mt19937_64 rng(17);
  const FieldCtx f5 = FieldCtx::prime(5);
  for (int i = 0; i < 30; ++i) {
    const UniPoly f = random_poly(f5, 2 + static_cast<int>(rng() % 10), rng);
    if (!is_squarefree(f)) continue;
    const FactorList fl = factor(f);
    std::uint64_t l = 1;
    for (int d : fl.degree_multiset()) l = std::lcm(l, static_cast<std::uint64_t>(d));
    const std::uint64_t n = splitting_degree(fl);
    EXPECT_EQ(n, l);
    EXPECT_EQ(count_roots_in_extension(f, n), static_cast<std::uint64_t>(f.degree()));
  }
  const FieldCtx f7 = FieldCtx::prime(7);
  EXPECT_THROW(splitting_degree(factor(P(f7, "(x - 1)^2"))), Error);
}

TEST(UniPoly, FirstIrreducible) {
  const FieldCtx f2 = FieldCtx::prime(2);
  EXPECT_EQ(first_irreducible(f2, 4), P(f2, "x^4 + x + 1"));
  for (unsigned n = 1; n <= 6; ++n) EXPECT_TRUE(is_irreducible(first_irreducible(FieldCtx::prime(3), n)));
}

TEST(UniPoly, ComposeAndScale) {
  const FieldCtx f13 = FieldCtx::prime(13);
  const UniPoly f = P(f13, "x^3 + 2x + 5");
  EXPECT_EQ(f.compose(P(f13, "x + 1")), P(f13, "(x + 1)^3 + 2(x + 1) + 5"));
  EXPECT_EQ(f.scale_variable(f13.from_int(2)), P(f13, "8x^3 + 4x + 5"));
  EXPECT_EQ(f.derivative(), P(f13, "3x^2 + 2"));
}
