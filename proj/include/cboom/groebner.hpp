#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "cboom/bpoly.hpp"

namespace cboom {

// Both orders rank z above x.
//   DRL: higher total degree wins; on ties the smaller x-exponent wins.
//   LEX: higher z-exponent wins; on ties the higher x-exponent wins.
enum class TermOrder { DRL, LEX };

std::string_view to_string(TermOrder order) noexcept;
std::strong_ordering compare(TermOrder order, const Monomial2& a, const Monomial2& b) noexcept;

Monomial2 leading_monomial(const BiPoly& f, TermOrder order);
Elt leading_coeff(const BiPoly& f, TermOrder order);

struct Division {
  std::vector<BiPoly> quotients;
  BiPoly remainder;
};

// Multivariate division: f = sum q_i d_i + r with no term of r divisible by
// any LM(d_i). The first divisor (in list order) whose LM divides the current
// leading term is used.
Division divide(const BiPoly& f, const std::vector<BiPoly>& divisors, TermOrder order);
BiPoly remainder(const BiPoly& f, const std::vector<BiPoly>& divisors, TermOrder order);

BiPoly s_polynomial(const BiPoly& f, const BiPoly& g, TermOrder order);

struct GroebnerBasis {
  std::vector<BiPoly> polys;  // sorted by descending leading monomial
  TermOrder order = TermOrder::DRL;
  bool reduced = false;
};

struct BuchbergerStats {
  std::size_t pairs_considered = 0;
  std::size_t pairs_skipped_coprime = 0;
  std::size_t pairs_skipped_chain = 0;
  std::size_t reductions_to_zero = 0;
};

// Reduced Groebner basis. Pairs are selected by smallest lcm (normal
// strategy); pairs with coprime leading monomials are skipped.
GroebnerBasis buchberger(const std::vector<BiPoly>& generators, TermOrder order,
                         BuchbergerStats* stats = nullptr);

bool verify_buchberger_criterion(const std::vector<BiPoly>& basis, TermOrder order);

struct Staircase {
  std::vector<Monomial2> generators;  // minimal generators of the LM ideal
  bool finite = false;
  std::uint64_t count = 0;            // number of standard monomials when finite
  std::vector<Monomial2> standard;    // listed when finite, ascending in (x, z)
};

Staircase staircase(const GroebnerBasis& basis);
Staircase staircase_of(const std::vector<Monomial2>& leading_monomials);

// Staircase count of the DRL basis of the top components; nullopt when the
// top-component ideal is not zero-dimensional.
std::optional<std::uint64_t> dimension_bound_via_top_components(const std::vector<BiPoly>& system);

// DRL -> LEX conversion for zero-dimensional ideals (NotZeroDimensional otherwise).
GroebnerBasis fglm(const GroebnerBasis& drl_basis, TermOrder target = TermOrder::LEX);

struct LexShape {
  UniPoly g1;  // basis element z - g1(x)
  UniPoly g2;
};

std::optional<LexShape> lex_shape(const GroebnerBasis& lex_basis);

// Ideal equality check: each basis reduces the other's elements to zero.
bool same_ideal(const GroebnerBasis& a, const GroebnerBasis& b);

}  // namespace cboom
