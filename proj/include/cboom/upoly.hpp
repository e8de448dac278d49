#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cboom/gf.hpp"

namespace cboom {

// Dense univariate polynomial over a FieldCtx, coefficients low-to-high.
// The zero polynomial has an empty coefficient vector and degree -1.
class UniPoly {
 public:
  explicit UniPoly(FieldCtx ctx) : ctx_(std::move(ctx)) {}
  UniPoly(FieldCtx ctx, std::vector<Elt> coeffs);

  static UniPoly constant(const FieldCtx& ctx, const Elt& c);
  static UniPoly monomial(const FieldCtx& ctx, const Elt& c, std::size_t k);
  static UniPoly x(const FieldCtx& ctx) { return monomial(ctx, ctx.one(), 1); }
  // Integer coefficients, low-to-high, reduced into the prime subfield.
  static UniPoly from_ints(const FieldCtx& ctx, std::initializer_list<std::int64_t> coeffs);

  const FieldCtx& ctx() const noexcept { return ctx_; }
  const std::vector<Elt>& coeffs() const noexcept { return c_; }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  Elt coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Elt{}; }
  Elt leading() const { return c_.empty() ? Elt{} : c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == ctx_.one(); }

  // Horner evaluation; CtxMismatch if x is not an element of ctx.
  Elt eval(const Elt& x) const;
  UniPoly monic() const;
  UniPoly derivative() const;
  // this(inner(X))
  UniPoly compose(const UniPoly& inner) const;
  // this(s * X)
  UniPoly scale_variable(const Elt& s) const;

  std::string to_string(std::string_view var = "x") const;

  friend bool operator==(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const Elt& s, const UniPoly& a);

 private:
  void trim();
  FieldCtx ctx_;
  std::vector<Elt> c_;
};

// Quotient and remainder; DivisionByZero for a zero divisor.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
UniPoly operator%(const UniPoly& a, const UniPoly& b);
UniPoly operator/(const UniPoly& a, const UniPoly& b);

// Monic gcd (zero only when both inputs are zero).
UniPoly gcd(const UniPoly& a, const UniPoly& b);
UniPoly pow(const UniPoly& a, std::uint64_t e);
UniPoly pow_mod(const UniPoly& a, std::uint64_t e, const UniPoly& m);
// a^(q^k) mod m, q the order of the coefficient field, via k*n p-th powers.
UniPoly frobenius_mod(const UniPoly& a, const UniPoly& m, std::uint64_t k = 1);

// Rabin's test. Polynomials of degree < 1 are not irreducible.
bool is_irreducible(const UniPoly& f);
bool is_squarefree(const UniPoly& f);

struct Factor {
  UniPoly poly;  // monic irreducible
  unsigned multiplicity;
};

struct FactorList {
  Elt unit;
  std::vector<Factor> factors;

  // unit times every factor raised to its multiplicity
  UniPoly product(const FieldCtx& ctx) const;
  // Degrees of the irreducible factors, repeated by multiplicity, ascending.
  std::vector<int> degree_multiset() const;
};

// Squarefree decomposition of a monic polynomial into pairwise coprime
// squarefree parts s_i with f = prod s_i^{m_i}.
std::vector<Factor> squarefree_decomposition(const UniPoly& f);
// For squarefree monic f: (product of all irreducible factors of degree d, d).
std::vector<std::pair<UniPoly, int>> distinct_degree_factorization(const UniPoly& f);
// Splits a squarefree monic f whose irreducible factors all have degree d.
std::vector<UniPoly> equal_degree_factorization(const UniPoly& f, int d, std::mt19937_64& rng);

// Complete factorization; deterministic for a fixed seed. Factors are sorted
// by degree, then by coefficients from the top down in canonical element order.
FactorList factor(const UniPoly& f, std::uint64_t seed = 0);

// Number of distinct roots of f in F_{q^n}: deg gcd(X^{q^n} - X, rad f),
// computed with Frobenius powers modulo f.
std::uint64_t count_roots_in_extension(const UniPoly& f, std::uint64_t n);

// lcm of the factor degrees; NotSquarefree if any multiplicity exceeds one.
std::uint64_t splitting_degree(const FactorList& fl);

// First monic irreducible of degree n in canonical enumeration order.
UniPoly first_irreducible(const FieldCtx& ctx, unsigned n);

// Total order used for sorting factors: degree, then coefficients top-down.
bool canonical_less(const UniPoly& a, const UniPoly& b);

}  // namespace cboom
