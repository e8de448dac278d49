#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>

#include "cboom/gf.hpp"
#include "cboom/upoly.hpp"

namespace cboom {

// x^x * z^z
struct Monomial2 {
  std::uint32_t x = 0;
  std::uint32_t z = 0;

  std::uint32_t total() const noexcept { return x + z; }
  bool divides(const Monomial2& m) const noexcept { return x <= m.x && z <= m.z; }

  friend auto operator<=>(const Monomial2&, const Monomial2&) = default;
  friend Monomial2 operator*(const Monomial2& a, const Monomial2& b) noexcept {
    return {a.x + b.x, a.z + b.z};
  }
};

inline Monomial2 lcm(const Monomial2& a, const Monomial2& b) noexcept {
  return {std::max(a.x, b.x), std::max(a.z, b.z)};
}

// a / b, requires b | a.
inline Monomial2 quotient(const Monomial2& a, const Monomial2& b) noexcept {
  return {a.x - b.x, a.z - b.z};
}

enum class Var { X, Z };

// Sparse bivariate polynomial in (x, z); never stores zero coefficients.
class BiPoly {
 public:
  using Terms = std::map<Monomial2, Elt>;

  explicit BiPoly(FieldCtx ctx) : ctx_(std::move(ctx)) {}
  BiPoly(FieldCtx ctx, Terms terms);

  static BiPoly constant(const FieldCtx& ctx, const Elt& c);
  static BiPoly monomial(const FieldCtx& ctx, const Elt& c, Monomial2 m);
  static BiPoly variable(const FieldCtx& ctx, Var v);

  const FieldCtx& ctx() const noexcept { return ctx_; }
  const Terms& terms() const noexcept { return t_; }
  bool is_zero() const noexcept { return t_.empty(); }
  std::size_t size() const noexcept { return t_.size(); }
  // -1 for the zero polynomial
  int total_degree() const noexcept;
  Elt coeff(const Monomial2& m) const;
  bool is_homogeneous() const noexcept;

  // Terms are printed in DRL-descending order (z > x).
  std::string to_string() const;

  friend bool operator==(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator-(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator-(const BiPoly& a);
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(const Elt& s, const BiPoly& a);

 private:
  FieldCtx ctx_;
  Terms t_;
};

BiPoly from_uni_in(Var v, const UniPoly& f);
// f(x + z)
BiPoly from_uni_of_sum(const UniPoly& f);
// UniPoly in x; InvalidArgument if z occurs.
UniPoly to_uni_in_x(const BiPoly& f);

// Substitutes v -> v + a.
BiPoly shift(const BiPoly& f, Var v, const Elt& a);
// Sum of the terms of maximal total degree. ZeroPolynomial for f = 0.
BiPoly top_component(const BiPoly& f);
// q with (z - x) * q = f. NotDivisible unless f(x, x) = 0.
BiPoly divide_exact_by_z_minus_x(const BiPoly& f);
Elt eval2(const BiPoly& f, const Elt& x, const Elt& z);

// Row n of Pascal's triangle reduced mod p.
std::vector<std::uint64_t> binomial_row_mod(std::uint32_t n, std::uint64_t p);

}  // namespace cboom
