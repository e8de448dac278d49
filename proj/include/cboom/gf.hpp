#pragma once

// Finite field contexts F_p and F_{p^n} = F_p[Y]/(m(Y)).
//
// Elements are plain values (a trimmed little-endian coefficient vector over
// residues mod p) and carry no back-pointer to their field; all arithmetic goes
// through the FieldCtx that owns them. FieldCtx itself is a cheap handle to
// immutable shared data, so it can be copied freely and shared across threads.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "cboom/error.hpp"

namespace cboom {

class UniPoly;

class Elt {
 public:
  using Coeffs = boost::container::small_vector<std::uint64_t, 4>;

  Elt() = default;

  // `coeffs` must already be reduced mod p; trailing zeros are trimmed.
  explicit Elt(Coeffs coeffs);

  bool is_zero() const noexcept { return c_.empty(); }
  std::span<const std::uint64_t> coeffs() const noexcept { return {c_.data(), c_.size()}; }
  std::uint64_t coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
  std::size_t size() const noexcept { return c_.size(); }

  friend bool operator==(const Elt& a, const Elt& b) noexcept { return a.c_ == b.c_; }

  // Canonical element order: the order of the base-p integer sum c_i p^i.
  friend std::strong_ordering operator<=>(const Elt& a, const Elt& b) noexcept;

 private:
  friend class FieldCtx;
  Coeffs c_;
};

struct EltHash {
  std::size_t operator()(const Elt& e) const noexcept;
};

bool is_prime_u64(std::uint64_t n) noexcept;

class FieldCtx {
 public:
  // F_p. Throws CompositeModulus unless p is prime.
  static FieldCtx prime(std::uint64_t p, std::string generator_name = "g");

  // F_p[Y]/(modulus). `base` must be a prime field and `modulus` monic and
  // irreducible over it (ReducibleModulus otherwise). Degree 1 moduli give a
  // field isomorphic to the base and are rejected as InvalidArgument.
  static FieldCtx extension(const FieldCtx& base, const UniPoly& modulus,
                            std::string generator_name = "g");

  // F_{p^n} with the first monic irreducible of degree n in canonical order.
  static FieldCtx extension_of_degree(std::uint64_t p, unsigned n, std::string generator_name = "g");

  std::uint64_t characteristic() const noexcept;
  unsigned degree() const noexcept;
  bool is_prime_field() const noexcept { return degree() == 1; }
  // q = p^n when it fits in 64 bits.
  std::optional<std::uint64_t> order() const noexcept;
  std::uint64_t order_or_throw() const;
  // Monic defining modulus, low-to-high, length n + 1 (empty for prime fields).
  std::span<const std::uint64_t> modulus() const noexcept;
  const std::string& generator_name() const noexcept;
  // The prime subfield as its own context.
  FieldCtx prime_subfield() const;

  std::string describe() const;

  friend bool operator==(const FieldCtx& a, const FieldCtx& b) noexcept;

  Elt zero() const { return Elt{}; }
  Elt one() const;
  Elt from_int(std::int64_t v) const;
  Elt generator() const;
  Elt from_coeffs(std::span<const std::uint64_t> c) const;
  bool contains(const Elt& e) const noexcept;

  Elt add(const Elt& a, const Elt& b) const;
  Elt sub(const Elt& a, const Elt& b) const;
  Elt neg(const Elt& a) const;
  Elt mul(const Elt& a, const Elt& b) const;
  Elt inv(const Elt& a) const;
  Elt div(const Elt& a, const Elt& b) const { return mul(a, inv(b)); }
  Elt pow(const Elt& a, std::uint64_t e) const;
  // a^(p^k)
  Elt frobenius(const Elt& a, unsigned k = 1) const;
  // a^(1/p), the inverse Frobenius.
  Elt pth_root(const Elt& a) const;

  bool is_square(const Elt& a) const;
  // Deterministic: of the two roots s, -s returns the one whose coefficient
  // vector (c0, c1, ...) is lexicographically smaller. Throws NotASquare.
  Elt sqrt(const Elt& a) const;

  // Index of an element in canonical order; requires q < 2^64.
  std::uint64_t index(const Elt& a) const;
  Elt from_index(std::uint64_t i) const;
  std::vector<Elt> elements() const;

  Elt random(std::mt19937_64& rng) const;

  std::string to_string(const Elt& a) const;

 private:
  struct Data;
  explicit FieldCtx(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
};

}  // namespace cboom
