#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cboom/bpoly.hpp"

namespace cboom {

enum class SystemMode { General, COne, CMinusOne };  // c^2 != 1, c = 1, c = -1

std::string_view to_string(SystemMode mode) noexcept;
SystemMode system_mode(const FieldCtx& ctx, const Elt& c);

// The boomerang equations in (x, z) with z = x + y:
//   F1 = f(z) - c f(x) - b
//   F2 = c f(z + a) - f(x + a) - c b
// and the reduced second generator G2 = c^-1 F2 - F1, divided by (z - x)
// when c = 1. The pair (F1, G2) generates the same ideal as (F1, F2) away
// from the diagonal z = x, which only matters for c = 1.
struct BoomerangSystem {
  UniPoly f;
  Elt c, a, b;
  BiPoly F1, F2, G2;
  SystemMode mode;

  std::vector<BiPoly> generators() const { return {F1, G2}; }
};

// CZero for c = 0, AZero for a = 0.
BoomerangSystem build_system(const UniPoly& f, const Elt& c, const Elt& a, const Elt& b);

// Number of (x, y) in F_q^2 solving both boomerang equations. CZero for c = 0.
std::uint64_t bct_entry(const UniPoly& f, const Elt& c, const Elt& a, const Elt& b);

// Same count through the inverse-permutation form
//   #{x : f^-1(c^-1 f(x + a) + b) - f^-1(c f(x) + b) = a}.
// NotAPermutation unless f permutes F_q.
std::uint64_t bct_entry_permutation_form(const UniPoly& f, const Elt& c, const Elt& a, const Elt& b);

// #{x : f(x + a) - f(x) = b}
std::uint64_t ddt_entry(const UniPoly& f, const Elt& a, const Elt& b);

struct ScanOptions {
  std::uint64_t max_field_size = 512;  // BudgetExceeded above this
  unsigned threads = 0;                // 0: hardware concurrency
  bool full_grid = false;              // include a = 0 and b = 0 in the maximum
};

// Rows a, columns b, both in canonical element order. Rows start at a = 1
// unless the full grid was requested.
struct BctTable {
  FieldCtx ctx;
  UniPoly f;
  Elt c;
  std::vector<Elt> rows;
  std::vector<Elt> cols;
  std::vector<std::uint64_t> counts;  // row-major

  std::uint64_t at(std::size_t row, std::size_t col) const { return counts[row * cols.size() + col]; }
};

BctTable bct_table(const UniPoly& f, const Elt& c, const ScanOptions& opts = {});

struct Bound {
  std::uint64_t value;
  std::string source;
};

// d^2 (c^2 != 1), d(d-1) (c = -1), d(d-2) (c = 1, odd q), d(d-2) - 1 (c = 1,
// even q). NoBound when gcd(d, q) != 1 or the c = 1 formula is negative.
Bound applicable_bound(int degree, const Elt& c, const FieldCtx& ctx);

struct Witness {
  Elt a, b;
  std::uint64_t count;
};

struct UniformityReport {
  std::uint64_t beta = 0;
  std::vector<Witness> witnesses;  // every maximising (a, b), smallest first
  std::optional<Bound> bound;
  bool pass = true;                // beta <= bound, or no bound applies
};

UniformityReport uniformity(const UniPoly& f, const Elt& c, const ScanOptions& opts = {});
UniformityReport summarize(const BctTable& table, bool full_grid = false);

}  // namespace cboom
