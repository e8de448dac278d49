#pragma once

#include <cstdint>
#include <string_view>

#include "cboom/upoly.hpp"

namespace cboom {

// D_n(X, a) from D_0 = 2, D_1 = X, D_n = X D_{n-1} - a D_{n-2}.
UniPoly dickson(unsigned n, const Elt& a, const FieldCtx& ctx);

// gcd(n, q^2 - 1) = 1. Requires q < 2^64.
bool is_permutation_dickson(unsigned n, const FieldCtx& ctx);

// D_{mn}(X, a) = D_m(D_n(X, a), a^n)
bool check_commutation(unsigned m, unsigned n, const Elt& a, const FieldCtx& ctx);
// b^n D_n(X, a) = D_n(bX, b^2 a)
bool check_scaling(unsigned n, const Elt& a, const Elt& b, const FieldCtx& ctx);
// D_{pn}(X, a) = D_n(X, a)^p, p the characteristic
bool frobenius_index_identity(unsigned n, const Elt& a, const FieldCtx& ctx);

enum class TermParity { Even, Odd, Mixed };
std::string_view to_string(TermParity parity) noexcept;
// Parity shared by all exponents of D_n(X, a), or Mixed.
TermParity parity_of_terms(unsigned n, const Elt& a, const FieldCtx& ctx);

}  // namespace cboom
