#include "cboom/dickson.hpp"

#include <numeric>

namespace cboom {

UniPoly dickson(unsigned n, const Elt& a, const FieldCtx& ctx) {
  if (!ctx.contains(a)) throw Error(ErrorKind::CtxMismatch, "parameter not in " + ctx.describe());
  UniPoly prev = UniPoly::constant(ctx, ctx.from_int(2));
  if (n == 0) return prev;
  UniPoly cur = UniPoly::x(ctx);
  const UniPoly x = UniPoly::x(ctx);
  for (unsigned k = 2; k <= n; ++k) {
    UniPoly next = x * cur - a * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

bool is_permutation_dickson(unsigned n, const FieldCtx& ctx) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "index must be positive");
  const unsigned __int128 q = ctx.order_or_throw();
  const unsigned __int128 m = q * q - 1;
  return std::gcd(static_cast<std::uint64_t>(m % n), static_cast<std::uint64_t>(n)) == 1;
}

bool check_commutation(unsigned m, unsigned n, const Elt& a, const FieldCtx& ctx) {
  const UniPoly lhs = dickson(m * n, a, ctx);
  const UniPoly rhs = dickson(m, ctx.pow(a, n), ctx).compose(dickson(n, a, ctx));
  return lhs == rhs;
}

bool check_scaling(unsigned n, const Elt& a, const Elt& b, const FieldCtx& ctx) {
  const UniPoly lhs = ctx.pow(b, n) * dickson(n, a, ctx);
  const UniPoly rhs = dickson(n, ctx.mul(ctx.mul(b, b), a), ctx).scale_variable(b);
  return lhs == rhs;
}

bool frobenius_index_identity(unsigned n, const Elt& a, const FieldCtx& ctx) {
  const auto p = ctx.characteristic();
  return dickson(static_cast<unsigned>(p * n), a, ctx) == pow(dickson(n, a, ctx), p);
}

std::string_view to_string(TermParity parity) noexcept {
  switch (parity) {
    case TermParity::Even: return "even";
    case TermParity::Odd: return "odd";
    default: return "mixed";
  }
}

TermParity parity_of_terms(unsigned n, const Elt& a, const FieldCtx& ctx) {
  const UniPoly d = dickson(n, a, ctx);
  bool even = false, odd = false;
  for (std::size_t i = 0; i < d.coeffs().size(); ++i) {
    if (d.coeffs()[i].is_zero()) continue;
    (i % 2 ? odd : even) = true;
  }
  if (even && odd) return TermParity::Mixed;
  return odd ? TermParity::Odd : TermParity::Even;
}

}  // namespace cboom
