#include "cboom/gf.hpp"

#include <algorithm>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

#include "cboom/upoly.hpp"

namespace cboom {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using BigInt = boost::multiprecision::cpp_int;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 addmod(u64 a, u64 b, u64 m) { return a >= m - b ? a - (m - b) : a + b; }

u64 submod(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + (m - b); }

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 m) {
  // extended Euclid on signed 128-bit values
  __int128 t = 0, nt = 1, r = m, nr = a;
  while (nr != 0) {
    __int128 q = r / nr;
    __int128 tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (t < 0) t += m;
  return static_cast<u64>(t);
}

using Vec = std::vector<u64>;

void trim(Vec& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

// Polynomial helpers over F_p used for the extension inverse.
Vec vec_mul(const Vec& a, const Vec& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  Vec r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = addmod(r[i + j], mulmod(a[i], b[j], p), p);
  trim(r);
  return r;
}

Vec vec_sub(const Vec& a, const Vec& b, u64 p) {
  Vec r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = submod(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0, p);
  trim(r);
  return r;
}

void vec_divmod(const Vec& a, const Vec& b, u64 p, Vec& quo, Vec& rem) {
  rem = a;
  trim(rem);
  quo.clear();
  if (rem.size() < b.size()) return;
  quo.assign(rem.size() - b.size() + 1, 0);
  u64 lead_inv = invmod(b.back(), p);
  for (std::size_t k = rem.size(); k-- >= b.size();) {
    u64 t = mulmod(rem[k], lead_inv, p);
    if (t == 0) continue;
    std::size_t shift = k - (b.size() - 1);
    quo[shift] = t;
    for (std::size_t i = 0; i < b.size(); ++i)
      rem[shift + i] = submod(rem[shift + i], mulmod(t, b[i], p), p);
  }
  trim(rem);
  trim(quo);
}

}  // namespace

Elt::Elt(Coeffs coeffs) : c_(std::move(coeffs)) {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::strong_ordering operator<=>(const Elt& a, const Elt& b) noexcept {
  if (a.c_.size() != b.c_.size()) return a.c_.size() <=> b.c_.size();
  for (std::size_t i = a.c_.size(); i-- > 0;)
    if (a.c_[i] != b.c_[i]) return a.c_[i] <=> b.c_[i];
  return std::strong_ordering::equal;
}

std::size_t EltHash::operator()(const Elt& e) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (u64 c : e.coeffs()) h ^= c + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

bool is_prime_u64(u64 n) noexcept {
  if (n < 2) return false;
  for (u64 small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These twelve bases are a deterministic witness set for all n < 2^64.
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

struct FieldCtx::Data {
  u64 p = 0;
  unsigned n = 1;
  Vec modulus;  // monic, length n + 1; empty when n == 1
  std::string gen;
  std::optional<u64> q;
  BigInt q_big;
};

FieldCtx FieldCtx::prime(u64 p, std::string generator_name) {
  if (!is_prime_u64(p)) throw Error(ErrorKind::CompositeModulus, std::to_string(p) + " is not prime");
  auto d = std::make_shared<Data>();
  d->p = p;
  d->n = 1;
  d->gen = std::move(generator_name);
  d->q = p;
  d->q_big = p;
  return FieldCtx(std::move(d));
}

FieldCtx FieldCtx::extension(const FieldCtx& base, const UniPoly& modulus, std::string generator_name) {
  if (!base.is_prime_field())
    throw Error(ErrorKind::InvalidArgument, "extension base must be a prime field");
  if (!(modulus.ctx() == base)) throw Error(ErrorKind::CtxMismatch, "modulus is not over the base field");
  if (modulus.degree() < 2) throw Error(ErrorKind::InvalidArgument, "extension modulus must have degree >= 2");
  if (modulus.degree() > 64) throw Error(ErrorKind::InvalidArgument, "extension degree above 64");
  if (!(modulus.leading() == base.one()))
    throw Error(ErrorKind::ReducibleModulus, "modulus must be monic");
  if (!is_irreducible(modulus))
    throw Error(ErrorKind::ReducibleModulus, modulus.to_string("Y") + " is reducible over " + base.describe());
  auto d = std::make_shared<Data>();
  d->p = base.characteristic();
  d->n = static_cast<unsigned>(modulus.degree());
  d->modulus.reserve(d->n + 1);
  for (const Elt& c : modulus.coeffs()) d->modulus.push_back(c.coeff(0));
  d->gen = std::move(generator_name);
  d->q_big = 1;
  for (unsigned i = 0; i < d->n; ++i) d->q_big *= d->p;
  if (d->q_big <= BigInt(std::numeric_limits<u64>::max())) d->q = static_cast<u64>(d->q_big);
  return FieldCtx(std::move(d));
}

FieldCtx FieldCtx::extension_of_degree(u64 p, unsigned n, std::string generator_name) {
  FieldCtx base = prime(p, generator_name);
  if (n == 1) return base;
  return extension(base, first_irreducible(base, n), std::move(generator_name));
}

u64 FieldCtx::characteristic() const noexcept { return d_->p; }
unsigned FieldCtx::degree() const noexcept { return d_->n; }
std::optional<u64> FieldCtx::order() const noexcept { return d_->q; }

u64 FieldCtx::order_or_throw() const {
  if (!d_->q) throw Error(ErrorKind::InvalidArgument, "field order does not fit in 64 bits");
  return *d_->q;
}

std::span<const u64> FieldCtx::modulus() const noexcept { return d_->modulus; }
const std::string& FieldCtx::generator_name() const noexcept { return d_->gen; }

FieldCtx FieldCtx::prime_subfield() const {
  if (is_prime_field()) return *this;
  return prime(d_->p, d_->gen);
}

std::string FieldCtx::describe() const {
  std::ostringstream os;
  os << "F_" << d_->p;
  if (d_->n > 1) {
    os << "^" << d_->n << "[";
    bool first = true;
    for (std::size_t i = d_->modulus.size(); i-- > 0;) {
      u64 c = d_->modulus[i];
      if (c == 0) continue;
      if (!first) os << "+";
      first = false;
      if (c != 1 || i == 0) os << c;
      if (c != 1 && i > 0) os << "*";
      if (i > 0) os << "Y";
      if (i > 1) os << "^" << i;
    }
    os << "]";
  }
  return os.str();
}

bool operator==(const FieldCtx& a, const FieldCtx& b) noexcept {
  if (a.d_ == b.d_) return true;
  return a.d_->p == b.d_->p && a.d_->n == b.d_->n && a.d_->modulus == b.d_->modulus;
}

Elt FieldCtx::one() const { return Elt(Elt::Coeffs{1 % d_->p}); }

Elt FieldCtx::from_int(std::int64_t v) const {
  const u64 p = d_->p;
  if (v >= 0) return Elt(Elt::Coeffs{static_cast<u64>(v) % p});
  const u64 m = (static_cast<u64>(-(v + 1)) + 1) % p;
  return Elt(Elt::Coeffs{m ? p - m : 0});
}

Elt FieldCtx::generator() const {
  if (is_prime_field()) throw Error(ErrorKind::InvalidArgument, "prime fields have no generator symbol");
  if (d_->n == 1) return one();
  return Elt(Elt::Coeffs{0, 1});
}

Elt FieldCtx::from_coeffs(std::span<const u64> c) const {
  Elt::Coeffs v(c.begin(), c.end());
  for (auto& x : v) x %= d_->p;
  Elt e(std::move(v));
  if (e.size() > d_->n) throw Error(ErrorKind::CtxMismatch, "too many coefficients for " + describe());
  return e;
}

bool FieldCtx::contains(const Elt& e) const noexcept {
  if (e.size() > d_->n) return false;
  return std::all_of(e.coeffs().begin(), e.coeffs().end(), [&](u64 c) { return c < d_->p; });
}

Elt FieldCtx::add(const Elt& a, const Elt& b) const {
  const u64 p = d_->p;
  if (d_->n == 1) {
    u64 r = addmod(a.coeff(0), b.coeff(0), p);
    return r ? Elt(Elt::Coeffs{r}) : Elt{};
  }
  Elt::Coeffs r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = addmod(a.coeff(i), b.coeff(i), p);
  return Elt(std::move(r));
}

Elt FieldCtx::sub(const Elt& a, const Elt& b) const {
  const u64 p = d_->p;
  if (d_->n == 1) {
    u64 r = submod(a.coeff(0), b.coeff(0), p);
    return r ? Elt(Elt::Coeffs{r}) : Elt{};
  }
  Elt::Coeffs r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = submod(a.coeff(i), b.coeff(i), p);
  return Elt(std::move(r));
}

Elt FieldCtx::neg(const Elt& a) const { return sub(Elt{}, a); }

Elt FieldCtx::mul(const Elt& a, const Elt& b) const {
  if (a.is_zero() || b.is_zero()) return Elt{};
  const u64 p = d_->p;
  if (d_->n == 1) return Elt(Elt::Coeffs{mulmod(a.coeff(0), b.coeff(0), p)});
  const std::size_t la = a.size(), lb = b.size();
  boost::container::small_vector<u64, 8> prod(la + lb - 1, 0);
  for (std::size_t i = 0; i < la; ++i) {
    const u64 ai = a.coeff(i);
    if (ai == 0) continue;
    for (std::size_t j = 0; j < lb; ++j) prod[i + j] = addmod(prod[i + j], mulmod(ai, b.coeff(j), p), p);
  }
  const Vec& m = d_->modulus;
  const std::size_t n = d_->n;
  for (std::size_t k = prod.size(); k-- > n;) {
    const u64 t = prod[k];
    if (t == 0) continue;
    for (std::size_t i = 0; i < n; ++i) prod[k - n + i] = submod(prod[k - n + i], mulmod(t, m[i], p), p);
    prod[k] = 0;
  }
  Elt::Coeffs r(prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(std::min(prod.size(), n)));
  return Elt(std::move(r));
}

Elt FieldCtx::inv(const Elt& a) const {
  if (a.is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero in " + describe());
  const u64 p = d_->p;
  if (d_->n == 1) return Elt(Elt::Coeffs{invmod(a.coeff(0), p)});
  // Bezout: s*a + t*m = 1 over F_p[Y]
  Vec r0 = d_->modulus, r1(a.coeffs().begin(), a.coeffs().end());
  Vec s0, s1{1};
  while (!r1.empty()) {
    Vec q, r;
    vec_divmod(r0, r1, p, q, r);
    Vec s = vec_sub(s0, vec_mul(q, s1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // r0 is a nonzero constant since the modulus is irreducible
  const u64 c = invmod(r0[0], p);
  for (auto& x : s0) x = mulmod(x, c, p);
  return Elt(Elt::Coeffs(s0.begin(), s0.end()));
}

Elt FieldCtx::pow(const Elt& a, u64 e) const {
  Elt result = one();
  Elt base = a;
  while (e) {
    if (e & 1) result = mul(result, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  return result;
}

namespace {

Elt pow_big(const FieldCtx& ctx, const Elt& a, const BigInt& e) {
  Elt result = ctx.one();
  if (e == 0) return result;
  const unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(e));
  for (unsigned i = bits + 1; i-- > 0;) {
    result = ctx.mul(result, result);
    if (boost::multiprecision::bit_test(e, i)) result = ctx.mul(result, a);
  }
  return result;
}

}  // namespace

Elt FieldCtx::frobenius(const Elt& a, unsigned k) const {
  Elt r = a;
  k %= d_->n;
  for (unsigned i = 0; i < k; ++i) r = pow(r, d_->p);
  return r;
}

Elt FieldCtx::pth_root(const Elt& a) const { return frobenius(a, d_->n - 1); }

bool FieldCtx::is_square(const Elt& a) const {
  if (a.is_zero() || d_->p == 2) return true;
  return pow_big(*this, a, (d_->q_big - 1) / 2) == one();
}

Elt FieldCtx::sqrt(const Elt& a) const {
  if (a.is_zero()) return a;
  if (d_->p == 2) return frobenius(a, d_->n - 1);
  if (!is_square(a)) throw Error(ErrorKind::NotASquare, to_string(a) + " is not a square in " + describe());
  BigInt t = d_->q_big - 1;
  unsigned s = 0;
  while ((t & 1) == 0) {
    t >>= 1;
    ++s;
  }
  Elt root;
  if (s == 1) {
    root = pow_big(*this, a, (d_->q_big + 1) / 4);
  } else {
    // Tonelli-Shanks with the first non-residue in canonical order
    Elt z;
    for (u64 k = 2;; ++k) {
      Elt::Coeffs digits;
      for (u64 v = k; v; v /= d_->p) digits.push_back(v % d_->p);
      z = Elt(std::move(digits));
      if (!is_square(z)) break;
    }
    unsigned m = s;
    Elt c = pow_big(*this, z, t);
    Elt tt = pow_big(*this, a, t);
    root = pow_big(*this, a, (t + 1) / 2);
    while (!(tt == one())) {
      unsigned i = 0;
      Elt probe = tt;
      while (!(probe == one())) {
        probe = mul(probe, probe);
        ++i;
      }
      Elt b = c;
      for (unsigned j = 0; j + i + 1 < m; ++j) b = mul(b, b);
      m = i;
      c = mul(b, b);
      tt = mul(tt, c);
      root = mul(root, b);
    }
  }
  Elt other = neg(root);
  const auto lex_less = [&](const Elt& x, const Elt& y) {
    for (std::size_t i = 0; i < d_->n; ++i)
      if (x.coeff(i) != y.coeff(i)) return x.coeff(i) < y.coeff(i);
    return false;
  };
  return lex_less(other, root) ? other : root;
}

u64 FieldCtx::index(const Elt& a) const {
  order_or_throw();
  u64 idx = 0;
  for (std::size_t i = a.size(); i-- > 0;) idx = idx * d_->p + a.coeff(i);
  return idx;
}

Elt FieldCtx::from_index(u64 i) const {
  if (i >= order_or_throw()) throw Error(ErrorKind::InvalidArgument, "element index out of range");
  Elt::Coeffs digits;
  for (; i; i /= d_->p) digits.push_back(i % d_->p);
  return Elt(std::move(digits));
}

std::vector<Elt> FieldCtx::elements() const {
  const u64 q = order_or_throw();
  if (q > (u64{1} << 26)) throw Error(ErrorKind::BudgetExceeded, "refusing to enumerate " + describe());
  std::vector<Elt> out;
  out.reserve(q);
  for (u64 i = 0; i < q; ++i) out.push_back(from_index(i));
  return out;
}

Elt FieldCtx::random(std::mt19937_64& rng) const {
  Elt::Coeffs c(d_->n);
  for (auto& x : c) x = rng() % d_->p;
  return Elt(std::move(c));
}

std::string FieldCtx::to_string(const Elt& a) const {
  if (d_->n == 1) return std::to_string(a.coeff(0));
  if (a.is_zero()) return "0";
  std::string out;
  for (std::size_t i = a.size(); i-- > 0;) {
    const u64 c = a.coeff(i);
    if (c == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c) + "*";
    out += d_->gen;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::CompositeModulus: return "CompositeModulus";
    case ErrorKind::ReducibleModulus: return "ReducibleModulus";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NotASquare: return "NotASquare";
    case ErrorKind::CtxMismatch: return "CtxMismatch";
    case ErrorKind::NotSquarefree: return "NotSquarefree";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::CZero: return "CZero";
    case ErrorKind::AZero: return "AZero";
    case ErrorKind::NotAPermutation: return "NotAPermutation";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::NoBound: return "NoBound";
    case ErrorKind::DegenerateTriangle: return "DegenerateTriangle";
    case ErrorKind::NotZeroDimensional: return "NotZeroDimensional";
    case ErrorKind::FixtureMismatch: return "FixtureMismatch";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace cboom
