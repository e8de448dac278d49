#include "cboom/upoly.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace cboom {

namespace {

void require_same_ctx(const UniPoly& a, const UniPoly& b) {
  if (!(a.ctx() == b.ctx()))
    throw Error(ErrorKind::CtxMismatch, a.ctx().describe() + " vs " + b.ctx().describe());
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Coefficients of an all-p-th-power polynomial: f(X) = g(X)^p.
UniPoly pth_root_poly(const UniPoly& f) {
  const FieldCtx& ctx = f.ctx();
  const std::uint64_t p = ctx.characteristic();
  std::vector<Elt> c(static_cast<std::size_t>(f.degree()) / p + 1);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = ctx.pth_root(f.coeff(i * p));
  return UniPoly(ctx, std::move(c));
}

}  // namespace

UniPoly::UniPoly(FieldCtx ctx, std::vector<Elt> coeffs) : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
  trim();
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UniPoly UniPoly::constant(const FieldCtx& ctx, const Elt& c) { return UniPoly(ctx, {c}); }

UniPoly UniPoly::monomial(const FieldCtx& ctx, const Elt& c, std::size_t k) {
  std::vector<Elt> v(k + 1);
  v[k] = c;
  return UniPoly(ctx, std::move(v));
}

UniPoly UniPoly::from_ints(const FieldCtx& ctx, std::initializer_list<std::int64_t> coeffs) {
  std::vector<Elt> v;
  v.reserve(coeffs.size());
  for (std::int64_t c : coeffs) v.push_back(ctx.from_int(c));
  return UniPoly(ctx, std::move(v));
}

Elt UniPoly::eval(const Elt& x) const {
  if (!ctx_.contains(x)) throw Error(ErrorKind::CtxMismatch, "evaluation point not in " + ctx_.describe());
  Elt acc;
  for (std::size_t i = c_.size(); i-- > 0;) acc = ctx_.add(ctx_.mul(acc, x), c_[i]);
  return acc;
}

UniPoly UniPoly::monic() const {
  if (c_.empty()) return *this;
  const Elt s = ctx_.inv(c_.back());
  return s * *this;
}

UniPoly UniPoly::derivative() const {
  std::vector<Elt> d;
  for (std::size_t i = 1; i < c_.size(); ++i)
    d.push_back(ctx_.mul(ctx_.from_int(static_cast<std::int64_t>(i % ctx_.characteristic())), c_[i]));
  return UniPoly(ctx_, std::move(d));
}

UniPoly UniPoly::compose(const UniPoly& inner) const {
  require_same_ctx(*this, inner);
  UniPoly acc(ctx_);
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * inner + constant(ctx_, c_[i]);
  return acc;
}

UniPoly UniPoly::scale_variable(const Elt& s) const {
  std::vector<Elt> v(c_.size());
  Elt power = ctx_.one();
  for (std::size_t i = 0; i < c_.size(); ++i) {
    v[i] = ctx_.mul(c_[i], power);
    power = ctx_.mul(power, s);
  }
  return UniPoly(ctx_, std::move(v));
}

std::string UniPoly::to_string(std::string_view var) const {
  if (c_.empty()) return "0";
  std::string out;
  const bool ext = !ctx_.is_prime_field();
  for (std::size_t i = c_.size(); i-- > 0;) {
    const Elt& c = c_[i];
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string cs = ctx_.to_string(c);
    const bool unit = c == ctx_.one();
    if (i == 0) {
      out += cs;
      continue;
    }
    if (!unit) {
      bool compound = ext && cs.find('+') != std::string::npos;
      out += compound ? "(" + cs + ")" : cs;
      out += "*";
    }
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

bool operator==(const UniPoly& a, const UniPoly& b) { return a.ctx_ == b.ctx_ && a.c_ == b.c_; }

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  require_same_ctx(a, b);
  const FieldCtx& ctx = a.ctx_;
  std::vector<Elt> r(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = ctx.add(a.coeff(i), b.coeff(i));
  return UniPoly(ctx, std::move(r));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
  require_same_ctx(a, b);
  const FieldCtx& ctx = a.ctx_;
  std::vector<Elt> r(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = ctx.sub(a.coeff(i), b.coeff(i));
  return UniPoly(ctx, std::move(r));
}

UniPoly operator-(const UniPoly& a) { return UniPoly(a.ctx_) - a; }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  require_same_ctx(a, b);
  const FieldCtx& ctx = a.ctx_;
  if (a.is_zero() || b.is_zero()) return UniPoly(ctx);
  std::vector<Elt> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = ctx.add(r[i + j], ctx.mul(a.c_[i], b.c_[j]));
  }
  return UniPoly(ctx, std::move(r));
}

UniPoly operator*(const Elt& s, const UniPoly& a) {
  std::vector<Elt> r(a.c_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.ctx_.mul(s, a.c_[i]);
  return UniPoly(a.ctx_, std::move(r));
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  require_same_ctx(a, b);
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  const FieldCtx& ctx = a.ctx();
  if (a.degree() < b.degree()) return {UniPoly(ctx), a};
  std::vector<Elt> rem = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  std::vector<Elt> quo(rem.size() - db);
  const Elt lead_inv = ctx.inv(bc.back());
  const bool monic_divisor = bc.back() == ctx.one();
  for (std::size_t k = rem.size(); k-- > db;) {
    if (rem[k].is_zero()) continue;
    const Elt t = monic_divisor ? rem[k] : ctx.mul(rem[k], lead_inv);
    const std::size_t shift = k - db;
    quo[shift] = t;
    for (std::size_t i = 0; i < db; ++i)
      if (!bc[i].is_zero()) rem[shift + i] = ctx.sub(rem[shift + i], ctx.mul(t, bc[i]));
    rem[k] = Elt{};
  }
  rem.resize(db);
  return {UniPoly(ctx, std::move(quo)), UniPoly(ctx, std::move(rem))};
}

UniPoly operator%(const UniPoly& a, const UniPoly& b) { return divmod(a, b).second; }
UniPoly operator/(const UniPoly& a, const UniPoly& b) { return divmod(a, b).first; }

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly r0 = a, r1 = b;
  while (!r1.is_zero()) {
    UniPoly r = r0 % r1;
    r0 = std::move(r1);
    r1 = std::move(r);
  }
  return r0.monic();
}

UniPoly pow(const UniPoly& a, std::uint64_t e) {
  UniPoly result = UniPoly::constant(a.ctx(), a.ctx().one());
  UniPoly base = a;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

UniPoly pow_mod(const UniPoly& a, std::uint64_t e, const UniPoly& m) {
  UniPoly result = UniPoly::constant(a.ctx(), a.ctx().one()) % m;
  UniPoly base = a % m;
  while (e) {
    if (e & 1) result = (result * base) % m;
    e >>= 1;
    if (e) base = (base * base) % m;
  }
  return result;
}

UniPoly frobenius_mod(const UniPoly& a, const UniPoly& m, std::uint64_t k) {
  const std::uint64_t p = a.ctx().characteristic();
  const std::uint64_t steps = k * a.ctx().degree();
  UniPoly h = a % m;
  for (std::uint64_t i = 0; i < steps; ++i) h = pow_mod(h, p, m);
  return h;
}

bool is_irreducible(const UniPoly& f) {
  const int n = f.degree();
  if (n < 1) return false;
  if (n == 1) return true;
  const UniPoly g = f.monic();
  const UniPoly x = UniPoly::x(f.ctx());
  // X^{q^k} mod g for every k that we need, computed incrementally
  std::vector<UniPoly> frob;
  frob.reserve(static_cast<std::size_t>(n) + 1);
  frob.push_back(x % g);
  for (int k = 1; k <= n; ++k) frob.push_back(frobenius_mod(frob.back(), g));
  if (!((frob[static_cast<std::size_t>(n)] - x) % g).is_zero()) return false;
  for (std::uint64_t r : prime_divisors(static_cast<std::uint64_t>(n))) {
    const UniPoly h = frob[static_cast<std::size_t>(n / static_cast<int>(r))] - x;
    if (gcd(h, g).degree() != 0) return false;
  }
  return true;
}

bool is_squarefree(const UniPoly& f) {
  if (f.degree() < 1) return true;
  const UniPoly d = f.derivative();
  if (d.is_zero()) return false;
  return gcd(f, d).degree() == 0;
}

std::vector<Factor> squarefree_decomposition(const UniPoly& f0) {
  std::vector<Factor> out;
  if (f0.degree() < 1) return out;
  const UniPoly f = f0.monic();
  const std::uint64_t p = f.ctx().characteristic();
  UniPoly c = gcd(f, f.derivative());
  UniPoly w = f / c;
  unsigned i = 1;
  while (w.degree() > 0) {
    UniPoly y = gcd(w, c);
    UniPoly fac = w / y;
    if (fac.degree() > 0) out.push_back({fac, i});
    w = y;
    c = c / y;
    ++i;
  }
  if (c.degree() > 0) {
    for (Factor& sub : squarefree_decomposition(pth_root_poly(c))) {
      sub.multiplicity *= static_cast<unsigned>(p);
      out.push_back(std::move(sub));
    }
  }
  return out;
}

std::vector<std::pair<UniPoly, int>> distinct_degree_factorization(const UniPoly& f0) {
  std::vector<std::pair<UniPoly, int>> out;
  UniPoly f = f0.monic();
  const UniPoly x = UniPoly::x(f.ctx());
  UniPoly h = x % f;
  for (int d = 1; 2 * d <= f.degree(); ++d) {
    h = frobenius_mod(h, f);
    UniPoly g = gcd(h - x, f);
    if (g.degree() > 0) {
      out.emplace_back(g, d);
      f = f / g;
      h = h % f;
    }
  }
  if (f.degree() > 0) out.emplace_back(f, f.degree());
  return out;
}

namespace {

UniPoly random_poly_below(const FieldCtx& ctx, int degree_bound, std::mt19937_64& rng) {
  std::vector<Elt> c(static_cast<std::size_t>(degree_bound));
  for (auto& e : c) e = ctx.random(rng);
  return UniPoly(ctx, std::move(c));
}

// A proper factor of f (all irreducible factors of degree d), or f itself on a miss.
UniPoly try_split(const UniPoly& f, int d, std::mt19937_64& rng) {
  const FieldCtx& ctx = f.ctx();
  const UniPoly a = random_poly_below(ctx, f.degree(), rng);
  if (a.degree() < 1) return f;
  UniPoly g = gcd(a, f);
  if (g.degree() > 0 && g.degree() < f.degree()) return g;
  const std::uint64_t p = ctx.characteristic();
  if (p == 2) {
    // absolute trace F_{q^d} -> F_2 applied to a modulo f
    const std::uint64_t steps = static_cast<std::uint64_t>(d) * ctx.degree();
    UniPoly t = a % f, term = a % f;
    for (std::uint64_t i = 1; i < steps; ++i) {
      term = (term * term) % f;
      t = t + term;
    }
    return gcd(t, f);
  }
  // a^{(q^d - 1)/2} = (a^{1 + q + ... + q^{d-1}})^{(q-1)/2}
  const std::uint64_t q = ctx.order_or_throw();
  UniPoly norm = a % f, term = a % f;
  for (int i = 1; i < d; ++i) {
    term = frobenius_mod(term, f);
    norm = (norm * term) % f;
  }
  UniPoly b = pow_mod(norm, (q - 1) / 2, f);
  return gcd(b - UniPoly::constant(ctx, ctx.one()), f);
}

}  // namespace

std::vector<UniPoly> equal_degree_factorization(const UniPoly& f0, int d, std::mt19937_64& rng) {
  const UniPoly f = f0.monic();
  if (f.degree() <= d) return {f};
  for (;;) {
    UniPoly g = try_split(f, d, rng);
    if (g.degree() <= 0 || g.degree() >= f.degree()) continue;
    auto left = equal_degree_factorization(g, d, rng);
    auto right = equal_degree_factorization(f / g, d, rng);
    left.insert(left.end(), std::make_move_iterator(right.begin()), std::make_move_iterator(right.end()));
    return left;
  }
}

bool canonical_less(const UniPoly& a, const UniPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t i = a.coeffs().size(); i-- > 0;) {
    const auto c = a.coeffs()[i] <=> b.coeffs()[i];
    if (c != 0) return c < 0;
  }
  return false;
}

FactorList factor(const UniPoly& f, std::uint64_t seed) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "cannot factor the zero polynomial");
  FactorList out;
  out.unit = f.leading();
  std::mt19937_64 rng(seed);
  for (const Factor& part : squarefree_decomposition(f)) {
    for (const auto& [block, d] : distinct_degree_factorization(part.poly)) {
      for (UniPoly& irr : equal_degree_factorization(block, d, rng))
        out.factors.push_back({std::move(irr), part.multiplicity});
    }
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const Factor& a, const Factor& b) { return canonical_less(a.poly, b.poly); });
  std::vector<Factor> merged;
  for (Factor& fac : out.factors) {
    if (!merged.empty() && merged.back().poly == fac.poly)
      merged.back().multiplicity += fac.multiplicity;
    else
      merged.push_back(std::move(fac));
  }
  out.factors = std::move(merged);
  return out;
}

UniPoly FactorList::product(const FieldCtx& ctx) const {
  UniPoly acc = UniPoly::constant(ctx, unit);
  for (const Factor& fac : factors) acc = acc * pow(fac.poly, fac.multiplicity);
  return acc;
}

std::vector<int> FactorList::degree_multiset() const {
  std::vector<int> out;
  for (const Factor& fac : factors)
    for (unsigned i = 0; i < fac.multiplicity; ++i) out.push_back(fac.poly.degree());
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t count_roots_in_extension(const UniPoly& f, std::uint64_t n) {
  if (f.degree() < 1) return 0;
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "extension degree must be >= 1");
  UniPoly rad = UniPoly::constant(f.ctx(), f.ctx().one());
  for (const Factor& part : squarefree_decomposition(f)) rad = rad * part.poly;
  const UniPoly x = UniPoly::x(f.ctx());
  const UniPoly h = frobenius_mod(x, rad, n);
  return static_cast<std::uint64_t>(gcd(h - x, rad).degree());
}

std::uint64_t splitting_degree(const FactorList& fl) {
  std::uint64_t n = 1;
  for (const Factor& fac : fl.factors) {
    if (fac.multiplicity != 1)
      throw Error(ErrorKind::NotSquarefree, fac.poly.to_string() + " has multiplicity " +
                                                std::to_string(fac.multiplicity));
    n = std::lcm(n, static_cast<std::uint64_t>(fac.poly.degree()));
  }
  return n;
}

UniPoly first_irreducible(const FieldCtx& ctx, unsigned n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "degree must be >= 1");
  const std::uint64_t q = ctx.order_or_throw();
  std::vector<std::uint64_t> digits(n, 0);
  for (;;) {
    std::vector<Elt> c(n + 1);
    for (unsigned i = 0; i < n; ++i) c[i] = ctx.from_index(digits[i]);
    c[n] = ctx.one();
    UniPoly cand(ctx, std::move(c));
    if (is_irreducible(cand)) return cand;
    unsigned i = 0;
    while (i < n && ++digits[i] == q) digits[i++] = 0;
    if (i == n) throw Error(ErrorKind::InvalidArgument, "no irreducible found");
  }
}

}  // namespace cboom
