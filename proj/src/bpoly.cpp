#include "cboom/bpoly.hpp"

#include <algorithm>
#include <vector>

namespace cboom {

namespace {

void require_same_ctx(const BiPoly& a, const BiPoly& b) {
  if (!(a.ctx() == b.ctx()))
    throw Error(ErrorKind::CtxMismatch, a.ctx().describe() + " vs " + b.ctx().describe());
}

void accumulate(const FieldCtx& ctx, BiPoly::Terms& t, const Monomial2& m, const Elt& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = t.try_emplace(m, c);
  if (inserted) return;
  it->second = ctx.add(it->second, c);
  if (it->second.is_zero()) t.erase(it);
}

bool drl_greater(const Monomial2& a, const Monomial2& b) {
  if (a.total() != b.total()) return a.total() > b.total();
  return a.z > b.z;
}

}  // namespace

std::vector<std::uint64_t> binomial_row_mod(std::uint32_t n, std::uint64_t p) {
  std::vector<std::uint64_t> row{1 % p};
  for (std::uint32_t k = 1; k <= n; ++k) {
    std::vector<std::uint64_t> next(k + 1);
    next[0] = next[k] = 1 % p;
    for (std::uint32_t i = 1; i < k; ++i) {
      const std::uint64_t s = row[i - 1] + row[i];
      next[i] = s >= p ? s - p : s;
    }
    row = std::move(next);
  }
  return row;
}

BiPoly::BiPoly(FieldCtx ctx, Terms terms) : ctx_(std::move(ctx)), t_(std::move(terms)) {
  std::erase_if(t_, [](const auto& kv) { return kv.second.is_zero(); });
}

BiPoly BiPoly::constant(const FieldCtx& ctx, const Elt& c) { return monomial(ctx, c, {}); }

BiPoly BiPoly::monomial(const FieldCtx& ctx, const Elt& c, Monomial2 m) {
  Terms t;
  if (!c.is_zero()) t.emplace(m, c);
  return BiPoly(ctx, std::move(t));
}

BiPoly BiPoly::variable(const FieldCtx& ctx, Var v) {
  return monomial(ctx, ctx.one(), v == Var::X ? Monomial2{1, 0} : Monomial2{0, 1});
}

int BiPoly::total_degree() const noexcept {
  int d = -1;
  for (const auto& [m, c] : t_) d = std::max(d, static_cast<int>(m.total()));
  return d;
}

Elt BiPoly::coeff(const Monomial2& m) const {
  auto it = t_.find(m);
  return it == t_.end() ? Elt{} : it->second;
}

bool BiPoly::is_homogeneous() const noexcept {
  if (t_.empty()) return true;
  const auto d = t_.begin()->first.total();
  return std::all_of(t_.begin(), t_.end(), [d](const auto& kv) { return kv.first.total() == d; });
}

std::string BiPoly::to_string() const {
  if (t_.empty()) return "0";
  std::vector<std::pair<Monomial2, Elt>> terms(t_.begin(), t_.end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return drl_greater(a.first, b.first); });
  std::string out;
  for (const auto& [m, c] : terms) {
    if (!out.empty()) out += " + ";
    std::string cs = ctx_.to_string(c);
    const bool unit = c == ctx_.one();
    std::string mono;
    auto append_var = [&mono](const char* name, std::uint32_t e) {
      if (e == 0) return;
      if (!mono.empty()) mono += "*";
      mono += name;
      if (e > 1) mono += "^" + std::to_string(e);
    };
    append_var("z", m.z);
    append_var("x", m.x);
    if (mono.empty()) {
      out += cs;
    } else if (unit) {
      out += mono;
    } else {
      const bool compound = !ctx_.is_prime_field() && cs.find('+') != std::string::npos;
      out += (compound ? "(" + cs + ")" : cs) + "*" + mono;
    }
  }
  return out;
}

bool operator==(const BiPoly& a, const BiPoly& b) { return a.ctx_ == b.ctx_ && a.t_ == b.t_; }

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
  require_same_ctx(a, b);
  BiPoly::Terms t = a.t_;
  for (const auto& [m, c] : b.t_) accumulate(a.ctx_, t, m, c);
  return BiPoly(a.ctx_, std::move(t));
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) {
  require_same_ctx(a, b);
  BiPoly::Terms t = a.t_;
  for (const auto& [m, c] : b.t_) accumulate(a.ctx_, t, m, a.ctx_.neg(c));
  return BiPoly(a.ctx_, std::move(t));
}

BiPoly operator-(const BiPoly& a) { return BiPoly(a.ctx_) - a; }

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  require_same_ctx(a, b);
  BiPoly::Terms t;
  for (const auto& [ma, ca] : a.t_)
    for (const auto& [mb, cb] : b.t_) accumulate(a.ctx_, t, ma * mb, a.ctx_.mul(ca, cb));
  return BiPoly(a.ctx_, std::move(t));
}

BiPoly operator*(const Elt& s, const BiPoly& a) {
  BiPoly::Terms t;
  for (const auto& [m, c] : a.t_) t.emplace(m, a.ctx_.mul(s, c));
  return BiPoly(a.ctx_, std::move(t));
}

BiPoly from_uni_in(Var v, const UniPoly& f) {
  BiPoly::Terms t;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    const auto e = static_cast<std::uint32_t>(i);
    t.emplace(v == Var::X ? Monomial2{e, 0} : Monomial2{0, e}, f.coeffs()[i]);
  }
  return BiPoly(f.ctx(), std::move(t));
}

BiPoly from_uni_of_sum(const UniPoly& f) {
  const FieldCtx& ctx = f.ctx();
  BiPoly::Terms t;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    const Elt& a = f.coeffs()[i];
    if (a.is_zero()) continue;
    const auto n = static_cast<std::uint32_t>(i);
    const auto row = binomial_row_mod(n, ctx.characteristic());
    for (std::uint32_t k = 0; k <= n; ++k) {
      if (row[k] == 0) continue;
      accumulate(ctx, t, {k, n - k}, ctx.mul(a, ctx.from_int(static_cast<std::int64_t>(row[k]))));
    }
  }
  return BiPoly(ctx, std::move(t));
}

UniPoly to_uni_in_x(const BiPoly& f) {
  std::vector<Elt> c;
  for (const auto& [m, v] : f.terms()) {
    if (m.z != 0) throw Error(ErrorKind::InvalidArgument, "polynomial depends on z: " + f.to_string());
    if (c.size() <= m.x) c.resize(m.x + 1);
    c[m.x] = v;
  }
  return UniPoly(f.ctx(), std::move(c));
}

BiPoly shift(const BiPoly& f, Var v, const Elt& a) {
  const FieldCtx& ctx = f.ctx();
  if (a.is_zero()) return f;
  const std::uint32_t max_e = [&] {
    std::uint32_t e = 0;
    for (const auto& [m, c] : f.terms()) e = std::max(e, v == Var::X ? m.x : m.z);
    return e;
  }();
  std::vector<Elt> apow(max_e + 1);
  apow[0] = ctx.one();
  for (std::uint32_t i = 1; i <= max_e; ++i) apow[i] = ctx.mul(apow[i - 1], a);
  std::vector<std::vector<std::uint64_t>> rows;
  rows.reserve(max_e + 1);
  for (std::uint32_t n = 0; n <= max_e; ++n) rows.push_back(binomial_row_mod(n, ctx.characteristic()));

  BiPoly::Terms t;
  for (const auto& [m, c] : f.terms()) {
    const std::uint32_t n = v == Var::X ? m.x : m.z;
    for (std::uint32_t k = 0; k <= n; ++k) {
      if (rows[n][k] == 0) continue;
      const Elt coef = ctx.mul(c, ctx.mul(apow[n - k], ctx.from_int(static_cast<std::int64_t>(rows[n][k]))));
      const Monomial2 mm = v == Var::X ? Monomial2{k, m.z} : Monomial2{m.x, k};
      accumulate(ctx, t, mm, coef);
    }
  }
  return BiPoly(ctx, std::move(t));
}

BiPoly top_component(const BiPoly& f) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "top component of zero");
  const auto d = static_cast<std::uint32_t>(f.total_degree());
  BiPoly::Terms t;
  for (const auto& [m, c] : f.terms())
    if (m.total() == d) t.emplace(m, c);
  return BiPoly(f.ctx(), std::move(t));
}

BiPoly divide_exact_by_z_minus_x(const BiPoly& f) {
  const FieldCtx& ctx = f.ctx();
  // Each homogeneous component h_k = sum_j c_j x^{k-j} z^j is divided on its
  // own: the quotient coefficients are the negated prefix sums e_j = -(c_0 + ... + c_j).
  std::map<std::uint32_t, std::vector<Elt>> components;
  for (const auto& [m, c] : f.terms()) {
    auto& row = components[m.total()];
    if (row.empty()) row.resize(m.total() + 1);
    row[m.z] = c;
  }
  BiPoly::Terms t;
  for (const auto& [k, row] : components) {
    Elt prefix;
    for (std::uint32_t j = 0; j < k; ++j) {
      prefix = ctx.add(prefix, row[j]);
      if (!prefix.is_zero()) t.emplace(Monomial2{k - 1 - j, j}, ctx.neg(prefix));
    }
    prefix = ctx.add(prefix, row[k]);
    if (!prefix.is_zero())
      throw Error(ErrorKind::NotDivisible, "(z - x) does not divide " + f.to_string());
  }
  return BiPoly(ctx, std::move(t));
}

Elt eval2(const BiPoly& f, const Elt& x, const Elt& z) {
  const FieldCtx& ctx = f.ctx();
  if (!ctx.contains(x) || !ctx.contains(z))
    throw Error(ErrorKind::CtxMismatch, "evaluation point not in " + ctx.describe());
  Elt acc;
  for (const auto& [m, c] : f.terms())
    acc = ctx.add(acc, ctx.mul(c, ctx.mul(ctx.pow(x, m.x), ctx.pow(z, m.z))));
  return acc;
}

}  // namespace cboom
