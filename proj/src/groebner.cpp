#include "cboom/groebner.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

namespace cboom {

std::string_view to_string(TermOrder order) noexcept { return order == TermOrder::DRL ? "DRL" : "LEX"; }

std::strong_ordering compare(TermOrder order, const Monomial2& a, const Monomial2& b) noexcept {
  if (order == TermOrder::DRL) {
    if (a.total() != b.total()) return a.total() <=> b.total();
    // equal degree: the rightmost (x) entry of a - b negative means a > b
    return b.x <=> a.x;
  }
  if (a.z != b.z) return a.z <=> b.z;
  return a.x <=> b.x;
}

namespace {

struct Desc {
  TermOrder order;
  bool operator()(const Monomial2& a, const Monomial2& b) const { return compare(order, a, b) > 0; }
};

using Accum = std::map<Monomial2, Elt, Desc>;

struct Term {
  Monomial2 m;
  Elt c;
};

// Terms sorted by descending monomial under the active order.
using Poly = std::vector<Term>;

Poly to_poly(const BiPoly& f, TermOrder order) {
  Poly p;
  p.reserve(f.size());
  for (const auto& [m, c] : f.terms()) p.push_back({m, c});
  std::sort(p.begin(), p.end(), [order](const Term& a, const Term& b) { return compare(order, a.m, b.m) > 0; });
  return p;
}

BiPoly to_bipoly(const FieldCtx& ctx, const Poly& p) {
  BiPoly::Terms t;
  for (const Term& term : p) t.emplace(term.m, term.c);
  return BiPoly(ctx, std::move(t));
}

Poly make_monic(const FieldCtx& ctx, Poly p) {
  if (p.empty() || p.front().c == ctx.one()) return p;
  const Elt s = ctx.inv(p.front().c);
  for (Term& t : p) t.c = ctx.mul(t.c, s);
  return p;
}

void sub_scaled(const FieldCtx& ctx, Accum& acc, const Poly& g, const Elt& coef, const Monomial2& shift) {
  for (const Term& t : g) {
    const Monomial2 m = t.m * shift;
    const Elt v = ctx.mul(coef, t.c);
    auto [it, inserted] = acc.try_emplace(m, Elt{});
    it->second = ctx.sub(it->second, v);
    if (it->second.is_zero()) acc.erase(it);
  }
}

// Full remainder of f modulo monic polys `basis` (first divisor wins).
Poly reduce_full(const FieldCtx& ctx, const Poly& f, const std::vector<Poly>& basis, TermOrder order,
                 std::size_t skip = static_cast<std::size_t>(-1)) {
  Accum acc{Desc{order}};
  for (const Term& t : f) acc.emplace(t.m, t.c);
  Poly r;
  while (!acc.empty()) {
    auto it = acc.begin();
    const Monomial2 m = it->first;
    const Elt c = it->second;
    const Poly* div = nullptr;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (i == skip || basis[i].empty()) continue;
      if (basis[i].front().m.divides(m)) {
        div = &basis[i];
        break;
      }
    }
    if (!div) {
      r.push_back({m, c});
      acc.erase(it);
      continue;
    }
    sub_scaled(ctx, acc, *div, c, quotient(m, div->front().m));
  }
  return r;
}

Poly spoly(const FieldCtx& ctx, const Poly& f, const Poly& g, TermOrder order) {
  const Monomial2 l = lcm(f.front().m, g.front().m);
  Accum acc{Desc{order}};
  const Elt fi = ctx.inv(f.front().c), gi = ctx.inv(g.front().c);
  sub_scaled(ctx, acc, f, ctx.neg(fi), quotient(l, f.front().m));
  sub_scaled(ctx, acc, g, gi, quotient(l, g.front().m));
  Poly r;
  r.reserve(acc.size());
  for (auto& [m, c] : acc) r.push_back({m, c});
  return r;
}

bool coprime(const Monomial2& a, const Monomial2& b) { return (a.x == 0 || b.x == 0) && (a.z == 0 || b.z == 0); }

std::vector<Poly> reduce_basis(const FieldCtx& ctx, std::vector<Poly> g, TermOrder order) {
  // drop elements whose LM is divisible by another LM (keep the first of equal LMs)
  std::vector<Poly> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial2& mi = g[i].front().m;
      const Monomial2& mj = g[j].front().m;
      if (mj.divides(mi) && (mi != mj || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(make_monic(ctx, g[i]));
  }
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    Poly tail(minimal[i].begin() + 1, minimal[i].end());
    Poly rt = reduce_full(ctx, tail, minimal, order, i);
    Poly out{minimal[i].front()};
    out.insert(out.end(), rt.begin(), rt.end());
    minimal[i] = std::move(out);
  }
  std::sort(minimal.begin(), minimal.end(),
            [order](const Poly& a, const Poly& b) { return compare(order, a.front().m, b.front().m) > 0; });
  return minimal;
}

}  // namespace

Monomial2 leading_monomial(const BiPoly& f, TermOrder order) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "leading monomial of zero");
  auto best = f.terms().begin();
  for (auto it = f.terms().begin(); it != f.terms().end(); ++it)
    if (compare(order, it->first, best->first) > 0) best = it;
  return best->first;
}

Elt leading_coeff(const BiPoly& f, TermOrder order) { return f.coeff(leading_monomial(f, order)); }

Division divide(const BiPoly& f, const std::vector<BiPoly>& divisors, TermOrder order) {
  const FieldCtx& ctx = f.ctx();
  std::vector<Poly> ds;
  std::vector<Elt> lead_inv;
  for (const BiPoly& d : divisors) {
    if (d.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "zero divisor in division");
    if (!(d.ctx() == ctx)) throw Error(ErrorKind::CtxMismatch, "divisor over a different field");
    ds.push_back(to_poly(d, order));
    lead_inv.push_back(ctx.inv(ds.back().front().c));
  }
  std::vector<BiPoly::Terms> quotients(ds.size());
  Accum acc{Desc{order}};
  for (const auto& [m, c] : f.terms()) acc.emplace(m, c);
  BiPoly::Terms rem;
  while (!acc.empty()) {
    auto it = acc.begin();
    const Monomial2 m = it->first;
    const Elt c = it->second;
    bool divided = false;
    for (std::size_t i = 0; i < ds.size(); ++i) {
      if (!ds[i].front().m.divides(m)) continue;
      const Elt coef = ctx.mul(c, lead_inv[i]);
      const Monomial2 shift = quotient(m, ds[i].front().m);
      quotients[i].emplace(shift, coef);
      sub_scaled(ctx, acc, ds[i], coef, shift);
      divided = true;
      break;
    }
    if (!divided) {
      rem.emplace(m, c);
      acc.erase(it);
    }
  }
  Division out{{}, BiPoly(ctx, std::move(rem))};
  for (auto& q : quotients) out.quotients.emplace_back(ctx, std::move(q));
  return out;
}

BiPoly remainder(const BiPoly& f, const std::vector<BiPoly>& divisors, TermOrder order) {
  return divide(f, divisors, order).remainder;
}

BiPoly s_polynomial(const BiPoly& f, const BiPoly& g, TermOrder order) {
  if (f.is_zero() || g.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "S-polynomial of zero");
  return to_bipoly(f.ctx(), spoly(f.ctx(), to_poly(f, order), to_poly(g, order), order));
}

GroebnerBasis buchberger(const std::vector<BiPoly>& generators, TermOrder order, BuchbergerStats* stats) {
  BuchbergerStats local;
  BuchbergerStats& st = stats ? *stats : local;
  if (generators.empty()) throw Error(ErrorKind::InvalidArgument, "no generators");
  const FieldCtx ctx = generators.front().ctx();

  std::vector<Poly> g;
  for (const BiPoly& f : generators) {
    if (!(f.ctx() == ctx)) throw Error(ErrorKind::CtxMismatch, "generators over different fields");
    if (!f.is_zero()) g.push_back(make_monic(ctx, to_poly(f, order)));
  }
  if (g.empty()) throw Error(ErrorKind::ZeroPolynomial, "all generators are zero");

  struct Pair {
    Monomial2 lcm;
    std::size_t i, j;
  };
  auto pair_less = [order](const Pair& a, const Pair& b) {
    const auto c = compare(order, a.lcm, b.lcm);
    if (c != 0) return c < 0;
    return std::tie(a.i, a.j) < std::tie(b.i, b.j);
  };
  std::set<Pair, decltype(pair_less)> queue(pair_less);
  std::set<std::pair<std::size_t, std::size_t>> pending;
  auto add_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      queue.insert({lcm(g[i].front().m, g[j].front().m), i, j});
      pending.insert({i, j});
    }
  };
  for (std::size_t j = 1; j < g.size(); ++j) add_pairs_for(j);

  while (!queue.empty()) {
    const Pair pr = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({pr.i, pr.j});
    ++st.pairs_considered;
    if (coprime(g[pr.i].front().m, g[pr.j].front().m)) {
      ++st.pairs_skipped_coprime;
      continue;
    }
    // chain criterion: some g_k with LM | lcm whose pairs with i and j are done
    bool chain = false;
    for (std::size_t k = 0; k < g.size() && !chain; ++k) {
      if (k == pr.i || k == pr.j || !g[k].front().m.divides(pr.lcm)) continue;
      const auto key = [](std::size_t a, std::size_t b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
      if (!pending.count(key(pr.i, k)) && !pending.count(key(pr.j, k))) chain = true;
    }
    if (chain) {
      ++st.pairs_skipped_chain;
      continue;
    }
    Poly r = reduce_full(ctx, spoly(ctx, g[pr.i], g[pr.j], order), g, order);
    if (r.empty()) {
      ++st.reductions_to_zero;
      continue;
    }
    g.push_back(make_monic(ctx, std::move(r)));
    add_pairs_for(g.size() - 1);
  }

  GroebnerBasis out;
  out.order = order;
  out.reduced = true;
  for (const Poly& p : reduce_basis(ctx, std::move(g), order)) out.polys.push_back(to_bipoly(ctx, p));
  return out;
}

bool verify_buchberger_criterion(const std::vector<BiPoly>& basis, TermOrder order) {
  std::vector<BiPoly> nonzero;
  for (const BiPoly& f : basis)
    if (!f.is_zero()) nonzero.push_back(f);
  for (std::size_t i = 0; i < nonzero.size(); ++i)
    for (std::size_t j = i + 1; j < nonzero.size(); ++j)
      if (!remainder(s_polynomial(nonzero[i], nonzero[j], order), nonzero, order).is_zero()) return false;
  return true;
}

Staircase staircase_of(const std::vector<Monomial2>& lms) {
  Staircase s;
  for (std::size_t i = 0; i < lms.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < lms.size() && !redundant; ++j)
      if (i != j && lms[j].divides(lms[i]) && (lms[i] != lms[j] || j < i)) redundant = true;
    if (!redundant) s.generators.push_back(lms[i]);
  }
  std::sort(s.generators.begin(), s.generators.end(),
            [](const Monomial2& a, const Monomial2& b) { return std::tie(a.x, a.z) < std::tie(b.x, b.z); });
  bool pure_x = false, pure_z = false;
  std::uint32_t x_bound = 0;
  for (const Monomial2& m : s.generators) {
    if (m.z == 0) {
      pure_x = true;
      x_bound = m.x;
    }
    if (m.x == 0) pure_z = true;
  }
  s.finite = pure_x && pure_z;
  if (!s.finite) return s;
  for (std::uint32_t i = 0; i < x_bound; ++i) {
    // smallest z-exponent of a generator dividing some x^i z^j
    std::uint32_t z_bound = std::numeric_limits<std::uint32_t>::max();
    for (const Monomial2& m : s.generators)
      if (m.x <= i) z_bound = std::min(z_bound, m.z);
    for (std::uint32_t j = 0; j < z_bound; ++j) s.standard.push_back({i, j});
  }
  s.count = s.standard.size();
  return s;
}

Staircase staircase(const GroebnerBasis& basis) {
  std::vector<Monomial2> lms;
  for (const BiPoly& f : basis.polys) lms.push_back(leading_monomial(f, basis.order));
  return staircase_of(lms);
}

std::optional<std::uint64_t> dimension_bound_via_top_components(const std::vector<BiPoly>& system) {
  std::vector<BiPoly> tops;
  for (const BiPoly& f : system)
    if (!f.is_zero()) tops.push_back(top_component(f));
  if (tops.empty()) return std::nullopt;
  const Staircase s = staircase(buchberger(tops, TermOrder::DRL));
  if (!s.finite) return std::nullopt;
  return s.count;
}

GroebnerBasis fglm(const GroebnerBasis& drl_basis, TermOrder target) {
  if (drl_basis.polys.empty()) throw Error(ErrorKind::InvalidArgument, "empty basis");
  const FieldCtx ctx = drl_basis.polys.front().ctx();
  const TermOrder src = drl_basis.order;
  // work from the reduced basis so normal forms are well defined
  GroebnerBasis g = drl_basis.reduced ? drl_basis : buchberger(drl_basis.polys, src);
  const Staircase st = staircase(g);
  if (!st.finite) throw Error(ErrorKind::NotZeroDimensional, "ideal is not zero-dimensional");
  GroebnerBasis out;
  out.order = target;
  out.reduced = true;
  if (st.count == 0) {
    out.polys.push_back(BiPoly::constant(ctx, ctx.one()));
    return out;
  }

  std::vector<Poly> gp;
  for (const BiPoly& f : g.polys) gp.push_back(to_poly(f, src));
  const std::size_t dim = st.standard.size();
  std::map<Monomial2, std::size_t> index;
  for (std::size_t k = 0; k < dim; ++k) index[st.standard[k]] = k;

  using Vec = std::vector<Elt>;
  auto normal_form = [&](const Monomial2& m) {
    Vec v(dim);
    for (const Term& t : reduce_full(ctx, Poly{{m, ctx.one()}}, gp, src)) v[index.at(t.m)] = t.c;
    return v;
  };
  // nf_times[var][k] = NF(var * b_k)
  std::vector<Vec> nf_times[2];
  for (std::size_t k = 0; k < dim; ++k) {
    const Monomial2 b = st.standard[k];
    nf_times[0].push_back(normal_form({b.x + 1, b.z}));
    nf_times[1].push_back(normal_form({b.x, b.z + 1}));
  }

  struct Row {
    std::size_t pivot;
    Vec v;     // reduced normal-form vector, pivot entry 1
    Vec comb;  // coefficients over the new staircase producing v
  };
  std::vector<Row> rows;
  std::vector<Monomial2> new_stairs;
  std::map<Monomial2, Vec> stair_nf;
  std::vector<Monomial2> new_lms;
  std::vector<Poly> new_basis;

  auto target_less = [target](const Monomial2& a, const Monomial2& b) { return compare(target, a, b) < 0; };
  std::set<Monomial2, decltype(target_less)> candidates(target_less);
  candidates.insert({0, 0});

  while (!candidates.empty()) {
    const Monomial2 m = *candidates.begin();
    candidates.erase(candidates.begin());
    if (std::any_of(new_lms.begin(), new_lms.end(), [&](const Monomial2& l) { return l.divides(m); })) continue;
    if (stair_nf.count(m)) continue;

    Vec v(dim);
    if (m.x == 0 && m.z == 0) {
      v = normal_form(m);
    } else {
      // some predecessor m / var is on the new staircase
      const bool via_x = m.x > 0 && stair_nf.count({m.x - 1, m.z});
      const Monomial2 parent = via_x ? Monomial2{m.x - 1, m.z} : Monomial2{m.x, m.z - 1};
      const Vec& pv = stair_nf.at(parent);
      const auto& table = nf_times[via_x ? 0 : 1];
      for (std::size_t k = 0; k < dim; ++k) {
        if (pv[k].is_zero()) continue;
        for (std::size_t l = 0; l < dim; ++l)
          if (!table[k][l].is_zero()) v[l] = ctx.add(v[l], ctx.mul(pv[k], table[k][l]));
      }
    }
    const Vec nf = v;
    Vec comb(new_stairs.size() + 1);
    for (const Row& r : rows) {
      const Elt f = v[r.pivot];
      if (f.is_zero()) continue;
      for (std::size_t l = 0; l < dim; ++l)
        if (!r.v[l].is_zero()) v[l] = ctx.sub(v[l], ctx.mul(f, r.v[l]));
      for (std::size_t t = 0; t < r.comb.size(); ++t)
        if (!r.comb[t].is_zero()) comb[t] = ctx.sub(comb[t], ctx.mul(f, r.comb[t]));
    }
    auto pivot = std::find_if(v.begin(), v.end(), [](const Elt& e) { return !e.is_zero(); });
    if (pivot == v.end()) {
      // m + sum comb[t] * stair_t = 0 in the quotient
      Poly p{{m, ctx.one()}};
      for (std::size_t t = 0; t < new_stairs.size(); ++t)
        if (!comb[t].is_zero()) p.push_back({new_stairs[t], comb[t]});
      std::sort(p.begin(), p.end(), [target](const Term& a, const Term& b) { return compare(target, a.m, b.m) > 0; });
      new_basis.push_back(std::move(p));
      new_lms.push_back(m);
      continue;
    }
    comb[new_stairs.size()] = ctx.one();
    const Elt s = ctx.inv(*pivot);
    for (auto& e : v) e = ctx.mul(e, s);
    for (auto& e : comb) e = ctx.mul(e, s);
    rows.push_back({static_cast<std::size_t>(pivot - v.begin()), std::move(v), std::move(comb)});
    new_stairs.push_back(m);
    stair_nf.emplace(m, nf);
    candidates.insert({m.x + 1, m.z});
    candidates.insert({m.x, m.z + 1});
  }

  std::sort(new_basis.begin(), new_basis.end(),
            [target](const Poly& a, const Poly& b) { return compare(target, a.front().m, b.front().m) > 0; });
  for (const Poly& p : new_basis) out.polys.push_back(to_bipoly(ctx, p));
  return out;
}

std::optional<LexShape> lex_shape(const GroebnerBasis& basis) {
  if (basis.order != TermOrder::LEX || basis.polys.size() != 2) return std::nullopt;
  const FieldCtx& ctx = basis.polys.front().ctx();
  const BiPoly* linear = nullptr;
  const BiPoly* univariate = nullptr;
  for (const BiPoly& f : basis.polys) {
    const Monomial2 lm = leading_monomial(f, TermOrder::LEX);
    if (lm == Monomial2{0, 1})
      linear = &f;
    else if (lm.z == 0)
      univariate = &f;
  }
  if (!linear || !univariate) return std::nullopt;
  if (!(linear->coeff({0, 1}) == ctx.one())) return std::nullopt;
  BiPoly rest = *linear - BiPoly::variable(ctx, Var::Z);
  for (const auto& [m, c] : rest.terms())
    if (m.z != 0) return std::nullopt;
  return LexShape{-to_uni_in_x(rest), to_uni_in_x(*univariate)};
}

bool same_ideal(const GroebnerBasis& a, const GroebnerBasis& b) {
  for (const BiPoly& f : a.polys)
    if (!remainder(f, b.polys, b.order).is_zero()) return false;
  for (const BiPoly& f : b.polys)
    if (!remainder(f, a.polys, a.order).is_zero()) return false;
  return true;
}

}  // namespace cboom
