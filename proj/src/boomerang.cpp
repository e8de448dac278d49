#include "cboom/boomerang.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <thread>

namespace cboom {

namespace {

// Field addition on canonical indices, specialised by field shape.
struct PrimeIdx {
  std::uint32_t p;
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
    const std::uint32_t s = a + b;
    return s >= p ? s - p : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept { return a >= b ? a - b : a + p - b; }
};

struct BinaryIdx {
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept { return a ^ b; }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept { return a ^ b; }
};

// Odd characteristic extensions: digit-wise arithmetic in base p.
struct DigitIdx {
  std::uint32_t p;
  unsigned n;
  std::uint32_t combine(std::uint32_t a, std::uint32_t b, bool subtract) const noexcept {
    std::uint32_t out = 0, scale = 1;
    for (unsigned i = 0; i < n; ++i) {
      const std::uint32_t da = a % p, db = b % p;
      a /= p;
      b /= p;
      const std::uint32_t d = subtract ? (da >= db ? da - db : da + p - db) : (da + db >= p ? da + db - p : da + db);
      out += d * scale;
      scale *= p;
    }
    return out;
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept { return combine(a, b, false); }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept { return combine(a, b, true); }
};

struct Tables {
  std::uint32_t q = 0;
  std::vector<std::uint32_t> value;   // f(x)
  std::vector<std::uint32_t> cvalue;  // c f(x)
  std::vector<std::uint32_t> times_c;  // c * x
};

std::uint32_t field_size(const FieldCtx& ctx, std::uint64_t limit) {
  const auto q = ctx.order();
  if (!q || *q > limit)
    throw Error(ErrorKind::BudgetExceeded, "field " + ctx.describe() + " exceeds the scan budget of " +
                                               std::to_string(limit) + " elements");
  return static_cast<std::uint32_t>(*q);
}

Tables make_tables(const UniPoly& f, const Elt& c, std::uint64_t limit) {
  const FieldCtx& ctx = f.ctx();
  if (c.is_zero()) throw Error(ErrorKind::CZero, "c must be nonzero");
  if (!ctx.contains(c)) throw Error(ErrorKind::CtxMismatch, "c not in " + ctx.describe());
  Tables t;
  t.q = field_size(ctx, limit);
  t.value.resize(t.q);
  t.cvalue.resize(t.q);
  t.times_c.resize(t.q);
  for (std::uint32_t i = 0; i < t.q; ++i) {
    const Elt x = ctx.from_index(i);
    const Elt fx = f.eval(x);
    t.value[i] = static_cast<std::uint32_t>(ctx.index(fx));
    t.cvalue[i] = static_cast<std::uint32_t>(ctx.index(ctx.mul(c, fx)));
    t.times_c[i] = static_cast<std::uint32_t>(ctx.index(ctx.mul(c, x)));
  }
  return t;
}

// Per-entry queries usually repeat (f, c); keep the last tables per thread and
// per caller, so interleaved callers do not evict each other.
enum class CacheSlot { Entry, PermutationForm };

template <CacheSlot>
const Tables& cached_tables(const UniPoly& f, const Elt& c, std::uint64_t limit) {
  struct Slot {
    UniPoly f;
    Elt c;
    Tables t;
  };
  thread_local std::optional<Slot> slot;
  if (!slot || !(slot->f == f) || !(slot->c == c)) {
    Tables t = make_tables(f, c, limit);
    slot.emplace(Slot{f, c, std::move(t)});
  }
  return slot->t;
}

// Adds to hist[b] the number of (x, y) solving the system for this a, for
// every b at once: with s = x + y, b is forced to f(s) - c f(x).
template <class Idx>
void accumulate_row(const Idx& ar, const Tables& t, std::uint32_t a, std::uint64_t* hist) {
  std::vector<std::uint32_t> shifted(t.q);  // c f(s + a)
  for (std::uint32_t s = 0; s < t.q; ++s) shifted[s] = t.cvalue[ar.add(s, a)];
  for (std::uint32_t x = 0; x < t.q; ++x) {
    const std::uint32_t cfx = t.cvalue[x];
    const std::uint32_t fxa = t.value[ar.add(x, a)];
    for (std::uint32_t s = 0; s < t.q; ++s) {
      const std::uint32_t b = ar.sub(t.value[s], cfx);
      if (ar.sub(shifted[s], fxa) == t.times_c[b]) ++hist[b];
    }
  }
}

template <class Fn>
void with_index_arith(const FieldCtx& ctx, Fn&& fn) {
  const auto p = static_cast<std::uint32_t>(ctx.characteristic());
  if (ctx.is_prime_field())
    fn(PrimeIdx{p});
  else if (p == 2)
    fn(BinaryIdx{});
  else
    fn(DigitIdx{p, ctx.degree()});
}

unsigned worker_count(unsigned requested, std::size_t jobs) {
  unsigned n = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(jobs, 1)));
}

}  // namespace

std::string_view to_string(SystemMode mode) noexcept {
  switch (mode) {
    case SystemMode::COne: return "c=1";
    case SystemMode::CMinusOne: return "c=-1";
    default: return "c^2!=1";
  }
}

SystemMode system_mode(const FieldCtx& ctx, const Elt& c) {
  if (c == ctx.one()) return SystemMode::COne;
  if (c == ctx.neg(ctx.one())) return SystemMode::CMinusOne;
  return SystemMode::General;
}

BoomerangSystem build_system(const UniPoly& f, const Elt& c, const Elt& a, const Elt& b) {
  const FieldCtx& ctx = f.ctx();
  if (c.is_zero()) throw Error(ErrorKind::CZero, "c must be nonzero");
  if (a.is_zero()) throw Error(ErrorKind::AZero, "a must be nonzero");
  for (const Elt* e : {&c, &a, &b})
    if (!ctx.contains(*e)) throw Error(ErrorKind::CtxMismatch, "parameter not in " + ctx.describe());

  const BiPoly fz = from_uni_in(Var::Z, f);
  const BiPoly fx = from_uni_in(Var::X, f);
  BoomerangSystem s{f, c, a, b, BiPoly(ctx), BiPoly(ctx), BiPoly(ctx), system_mode(ctx, c)};
  s.F1 = fz - c * fx - BiPoly::constant(ctx, b);
  s.F2 = c * shift(fz, Var::Z, a) - shift(fx, Var::X, a) - BiPoly::constant(ctx, ctx.mul(c, b));
  s.G2 = ctx.inv(c) * s.F2 - s.F1;
  if (s.mode == SystemMode::COne) s.G2 = divide_exact_by_z_minus_x(s.G2);
  return s;
}

std::uint64_t bct_entry(const UniPoly& f, const Elt& c, const Elt& a, const Elt& b) {
  const FieldCtx& ctx = f.ctx();
  const Tables& t = cached_tables<CacheSlot::Entry>(f, c, std::uint64_t{1} << 26);
  const auto ai = static_cast<std::uint32_t>(ctx.index(a));
  const auto bi = static_cast<std::uint32_t>(ctx.index(b));
  std::uint64_t count = 0;
  with_index_arith(ctx, [&](const auto& ar) {
    const std::uint32_t cb = t.times_c[bi];
    for (std::uint32_t x = 0; x < t.q; ++x) {
      const std::uint32_t cfx = t.cvalue[x];
      const std::uint32_t fxa = t.value[ar.add(x, ai)];
      for (std::uint32_t s = 0; s < t.q; ++s)
        if (ar.sub(t.value[s], cfx) == bi && ar.sub(t.cvalue[ar.add(s, ai)], fxa) == cb) ++count;
    }
  });
  return count;
}

std::uint64_t bct_entry_permutation_form(const UniPoly& f, const Elt& c, const Elt& a, const Elt& b) {
  const FieldCtx& ctx = f.ctx();
  if (c.is_zero()) throw Error(ErrorKind::CZero, "c must be nonzero");
  // only the plain value table f(x) is used; c enters through field arithmetic below
  const Tables& t = cached_tables<CacheSlot::PermutationForm>(f, ctx.one(), std::uint64_t{1} << 26);
  std::vector<std::int64_t> inverse(t.q, -1);
  for (std::uint32_t i = 0; i < t.q; ++i) {
    auto& slot = inverse[t.value[i]];
    if (slot >= 0) throw Error(ErrorKind::NotAPermutation, f.to_string() + " is not a permutation of " + ctx.describe());
    slot = i;
  }
  const Elt c_inv = ctx.inv(c);
  auto fval = [&](const Elt& x) { return ctx.from_index(t.value[ctx.index(x)]); };
  auto finv = [&](const Elt& y) { return ctx.from_index(static_cast<std::uint64_t>(inverse[ctx.index(y)])); };
  std::uint64_t count = 0;
  for (std::uint32_t i = 0; i < t.q; ++i) {
    const Elt x = ctx.from_index(i);
    const Elt lhs = finv(ctx.add(ctx.mul(c_inv, fval(ctx.add(x, a))), b));
    const Elt rhs = finv(ctx.add(ctx.mul(c, fval(x)), b));
    if (ctx.sub(lhs, rhs) == a) ++count;
  }
  return count;
}

std::uint64_t ddt_entry(const UniPoly& f, const Elt& a, const Elt& b) {
  const FieldCtx& ctx = f.ctx();
  std::uint64_t count = 0;
  for (const Elt& x : ctx.elements())
    if (ctx.sub(f.eval(ctx.add(x, a)), f.eval(x)) == b) ++count;
  return count;
}

BctTable bct_table(const UniPoly& f, const Elt& c, const ScanOptions& opts) {
  const FieldCtx& ctx = f.ctx();
  const Tables t = make_tables(f, c, opts.max_field_size);
  BctTable table{ctx, f, c, {}, {}, {}};
  const std::uint32_t first_row = opts.full_grid ? 0 : 1;
  for (std::uint32_t i = first_row; i < t.q; ++i) table.rows.push_back(ctx.from_index(i));
  for (std::uint32_t i = 0; i < t.q; ++i) table.cols.push_back(ctx.from_index(i));
  table.counts.assign(table.rows.size() * t.q, 0);

  const std::size_t n_rows = table.rows.size();
  const unsigned workers = worker_count(opts.threads, n_rows);
  with_index_arith(ctx, [&](const auto& ar) {
    auto work = [&](unsigned w) {
      for (std::size_t r = w; r < n_rows; r += workers)
        accumulate_row(ar, t, static_cast<std::uint32_t>(r + first_row), table.counts.data() + r * t.q);
    };
    if (workers == 1) {
      work(0);
      return;
    }
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
  });
  return table;
}

Bound applicable_bound(int degree, const Elt& c, const FieldCtx& ctx) {
  const std::uint64_t p = ctx.characteristic();
  if (degree < 1 || static_cast<std::uint64_t>(degree) % p == 0)
    throw Error(ErrorKind::NoBound, "gcd(d, q) != 1 for d = " + std::to_string(degree));
  if (c.is_zero()) throw Error(ErrorKind::CZero, "c must be nonzero");
  const auto d = static_cast<std::int64_t>(degree);
  switch (system_mode(ctx, c)) {
    case SystemMode::General:
      return {static_cast<std::uint64_t>(d * d), "c^2 != 1: d^2"};
    case SystemMode::CMinusOne:
      return {static_cast<std::uint64_t>(d * (d - 1)), "c = -1: d(d-1)"};
    case SystemMode::COne:
      break;
  }
  const std::int64_t v = p == 2 ? d * (d - 2) - 1 : d * (d - 2);
  if (v < 0) throw Error(ErrorKind::NoBound, "c = 1 bound is negative for d = " + std::to_string(degree));
  return {static_cast<std::uint64_t>(v), p == 2 ? "c = 1, characteristic 2: d(d-2) - 1" : "c = 1: d(d-2)"};
}

UniformityReport summarize(const BctTable& table, bool full_grid) {
  UniformityReport rep;
  const FieldCtx& ctx = table.ctx;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    if (!full_grid && table.rows[r].is_zero()) continue;
    for (std::size_t col = 0; col < table.cols.size(); ++col) {
      if (!full_grid && table.cols[col].is_zero()) continue;
      const std::uint64_t v = table.at(r, col);
      if (v > rep.beta || rep.witnesses.empty()) {
        rep.beta = v;
        rep.witnesses.clear();
      }
      if (v == rep.beta) rep.witnesses.push_back({table.rows[r], table.cols[col], v});
    }
  }
  try {
    rep.bound = applicable_bound(table.f.degree(), table.c, ctx);
    rep.pass = rep.beta <= rep.bound->value;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NoBound) throw;
  }
  return rep;
}

UniformityReport uniformity(const UniPoly& f, const Elt& c, const ScanOptions& opts) {
  return summarize(bct_table(f, c, opts), opts.full_grid);
}

}  // namespace cboom
