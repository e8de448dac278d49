#include "cboom/tightness.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "cboom/dickson.hpp"
#include "cboom/io.hpp"

namespace cboom {

namespace detail {
const std::map<std::string, std::string>& embedded_fixtures();
}

namespace {

template <class T>
std::string join(const std::vector<T>& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ']';
  return os.str();
}

BiPoly monic_in(const BiPoly& f, TermOrder order) {
  if (f.is_zero()) return f;
  return f.ctx().inv(leading_coeff(f, order)) * f;
}

std::vector<std::string> normalized(const std::vector<BiPoly>& polys, TermOrder order) {
  std::vector<BiPoly> ps;
  for (const BiPoly& f : polys) ps.push_back(monic_in(f, order));
  std::sort(ps.begin(), ps.end(), [order](const BiPoly& a, const BiPoly& b) {
    return compare(order, leading_monomial(a, order), leading_monomial(b, order)) > 0;
  });
  std::vector<std::string> out;
  for (const BiPoly& f : ps) out.push_back(to_json(f, order).dump());
  return out;
}

UniPoly fixture_polynomial(const FieldCtx& ctx, const nlohmann::json& f) {
  if (f.is_object())
    return dickson(f.at("dickson").get<unsigned>(), parse_element(ctx, f.at("a").get<std::string>()), ctx);
  return parse_unipoly(ctx, f.get<std::string>());
}

FieldCtx fixture_field(const nlohmann::json& j) {
  return parse_field(j.at("field").get<std::string>(), j.value("modulus", std::string{}));
}

void check(FixtureReport& rep, std::string field, const std::string& expected, const std::string& actual) {
  const bool ok = expected == actual;
  rep.checks.push_back({std::move(field), expected, actual, ok});
}

void run_tight_fixture(const nlohmann::json& j, FixtureReport& rep, std::uint64_t seed) {
  const FieldCtx ctx = fixture_field(j);
  const UniPoly f = fixture_polynomial(ctx, j.at("f"));
  auto elt = [&](const char* key) { return parse_element(ctx, j.at(key).get<std::string>()); };
  const Elt c = elt("c"), a = elt("a"), b = elt("b");
  const std::uint64_t expected_dim = j.at("dimension").get<std::uint64_t>();

  const BoomerangSystem sys = build_system(f, c, a, b);
  const GroebnerBasis drl = buchberger(sys.generators(), TermOrder::DRL);
  const Staircase st = staircase(drl);
  check(rep, "dimension", std::to_string(expected_dim), st.finite ? std::to_string(st.count) : "infinite");
  check(rep, "bound", std::to_string(expected_dim), std::to_string(applicable_bound(f.degree(), c, ctx).value));

  if (j.contains("drl_basis")) {
    std::vector<BiPoly> expected;
    for (const auto& s : j.at("drl_basis")) expected.push_back(parse_bipoly(ctx, s.get<std::string>()));
    const auto e = normalized(expected, TermOrder::DRL);
    const auto got = normalized(drl.polys, TermOrder::DRL);
    check(rep, "drl_basis.size", std::to_string(e.size()), std::to_string(got.size()));
    for (std::size_t i = 0; i < std::min(e.size(), got.size()); ++i)
      check(rep, "drl_basis[" + std::to_string(i) + "]", e[i], got[i]);
  }

  const GroebnerBasis lex = fglm(drl);
  const auto shape = lex_shape(lex);
  if (!shape) {
    check(rep, "lex_shape", "{z - g1(x), g2(x)}", "not in shape position");
    return;
  }
  const auto degs = j.at("lex_shape_degrees").get<std::vector<int>>();
  check(rep, "lex_shape_degrees", join(degs), join(std::vector<int>{shape->g1.degree(), shape->g2.degree()}));

  const FactorList fl = factor(shape->g2, seed);
  if (j.contains("lex_basis")) {
    const auto& lb = j.at("lex_basis");
    const BiPoly linear = parse_bipoly(ctx, lb.at("linear").get<std::string>());
    const BiPoly got_linear = BiPoly::variable(ctx, Var::Z) - from_uni_in(Var::X, shape->g1);
    check(rep, "lex_basis.linear", normalized({linear}, TermOrder::LEX)[0],
          normalized({got_linear}, TermOrder::LEX)[0]);
    std::set<std::string> e, got;
    for (const auto& s : lb.at("eliminant_factors")) e.insert(parse_unipoly(ctx, s.get<std::string>()).monic().to_string());
    for (const Factor& fa : fl.factors)
      got.insert(fa.poly.to_string() + (fa.multiplicity > 1 ? "^" + std::to_string(fa.multiplicity) : ""));
    check(rep, "lex_basis.eliminant_factors", join(std::vector<std::string>(e.begin(), e.end())),
          join(std::vector<std::string>(got.begin(), got.end())));
  }

  auto expected_degs = j.at("factor_degrees").get<std::vector<int>>();
  std::sort(expected_degs.begin(), expected_degs.end());
  check(rep, "factor_degrees", join(expected_degs), join(fl.degree_multiset()));
  check(rep, "squarefree", "true", is_squarefree(shape->g2) ? "true" : "false");

  const auto n = j.at("splitting_degree").get<std::uint64_t>();
  std::string split = "not squarefree";
  try {
    split = std::to_string(splitting_degree(fl));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotSquarefree) throw;
  }
  check(rep, "splitting_degree", std::to_string(n), split);
  check(rep, "roots_over_splitting_field", std::to_string(expected_dim),
        std::to_string(count_roots_in_extension(shape->g2, n)));

  if (j.contains("bct_entry"))
    check(rep, "bct_entry", std::to_string(j.at("bct_entry").get<std::uint64_t>()),
          std::to_string(bct_entry(f, c, a, b)));
}

void run_table_fixture(const nlohmann::json& j, FixtureReport& rep) {
  const FieldCtx ctx = fixture_field(j);
  const auto n = j.at("dickson").get<unsigned>();
  const auto cs = j.at("c").get<std::vector<std::int64_t>>();
  for (const auto& row : j.at("rows")) {
    const std::string cls = row.at("alpha_class").get<std::string>();
    std::vector<Elt> alphas;
    for (const Elt& e : ctx.elements()) {
      const bool zero = e.is_zero();
      const bool sq = !zero && ctx.is_square(e);
      if ((cls == "zero" && zero) || (cls == "square" && sq) || (cls == "non-square" && !zero && !sq))
        alphas.push_back(e);
    }
    if (alphas.empty()) throw Error(ErrorKind::InvalidArgument, "unknown or empty class " + cls);
    const auto expected = row.at("uniformity").get<std::vector<std::uint64_t>>();
    for (std::size_t k = 0; k < cs.size(); ++k) {
      const Elt c = ctx.from_int(cs[k]);
      std::set<std::uint64_t> seen;
      for (const Elt& alpha : alphas) seen.insert(uniformity(dickson(n, alpha, ctx), c).beta);
      const std::string actual =
          seen.size() == 1 ? std::to_string(*seen.begin()) : join(std::vector<std::uint64_t>(seen.begin(), seen.end()));
      check(rep, cls + "[c=" + std::to_string(cs[k]) + "]", std::to_string(expected[k]), actual);
    }
  }
}

}  // namespace

std::optional<TightnessWitness> evaluate_candidate(const UniPoly& f, const Elt& c, const Elt& a, const Elt& b,
                                                   std::uint64_t target, std::uint64_t seed, std::string* reason) {
  auto reject = [&](std::string why) -> std::optional<TightnessWitness> {
    if (reason) *reason = std::move(why);
    return std::nullopt;
  };
  if (a.is_zero()) return reject("a = 0");
  GroebnerBasis drl = buchberger(build_system(f, c, a, b).generators(), TermOrder::DRL);
  const Staircase st = staircase(drl);
  if (!st.finite) return reject("not zero-dimensional");
  const std::uint64_t dim = st.count;
  if (dim < target) return reject("dimension " + std::to_string(dim) + " below target");
  if (dim > target) return reject("anomaly: dimension " + std::to_string(dim) + " exceeds target");
  auto shape = lex_shape(fglm(drl));
  if (!shape) return reject("LEX basis not in shape position");
  FactorList factors = factor(shape->g2, seed);
  for (const Factor& fa : factors.factors)
    if (fa.multiplicity > 1) return reject("eliminant not squarefree");
  const std::uint64_t n = splitting_degree(factors);
  const std::uint64_t roots = count_roots_in_extension(shape->g2, n);
  const bool certified = roots == dim && static_cast<std::uint64_t>(shape->g2.degree()) == dim;
  if (!certified) return reject("root count " + std::to_string(roots) + " differs from dimension");
  return TightnessWitness{a, b, std::move(drl), dim, std::move(*shape), std::move(factors), n, roots, certified};
}

SearchOutcome search(const SearchConfig& config) {
  const FieldCtx& ctx = config.f.ctx();
  SearchOutcome out;
  const std::uint64_t target =
      config.target ? *config.target : applicable_bound(config.f.degree(), config.c, ctx).value;

  std::uint64_t q = 0;
  if (config.candidates.empty()) {
    q = ctx.order().value_or(0);
    if (q == 0 || q > (std::uint64_t{1} << 26))
      throw Error(ErrorKind::BudgetExceeded, "exhaustive scan over " + ctx.describe() + " is not supported");
  }
  const std::uint64_t total = config.candidates.empty() ? (q - 1) * (q - 1) : config.candidates.size();
  const std::uint64_t limit = config.max_candidates ? std::min(total, config.max_candidates) : total;
  auto candidate = [&](std::uint64_t k) -> std::pair<Elt, Elt> {
    if (!config.candidates.empty()) return config.candidates[k];
    return {ctx.from_index(1 + k / (q - 1)), ctx.from_index(1 + k % (q - 1))};
  };

  const unsigned block = std::max(1u, config.threads);
  for (std::uint64_t start = 0; start < limit; start += block) {
    const std::uint64_t n = std::min<std::uint64_t>(block, limit - start);
    std::vector<std::optional<TightnessWitness>> results(n);
    std::vector<std::string> reasons(n);
    auto work = [&](std::uint64_t i) {
      const auto [a, b] = candidate(start + i);
      results[i] = evaluate_candidate(config.f, config.c, a, b, target, config.seed, &reasons[i]);
    };
    if (n == 1) {
      work(0);
    } else {
      std::vector<std::jthread> pool;
      for (std::uint64_t i = 0; i < n; ++i) pool.emplace_back(work, i);
    }
    for (std::uint64_t i = 0; i < n; ++i) {
      ++out.tried;
      if (results[i]) {
        out.witness = std::move(results[i]);
        return out;
      }
      if (reasons[i].starts_with("anomaly")) {
        const auto [a, b] = candidate(start + i);
        out.anomalies.push_back("(a, b) = (" + ctx.to_string(a) + ", " + ctx.to_string(b) + "): " + reasons[i]);
      }
    }
  }
  return out;
}

bool FixtureReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const FixtureCheck& c) { return c.ok; });
}

std::string FixtureReport::diff() const {
  std::string out;
  for (const FixtureCheck& c : checks)
    if (!c.ok) out += name + "." + c.field + ": expected " + c.expected + ", got " + c.actual + "\n";
  return out;
}

nlohmann::json FixtureReport::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const FixtureCheck& c : checks)
    arr.push_back({{"field", c.field}, {"expected", c.expected}, {"actual", c.actual}, {"ok", c.ok}});
  return {{"name", name}, {"ok", ok()}, {"seconds", seconds}, {"checks", arr}};
}

std::vector<std::string> fixture_names() {
  std::vector<std::string> names;
  for (const auto& [name, body] : detail::embedded_fixtures()) names.push_back(name);
  return names;
}

nlohmann::json fixture_data(const std::string& name) {
  const auto& all = detail::embedded_fixtures();
  const auto it = all.find(name);
  if (it == all.end()) throw Error(ErrorKind::InvalidArgument, "unknown fixture " + name);
  return nlohmann::json::parse(it->second);
}

FixtureReport run_fixture(const std::string& name, std::uint64_t seed) {
  const nlohmann::json j = fixture_data(name);
  FixtureReport rep;
  rep.name = name;
  const auto t0 = std::chrono::steady_clock::now();
  if (j.contains("rows"))
    run_table_fixture(j, rep);
  else
    run_tight_fixture(j, rep, seed);
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

FixtureReport verify_fixture(const std::string& name, std::uint64_t seed) {
  FixtureReport rep = run_fixture(name, seed);
  if (!rep.ok()) throw Error(ErrorKind::FixtureMismatch, rep.diff());
  return rep;
}

}  // namespace cboom
