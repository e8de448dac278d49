#include "cboom/cli.hpp"

#include <functional>
#include <optional>
#include <sstream>
#include <thread>
#include <variant>

#include <CLI11.hpp>

#include "cboom/boomerang.hpp"
#include "cboom/dickson.hpp"
#include "cboom/io.hpp"
#include "cboom/polytope.hpp"
#include "cboom/tightness.hpp"

namespace cboom::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string field = "";
  std::string modulus;
  std::string f, c, a, b;
  std::vector<std::string> polys;
  std::string order = "DRL";
  std::string fixture;
  std::uint64_t seed = 0;
  std::uint64_t budget = 0;
  std::uint64_t n = 0;
  std::optional<std::uint64_t> target;
  unsigned threads = 0;
  bool json = false;
  bool full_grid = false;
  bool permutation_form = false;
};

// Evaluates one flag's value, attributing any failure to the flag.
template <class Fn>
auto flag(const char* name, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    throw UsageError(std::string(name) + ": " + e.what());
  }
}

struct Session {
  Options& o;
  std::ostream& out;

  FieldCtx field() const {
    if (o.field.empty()) throw UsageError("--field is required");
    return flag("--field", [&] { return parse_field(o.field, o.modulus); });
  }
  UniPoly poly(const FieldCtx& ctx) const {
    if (o.f.empty()) throw UsageError("--f is required");
    return flag("--f", [&] { return parse_unipoly(ctx, o.f); });
  }
  Elt elt(const FieldCtx& ctx, const std::string& text, const char* name) const {
    if (text.empty()) throw UsageError(std::string(name) + " is required");
    return flag(name, [&] { return parse_element(ctx, text); });
  }
  unsigned threads() const { return o.threads ? o.threads : std::max(1u, std::thread::hardware_concurrency()); }

  void emit(const json& j, const std::string& text) const {
    if (o.json)
      out << j.dump(2) << '\n';
    else
      out << text;
  }
};

std::string kv(const std::string& k, const std::string& v) { return k + " = " + v + "\n"; }

json system_json(const BoomerangSystem& s) {
  return {{"mode", std::string(to_string(s.mode))},
          {"F1", to_json(s.F1)},
          {"F2", to_json(s.F2)},
          {"G2", to_json(s.G2)}};
}

GroebnerBasis basis_for(const Session& s, const FieldCtx& ctx, TermOrder order, BuchbergerStats* stats) {
  std::vector<BiPoly> gens;
  if (!s.o.polys.empty()) {
    for (const std::string& p : s.o.polys) gens.push_back(flag("--poly", [&] { return parse_bipoly(ctx, p); }));
  } else {
    const UniPoly f = s.poly(ctx);
    gens = build_system(f, s.elt(ctx, s.o.c, "--c"), s.elt(ctx, s.o.a, "--a"), s.elt(ctx, s.o.b, "--b")).generators();
  }
  return buchberger(gens, order, stats);
}

std::string basis_text(const GroebnerBasis& g) {
  std::string t;
  for (std::size_t i = 0; i < g.polys.size(); ++i) t += kv("g" + std::to_string(i + 1), g.polys[i].to_string());
  return t;
}

std::string factors_text(const FactorList& fl) {
  std::string t;
  for (const Factor& fa : fl.factors) {
    if (!t.empty()) t += " * ";
    t += "(" + fa.poly.to_string() + ")";
    if (fa.multiplicity > 1) t += "^" + std::to_string(fa.multiplicity);
  }
  return t.empty() ? "1" : t;
}

json factors_json(const FactorList& fl, const FieldCtx& ctx) {
  json arr = json::array();
  for (const Factor& fa : fl.factors) arr.push_back({{"factor", to_json(fa.poly)}, {"multiplicity", fa.multiplicity}});
  return {{"unit", to_json(ctx, fl.unit)}, {"factors", arr}};
}

int cmd_bct(const Session& s) {
  const FieldCtx ctx = s.field();
  const UniPoly f = s.poly(ctx);
  const Elt c = s.elt(ctx, s.o.c, "--c");
  if (!s.o.a.empty() || !s.o.b.empty()) {
    const Elt a = s.elt(ctx, s.o.a, "--a"), b = s.elt(ctx, s.o.b, "--b");
    const std::uint64_t v = s.o.permutation_form ? bct_entry_permutation_form(f, c, a, b) : bct_entry(f, c, a, b);
    s.emit({{"field", field_json(ctx)}, {"f", to_json(f)}, {"c", to_json(ctx, c)}, {"a", to_json(ctx, a)},
            {"b", to_json(ctx, b)}, {"count", v}},
           std::to_string(v) + "\n");
    return kOk;
  }
  ScanOptions opts{s.o.budget ? s.o.budget : 512, s.threads(), s.o.full_grid};
  const BctTable t = bct_table(f, c, opts);
  json rows = json::array();
  std::ostringstream text;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    json row = json::array();
    text << "a=" << ctx.to_string(t.rows[r]) << ":";
    for (std::size_t k = 0; k < t.cols.size(); ++k) {
      row.push_back(t.at(r, k));
      text << ' ' << t.at(r, k);
    }
    text << '\n';
    rows.push_back({{"a", to_json(ctx, t.rows[r])}, {"counts", row}});
  }
  s.emit({{"field", field_json(ctx)}, {"f", to_json(f)}, {"c", to_json(ctx, c)}, {"rows", rows}}, text.str());
  return kOk;
}

int cmd_ddt(const Session& s) {
  const FieldCtx ctx = s.field();
  const UniPoly f = s.poly(ctx);
  const Elt a = s.elt(ctx, s.o.a, "--a"), b = s.elt(ctx, s.o.b, "--b");
  const std::uint64_t v = ddt_entry(f, a, b);
  s.emit({{"field", field_json(ctx)}, {"f", to_json(f)}, {"a", to_json(ctx, a)}, {"b", to_json(ctx, b)}, {"count", v}},
         std::to_string(v) + "\n");
  return kOk;
}

int cmd_uniformity(const Session& s) {
  const FieldCtx ctx = s.field();
  const UniPoly f = s.poly(ctx);
  const Elt c = s.elt(ctx, s.o.c, "--c");
  const ScanOptions opts{s.o.budget ? s.o.budget : 512, s.threads(), s.o.full_grid};
  const UniformityReport rep = uniformity(f, c, opts);
  json wit = json::array();
  std::string wtext;
  for (const Witness& w : rep.witnesses) {
    wit.push_back({{"a", to_json(ctx, w.a)}, {"b", to_json(ctx, w.b)}, {"count", w.count}});
    wtext += (wtext.empty() ? "" : ", ") + std::string("(") + ctx.to_string(w.a) + ", " + ctx.to_string(w.b) + ")";
  }
  json j = {{"field", field_json(ctx)}, {"f", to_json(f)},        {"c", to_json(ctx, c)},
            {"beta", rep.beta},        {"bound", nullptr},        {"bound_source", nullptr},
            {"pass", rep.pass},        {"witnesses", wit}};
  std::string text = kv("beta", std::to_string(rep.beta));
  if (rep.bound) {
    j["bound"] = rep.bound->value;
    j["bound_source"] = rep.bound->source;
    text += kv("bound", std::to_string(rep.bound->value) + " (" + rep.bound->source + ")");
  } else {
    text += kv("bound", "none");
  }
  text += kv("pass", rep.pass ? "true" : "false") + kv("witnesses", wtext);
  s.emit(j, text);
  return rep.pass ? kOk : kVerificationFailed;
}

int cmd_system(const Session& s) {
  const FieldCtx ctx = s.field();
  const BoomerangSystem sys = build_system(s.poly(ctx), s.elt(ctx, s.o.c, "--c"), s.elt(ctx, s.o.a, "--a"),
                                           s.elt(ctx, s.o.b, "--b"));
  json j = system_json(sys);
  j["field"] = field_json(ctx);
  s.emit(j, kv("mode", std::string(to_string(sys.mode))) + kv("F1", sys.F1.to_string()) +
                kv("F2", sys.F2.to_string()) + kv("G2", sys.G2.to_string()));
  return kOk;
}

TermOrder parse_order(const std::string& o) {
  if (o == "DRL" || o == "drl") return TermOrder::DRL;
  if (o == "LEX" || o == "lex") return TermOrder::LEX;
  throw UsageError("--order: expected DRL or LEX, got " + o);
}

int cmd_groebner(const Session& s) {
  const FieldCtx ctx = s.field();
  BuchbergerStats stats;
  const GroebnerBasis g = basis_for(s, ctx, parse_order(s.o.order), &stats);
  const Staircase st = staircase(g);
  json j = to_json(g);
  j["field"] = field_json(ctx);
  j["dimension"] = st.finite ? json(st.count) : json("infinite");
  j["stats"] = {{"pairs_considered", stats.pairs_considered},
                {"pairs_skipped_coprime", stats.pairs_skipped_coprime},
                {"pairs_skipped_chain", stats.pairs_skipped_chain},
                {"reductions_to_zero", stats.reductions_to_zero}};
  s.emit(j, basis_text(g) + kv("dimension", st.finite ? std::to_string(st.count) : "infinite"));
  return kOk;
}

int cmd_fglm(const Session& s) {
  const FieldCtx ctx = s.field();
  const GroebnerBasis drl = basis_for(s, ctx, TermOrder::DRL, nullptr);
  const GroebnerBasis lex = fglm(drl);
  const auto shape = lex_shape(lex);
  json j = to_json(lex);
  j["field"] = field_json(ctx);
  std::string text = basis_text(lex);
  if (shape) {
    j["shape"] = {{"g1", to_json(shape->g1)}, {"g2", to_json(shape->g2)}};
    text += kv("shape", "deg g1 = " + std::to_string(shape->g1.degree()) + ", deg g2 = " +
                            std::to_string(shape->g2.degree()));
  } else {
    j["shape"] = nullptr;
    text += kv("shape", "none");
  }
  s.emit(j, text);
  return kOk;
}

int cmd_factor(const Session& s) {
  const FieldCtx ctx = s.field();
  const UniPoly f = s.poly(ctx);
  const FactorList fl = factor(f, s.o.seed);
  json j = factors_json(fl, ctx);
  j["field"] = field_json(ctx);
  j["f"] = to_json(f);
  j["degrees"] = fl.degree_multiset();
  std::string text = kv("unit", ctx.to_string(fl.unit)) + kv("factors", factors_text(fl));
  try {
    const auto n = splitting_degree(fl);
    j["splitting_degree"] = n;
    text += kv("splitting_degree", std::to_string(n));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotSquarefree) throw;
    j["splitting_degree"] = nullptr;
  }
  s.emit(j, text);
  return kOk;
}

int cmd_roots_ext(const Session& s) {
  const FieldCtx ctx = s.field();
  const UniPoly f = s.poly(ctx);
  if (s.o.n == 0) throw UsageError("--n must be at least 1");
  const std::uint64_t r = count_roots_in_extension(f, s.o.n);
  s.emit({{"field", field_json(ctx)}, {"f", to_json(f)}, {"n", s.o.n}, {"roots", r}, {"squarefree", is_squarefree(f)}},
         std::to_string(r) + "\n");
  return kOk;
}

int cmd_dickson(const Session& s) {
  const FieldCtx ctx = s.field();
  const Elt a = s.o.a.empty() ? ctx.zero() : s.elt(ctx, s.o.a, "--a");
  const auto n = static_cast<unsigned>(s.o.n);
  const UniPoly d = dickson(n, a, ctx);
  json j = {{"field", field_json(ctx)}, {"n", n}, {"a", to_json(ctx, a)}, {"polynomial", to_json(d)}};
  if (n > 0) {
    j["parity"] = std::string(to_string(parity_of_terms(n, a, ctx)));
    if (ctx.order()) j["permutation"] = is_permutation_dickson(n, ctx);
  }
  s.emit(j, d.to_string() + "\n");
  return kOk;
}

int cmd_polytope_cert(const Session& s) {
  const FieldCtx ctx = s.field();
  const UniPoly f = s.poly(ctx);
  const Elt a = s.elt(ctx, s.o.a, "--a");
  const IrreducibilityResult r = certify_absolutely_irreducible_difference(f, a);
  if (const auto* in = std::get_if<Inapplicable>(&r)) {
    s.emit({{"inapplicable", in->reason}}, kv("inapplicable", in->reason));
    return kOk;
  }
  const auto& cert = std::get<IrreducibilityCertificate>(r);
  json verts = json::array();
  std::string vtext;
  for (const LatticePoint& p : cert.triangle.vertices()) {
    verts.push_back({p.u, p.v});
    vtext += "(" + std::to_string(p.u) + "," + std::to_string(p.v) + ") ";
  }
  const json j = {{"vertices", verts},
                  {"gcd_witness", cert.gcd_witness},
                  {"anchors",
                   {{"const", to_json(ctx, cert.anchor_const)},
                    {"xd", to_json(ctx, cert.anchor_xd)},
                    {"xyd1", to_json(ctx, cert.anchor_xyd1)}}}};
  s.emit(j, kv("vertices", vtext) + kv("gcd", std::to_string(cert.gcd)));
  return kOk;
}

int cmd_tight_search(const Session& s) {
  const FieldCtx ctx = s.field();
  SearchConfig cfg{s.poly(ctx), s.elt(ctx, s.o.c, "--c"), {}, s.o.target, s.o.budget, s.threads(), s.o.seed};
  if (!s.o.a.empty() || !s.o.b.empty()) cfg.candidates.emplace_back(s.elt(ctx, s.o.a, "--a"), s.elt(ctx, s.o.b, "--b"));
  const SearchOutcome res = search(cfg);
  json j = {{"field", field_json(ctx)}, {"f", to_json(cfg.f)}, {"c", to_json(ctx, cfg.c)}, {"tried", res.tried},
            {"anomalies", res.anomalies}};
  std::string text = kv("tried", std::to_string(res.tried));
  for (const std::string& a : res.anomalies) text += kv("anomaly", a);
  if (!res.witness) {
    j["witness"] = nullptr;
    s.emit(j, text + kv("witness", "exhausted"));
    return kVerificationFailed;
  }
  const TightnessWitness& w = *res.witness;
  j["witness"] = {{"a", to_json(ctx, w.a)},
                  {"b", to_json(ctx, w.b)},
                  {"dimension", w.dimension},
                  {"drl", to_json(w.drl)},
                  {"g1", to_json(w.shape.g1)},
                  {"g2", to_json(w.shape.g2)},
                  {"factor_degrees", w.factors.degree_multiset()},
                  {"splitting_degree", w.splitting_degree},
                  {"roots", w.roots},
                  {"certified", w.certified}};
  text += kv("a", ctx.to_string(w.a)) + kv("b", ctx.to_string(w.b)) + kv("dimension", std::to_string(w.dimension)) +
          kv("factors", factors_text(w.factors)) + kv("splitting_degree", std::to_string(w.splitting_degree)) +
          kv("roots", std::to_string(w.roots));
  s.emit(j, text);
  return kOk;
}

int cmd_verify(const Session& s) {
  std::vector<std::string> names;
  if (s.o.fixture == "all")
    names = fixture_names();
  else
    names.push_back(s.o.fixture);
  json arr = json::array();
  std::string text;
  bool ok = true;
  for (const std::string& n : names) {
    const FixtureReport rep = flag("--fixture", [&] { return run_fixture(n, s.o.seed); });
    ok = ok && rep.ok();
    arr.push_back(rep.to_json());
    std::ostringstream line;
    line << n << ": " << (rep.ok() ? "ok" : "MISMATCH") << " (" << rep.checks.size() << " checks, " << rep.seconds
         << " s)\n";
    text += line.str() + rep.diff();
  }
  s.emit(names.size() == 1 ? arr[0] : json(arr), text);
  return ok ? kOk : kVerificationFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"c-boomerang uniformity toolkit"};
  app.require_subcommand(1);
  Options o;
  std::function<int(const Session&)> action;

  auto common = [&](CLI::App* sub, bool needs_field = true) {
    auto* fo = sub->add_option("--field", o.field, "P or P^N");
    if (needs_field) fo->required();
    sub->add_option("--modulus", o.modulus, "defining polynomial in Y for P^N");
    sub->add_flag("--json", o.json, "machine-readable output");
    sub->add_option("--seed", o.seed, "seed for factorisation randomness");
    sub->add_option("--threads", o.threads, "worker threads (default: hardware concurrency)");
  };
  auto add = [&](const char* name, const char* help, int (*fn)(const Session&)) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->callback([&action, fn] { action = fn; });
    return sub;
  };

  auto* bct = add("bct", "c-BCT entry, or the whole table without --a/--b", cmd_bct);
  common(bct);
  bct->add_option("--f", o.f)->required();
  bct->add_option("--c", o.c)->required();
  bct->add_option("--a", o.a);
  bct->add_option("--b", o.b);
  bct->add_option("--budget", o.budget, "largest field size scanned");
  bct->add_flag("--full-grid", o.full_grid, "include the a = 0 row");
  bct->add_flag("--permutation-form", o.permutation_form, "count through the inverse permutation");

  auto* ddt = add("ddt", "DDT entry", cmd_ddt);
  common(ddt);
  ddt->add_option("--f", o.f)->required();
  ddt->add_option("--a", o.a)->required();
  ddt->add_option("--b", o.b)->required();

  auto* uni = add("uniformity", "c-boomerang uniformity and the applicable bound", cmd_uniformity);
  common(uni);
  uni->add_option("--f", o.f)->required();
  uni->add_option("--c", o.c)->required();
  uni->add_option("--budget", o.budget, "largest field size scanned (default 512)");
  uni->add_flag("--full-grid", o.full_grid, "include a = 0 and b = 0 in the maximum");

  auto* sys = add("system", "boomerang polynomial system", cmd_system);
  common(sys);
  sys->add_option("--f", o.f)->required();
  sys->add_option("--c", o.c)->required();
  sys->add_option("--a", o.a)->required();
  sys->add_option("--b", o.b)->required();

  for (auto [name, help, fn] : {std::tuple{"groebner", "reduced Groebner basis", &cmd_groebner},
                                std::tuple{"fglm", "DRL to LEX conversion", &cmd_fglm}}) {
    auto* g = add(name, help, fn);
    common(g);
    g->add_option("--f", o.f);
    g->add_option("--c", o.c);
    g->add_option("--a", o.a);
    g->add_option("--b", o.b);
    g->add_option("--poly", o.polys, "explicit generator in x, z (repeatable)");
    if (std::string(name) == "groebner") g->add_option("--order", o.order, "DRL or LEX");
  }

  auto* fac = add("factor", "factor a univariate polynomial", cmd_factor);
  common(fac);
  fac->add_option("--f", o.f)->required();

  auto* roots = add("roots-ext", "distinct roots in F_{q^n}", cmd_roots_ext);
  common(roots);
  roots->add_option("--f", o.f)->required();
  roots->add_option("--n", o.n)->required();

  auto* dk = add("dickson", "Dickson polynomial D_n(X, a)", cmd_dickson);
  common(dk);
  dk->add_option("--n", o.n)->required();
  dk->add_option("--a", o.a, "parameter (default 0)");

  auto* pc = add("polytope-cert", "absolute irreducibility certificate for f(x) - f(y) + a", cmd_polytope_cert);
  common(pc);
  pc->add_option("--f", o.f)->required();
  pc->add_option("--a", o.a)->required();

  auto* ts = add("tight-search", "search for (a, b) attaining the bound", cmd_tight_search);
  common(ts);
  ts->add_option("--f", o.f)->required();
  ts->add_option("--c", o.c)->required();
  ts->add_option("--a", o.a, "check a single pair");
  ts->add_option("--b", o.b);
  ts->add_option("--budget", o.budget, "maximum number of pairs tried");
  ts->add_option("--target", o.target, "override the expected dimension");

  auto* vf = add("verify", "recompute an embedded reference fixture", cmd_verify);
  common(vf, false);
  vf->add_option("--fixture", o.fixture, "fixture name or 'all'")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    return action(Session{o, out});
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::FixtureMismatch ? kVerificationFailed : kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const std::string& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace cboom::cli
