#include "cboom/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace cboom {

namespace {

enum class Sym { X, Z, Gen };

class Parser {
 public:
  Parser(const FieldCtx& ctx, std::string_view text, std::vector<std::pair<std::string, Sym>> symbols)
      : ctx_(ctx), text_(text), symbols_(std::move(symbols)) {
    // longest names first so "gx" style juxtaposition cannot shadow a longer symbol
    std::sort(symbols_.begin(), symbols_.end(),
              [](const auto& a, const auto& b) { return a.first.size() > b.first.size(); });
  }

  BiPoly parse() {
    BiPoly v = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::Parse, msg + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  bool starts_factor() {
    skip_ws();
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return c == '(' || std::isalnum(static_cast<unsigned char>(c));
  }

  BiPoly expr() {
    BiPoly acc(ctx_);
    bool first = true;
    while (true) {
      bool negate = false;
      if (accept('-'))
        negate = true;
      else if (!accept('+') && !first)
        break;
      BiPoly t = term();
      acc = negate ? acc - t : acc + t;
      first = false;
      if (!peek('+') && !peek('-')) break;
    }
    return acc;
  }

  BiPoly term() {
    BiPoly acc = unary();
    while (true) {
      if (accept('*')) {
        acc = acc * unary();
      } else if (starts_factor()) {
        acc = acc * unary();
      } else {
        return acc;
      }
    }
  }

  BiPoly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  BiPoly power() {
    BiPoly base = atom();
    if (!accept('^')) return base;
    const bool braced = accept('{') || accept('(');
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a non-negative integer exponent");
    std::uint64_t e = 0;
    const auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, e);
    if (ec != std::errc{}) fail("exponent out of range");
    if (braced && !accept('}') && !accept(')')) fail("unclosed exponent");
    BiPoly result = BiPoly::constant(ctx_, ctx_.one());
    while (e) {
      if (e & 1) result = result * base;
      e >>= 1;
      if (e) base = base * base;
    }
    return result;
  }

  BiPoly atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      BiPoly v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      // reduce digit by digit so arbitrarily long integers are accepted
      const Elt ten = ctx_.from_int(10);
      Elt v;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        v = ctx_.add(ctx_.mul(v, ten), ctx_.from_int(text_[pos_++] - '0'));
      return BiPoly::constant(ctx_, v);
    }
    for (const auto& [name, sym] : symbols_) {
      if (text_.substr(pos_, name.size()) != name) continue;
      pos_ += name.size();
      switch (sym) {
        case Sym::X: return BiPoly::variable(ctx_, Var::X);
        case Sym::Z: return BiPoly::variable(ctx_, Var::Z);
        case Sym::Gen: return BiPoly::constant(ctx_, ctx_.generator());
      }
    }
    fail("unknown symbol");
  }

  const FieldCtx& ctx_;
  std::string_view text_;
  std::vector<std::pair<std::string, Sym>> symbols_;
  std::size_t pos_ = 0;
};

std::vector<std::pair<std::string, Sym>> base_symbols(const FieldCtx& ctx) {
  std::vector<std::pair<std::string, Sym>> s;
  if (!ctx.is_prime_field()) s.emplace_back(ctx.generator_name(), Sym::Gen);
  return s;
}

std::uint64_t coeff_from_json(const nlohmann::json& j, std::uint64_t p) {
  if (j.is_number_unsigned()) return j.get<std::uint64_t>() % p;
  if (j.is_number_integer()) {
    const auto v = j.get<std::int64_t>();
    const auto m = static_cast<std::uint64_t>(v < 0 ? -(v + 1) : v) % p;
    return v < 0 ? (p - 1 - m) % p : m;
  }
  throw Error(ErrorKind::Parse, "expected an integer, got " + j.dump());
}

}  // namespace

Elt parse_element(const FieldCtx& ctx, std::string_view text) {
  const BiPoly v = Parser(ctx, text, base_symbols(ctx)).parse();
  if (v.is_zero()) return Elt{};
  if (v.total_degree() != 0) throw Error(ErrorKind::Parse, "not a constant: " + std::string(text));
  return v.coeff({0, 0});
}

UniPoly parse_unipoly(const FieldCtx& ctx, std::string_view text, std::string_view var) {
  auto symbols = base_symbols(ctx);
  symbols.emplace_back(std::string(var), Sym::X);
  if (var == "x") symbols.emplace_back("X", Sym::X);
  return to_uni_in_x(Parser(ctx, text, std::move(symbols)).parse());
}

BiPoly parse_bipoly(const FieldCtx& ctx, std::string_view text) {
  auto symbols = base_symbols(ctx);
  symbols.emplace_back("x", Sym::X);
  symbols.emplace_back("z", Sym::Z);
  return Parser(ctx, text, std::move(symbols)).parse();
}

FieldCtx parse_field(std::string_view spec, std::string_view modulus) {
  auto parse_uint = [&](std::string_view s) {
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
      throw Error(ErrorKind::Parse, "bad field specification \"" + std::string(spec) + "\"");
    return v;
  };
  const auto caret = spec.find('^');
  const std::uint64_t p = parse_uint(spec.substr(0, caret));
  const std::uint64_t n = caret == std::string_view::npos ? 1 : parse_uint(spec.substr(caret + 1));
  const FieldCtx base = FieldCtx::prime(p);
  if (n == 1) {
    if (!modulus.empty()) throw Error(ErrorKind::InvalidArgument, "a modulus needs --field P^N with N > 1");
    return base;
  }
  if (n > 64) throw Error(ErrorKind::InvalidArgument, "extension degree above 64");
  if (modulus.empty()) return FieldCtx::extension_of_degree(p, static_cast<unsigned>(n));
  const UniPoly m = parse_unipoly(base, modulus, "Y");
  if (static_cast<std::uint64_t>(m.degree()) != n)
    throw Error(ErrorKind::InvalidArgument, "modulus degree " + std::to_string(m.degree()) + " != " + std::to_string(n));
  return FieldCtx::extension(base, m);
}

nlohmann::json to_json(const FieldCtx& ctx, const Elt& e) {
  if (ctx.is_prime_field()) return e.coeff(0);
  nlohmann::json arr = nlohmann::json::array();
  for (unsigned i = 0; i < ctx.degree(); ++i) arr.push_back(e.coeff(i));
  return arr;
}

nlohmann::json to_json(const UniPoly& f) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Elt& c : f.coeffs()) arr.push_back(to_json(f.ctx(), c));
  return arr;
}

nlohmann::json to_json(const BiPoly& f, TermOrder order) {
  std::vector<std::pair<Monomial2, Elt>> terms(f.terms().begin(), f.terms().end());
  std::sort(terms.begin(), terms.end(),
            [order](const auto& a, const auto& b) { return compare(order, a.first, b.first) > 0; });
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [m, c] : terms) arr.push_back({m.x, m.z, to_json(f.ctx(), c)});
  return arr;
}

nlohmann::json to_json(const GroebnerBasis& basis) {
  nlohmann::json polys = nlohmann::json::array();
  for (const BiPoly& f : basis.polys) polys.push_back(to_json(f, basis.order));
  return {{"order", std::string(to_string(basis.order))}, {"reduced", basis.reduced}, {"basis", polys}};
}

nlohmann::json field_json(const FieldCtx& ctx) {
  nlohmann::json j = {{"p", ctx.characteristic()}, {"n", ctx.degree()}, {"name", ctx.describe()}};
  if (!ctx.is_prime_field()) {
    j["modulus"] = std::vector<std::uint64_t>(ctx.modulus().begin(), ctx.modulus().end());
    j["generator"] = ctx.generator_name();
  }
  return j;
}

Elt element_from_json(const FieldCtx& ctx, const nlohmann::json& j) {
  const std::uint64_t p = ctx.characteristic();
  if (j.is_array()) {
    if (j.size() > ctx.degree()) throw Error(ErrorKind::Parse, "too many coefficients in " + j.dump());
    std::vector<std::uint64_t> c;
    for (const auto& v : j) c.push_back(coeff_from_json(v, p));
    return ctx.from_coeffs(c);
  }
  if (j.is_string()) return parse_element(ctx, j.get<std::string>());
  const std::uint64_t v = coeff_from_json(j, p);
  return ctx.from_coeffs(std::span<const std::uint64_t>(&v, 1));
}

UniPoly unipoly_from_json(const FieldCtx& ctx, const nlohmann::json& j) {
  if (j.is_string()) return parse_unipoly(ctx, j.get<std::string>());
  if (!j.is_array()) throw Error(ErrorKind::Parse, "expected a coefficient array, got " + j.dump());
  std::vector<Elt> c;
  for (const auto& v : j) c.push_back(element_from_json(ctx, v));
  return UniPoly(ctx, std::move(c));
}

BiPoly bipoly_from_json(const FieldCtx& ctx, const nlohmann::json& j) {
  if (j.is_string()) return parse_bipoly(ctx, j.get<std::string>());
  if (!j.is_array()) throw Error(ErrorKind::Parse, "expected a term list, got " + j.dump());
  BiPoly acc(ctx);
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 3) throw Error(ErrorKind::Parse, "bad term " + t.dump());
    const Monomial2 m{t[0].get<std::uint32_t>(), t[1].get<std::uint32_t>()};
    acc = acc + BiPoly::monomial(ctx, element_from_json(ctx, t[2]), m);
  }
  return acc;
}

GroebnerBasis basis_from_json(const FieldCtx& ctx, const nlohmann::json& j) {
  GroebnerBasis g;
  const std::string order = j.at("order").get<std::string>();
  if (order == "DRL")
    g.order = TermOrder::DRL;
  else if (order == "LEX")
    g.order = TermOrder::LEX;
  else
    throw Error(ErrorKind::Parse, "unknown term order " + order);
  g.reduced = j.value("reduced", false);
  for (const auto& p : j.at("basis")) g.polys.push_back(bipoly_from_json(ctx, p));
  return g;
}

}  // namespace cboom
