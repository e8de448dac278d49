#pragma once

// Text and JSON forms of field elements, polynomials and bases.
//
// Text syntax: integers, the variables x and z, the field generator (its
// configured name, "g" by default), + - * ^ and parentheses. Juxtaposition
// multiplies, so "3x^2z" is 3*x^2*z. Integers are reduced mod p.
//
// JSON: elements are integers over prime fields and little-endian coefficient
// arrays [c0, c1, ...] of length n over extensions; univariate polynomials are
// coefficient arrays [c0, ..., cd]; bivariate polynomials are term lists
// [[i, j, coeff], ...] for coeff * x^i * z^j in descending term order.

#include <string>
#include <string_view>

#include <json.hpp>

#include "cboom/groebner.hpp"

namespace cboom {

Elt parse_element(const FieldCtx& ctx, std::string_view text);
// `var` names the indeterminate; "x" also accepts "X".
UniPoly parse_unipoly(const FieldCtx& ctx, std::string_view text, std::string_view var = "x");
BiPoly parse_bipoly(const FieldCtx& ctx, std::string_view text);

// "P" or "P^N"; for N > 1 the modulus text (in Y) is used when given,
// otherwise the first irreducible of degree N.
FieldCtx parse_field(std::string_view spec, std::string_view modulus = {});

nlohmann::json to_json(const FieldCtx& ctx, const Elt& e);
nlohmann::json to_json(const UniPoly& f);
nlohmann::json to_json(const BiPoly& f, TermOrder order = TermOrder::DRL);
nlohmann::json to_json(const GroebnerBasis& basis);
nlohmann::json field_json(const FieldCtx& ctx);

Elt element_from_json(const FieldCtx& ctx, const nlohmann::json& j);
UniPoly unipoly_from_json(const FieldCtx& ctx, const nlohmann::json& j);
BiPoly bipoly_from_json(const FieldCtx& ctx, const nlohmann::json& j);
GroebnerBasis basis_from_json(const FieldCtx& ctx, const nlohmann::json& j);

}  // namespace cboom
