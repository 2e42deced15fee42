#pragma once

// Textual and JSON views of product forms.
//
// Text grammar (also accepted back by parse_form):
//   form    := group* ('/' '[' factor* ']')?
//   group   := '(' poly ')' | term            groups multiply into the numerator
//   poly    := term (('+'|'-') term)*
//   term    := <int> | <int>? monomial
//   monomial:= var ('^' <int>)? (var ('^' <int>)?)?   var: q | x | y
//   factor  := '(' '1' '-' monomial ')'
// Univariate forms render in q with explicit denominator exponents,
// e.g. "(1 + q^2) / [(1-q^1)(1-q^3)]"; bivariate ones use x and y.

#include <string>

#include "json.hpp"
#include "series.hpp"

namespace gfkit {

std::string render_polynomial(const Polynomial& p);
std::string render_form(const ProductForm& f);

// Inverse of render_form (modulo whitespace); throws errc::syntax_error with
// a column-annotated message.
ProductForm parse_form(const std::string& text);

// JSON pieces shared by every subcommand: all integers are decimal strings.
nlohmann::json numerator_json(const Polynomial& p);      // [[dx, dy, coeff]...]
nlohmann::json denominator_json(const ProductForm& f);   // [[o, e, multiplicity]...]
nlohmann::json int_list_json(const std::vector<Int>& v);

}  // namespace gfkit
