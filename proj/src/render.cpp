#include "render.hpp"

#include <cctype>
#include <sstream>

#include "errors.hpp"

namespace gfkit {

namespace {

void append_monomial(std::ostringstream& out, const Int& dx, const Int& dy, bool univariate,
                     bool explicit_one) {
  bool wrote = false;
  auto piece = [&](const char* var, const Int& e) {
    if (e == 0) return;
    if (wrote) out << " ";
    out << var;
    if (e != 1 || explicit_one) out << "^" << e.get_str();
    wrote = true;
  };
  piece(univariate ? "q" : "x", dx);
  piece("y", dy);
}

void append_term(std::ostringstream& out, const ExpPair& e, const Int& coeff, bool univariate) {
  Int m = abs(coeff);
  if (e.x == 0 && e.y == 0) {
    out << m.get_str();
    return;
  }
  if (m != 1) out << m.get_str() << " ";
  append_monomial(out, e.x, e.y, univariate, false);
}

}  // namespace

std::string render_polynomial(const Polynomial& p) {
  if (p.is_zero()) return "0";
  const bool univariate = p.is_univariate();
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    append_term(out, e, c, univariate);
    first = false;
  }
  return out.str();
}

std::string render_form(const ProductForm& f) {
  const bool univariate = f.is_univariate();
  std::ostringstream out;
  std::string numer = render_polynomial(f.numerator());
  if (f.numerator().terms().size() > 1)
    out << "(" << numer << ")";
  else
    out << numer;
  if (!f.factors().empty()) {
    out << " / [";
    for (const Factor& fac : f.factors()) {
      out << "(1-";
      append_monomial(out, fac.o, fac.e, univariate, true);
      out << ")";
    }
    out << "]";
  }
  return out.str();
}

namespace {

// Cursor over the one-line form grammar.
struct FormCursor {
  const std::string& s;
  std::size_t pos = 0;

  [[noreturn]] void fail_here(const std::string& msg) {
    fail(errc::syntax_error, "product form, col " + std::to_string(pos + 1) + ": " + msg);
  }

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool done() {
    skip_ws();
    return pos >= s.size();
  }

  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c, const std::string& what) {
    if (!eat(c)) fail_here("expected '" + std::string(1, c) + "' " + what);
  }

  Int integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail_here("expected an integer");
    return Int(s.substr(start, pos - start));
  }

  // var ('^' int)? (var ('^' int)?)?; q counts as x but cannot mix with x/y.
  // Returns (dx, dy); at least one variable must be present.
  ExpPair monomial() {
    Int dx = 0, dy = 0;
    bool saw_q = false, saw_xy = false, any = false;
    while (true) {
      char c = peek();
      if (c != 'q' && c != 'x' && c != 'y') break;
      ++pos;
      (c == 'q' ? saw_q : saw_xy) = true;
      if (saw_q && saw_xy) fail_here("cannot mix q with x/y");
      Int e = 1;
      if (eat('^')) e = integer();
      (c == 'y' ? dy : dx) += e;
      any = true;
      eat('*');
    }
    if (!any) fail_here("expected a variable (q, x, or y)");
    return ExpPair{dx, dy};
  }

  // <int> | <int>? monomial, sign already consumed by the caller.
  void term(Polynomial& into, const Int& sign) {
    Int coeff = 1;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = integer();
      have_coeff = true;
      eat('*');
    }
    char c = peek();
    if (c == 'q' || c == 'x' || c == 'y') {
      ExpPair e = monomial();
      into.add_term(e.x, e.y, sign * coeff);
    } else if (have_coeff) {
      into.add_term(0, 0, sign * coeff);
    } else {
      fail_here("expected a term");
    }
  }

  Polynomial poly() {
    Polynomial p;
    Int sign = eat('-') ? -1 : 1;
    if (sign == 1) eat('+');
    term(p, sign);
    while (true) {
      if (eat('-')) sign = -1;
      else if (eat('+')) sign = 1;
      else break;
      term(p, sign);
    }
    return p;
  }
};

}  // namespace

ProductForm parse_form(const std::string& text) {
  FormCursor c{text};
  Polynomial numer = Polynomial::one();
  bool saw_group = false;
  while (!c.done() && c.peek() != '/') {
    Polynomial g;
    if (c.eat('(')) {
      g = c.poly();
      c.expect(')', "to close the numerator group");
    } else {
      c.term(g, 1);
    }
    numer = saw_group ? numer * g : g;
    saw_group = true;
  }
  std::vector<Factor> factors;
  if (c.eat('/')) {
    c.expect('[', "to open the denominator");
    while (!c.eat(']')) {
      c.expect('(', "to open a factor");
      c.expect('1', "in '1-...'");
      c.expect('-', "in '1-...'");
      ExpPair e = c.monomial();
      c.expect(')', "to close the factor");
      factors.push_back(Factor{e.x, e.y});
    }
  }
  if (!c.done()) c.fail_here("unexpected trailing text");
  if (!saw_group) c.fail_here("empty numerator");
  return ProductForm(std::move(numer), std::move(factors));
}

const char* errc_name(errc c) {
  switch (c) {
    case errc::usage: return "usage";
    case errc::syntax_error: return "syntax_error";
    case errc::semantic_error: return "semantic_error";
    case errc::composition_condition: return "composition_condition";
    case errc::degenerate_factor: return "degenerate_factor";
    case errc::not_in_family: return "not_in_family";
    case errc::not_multiple: return "not_multiple";
    case errc::parameter_violation: return "parameter_violation";
    case errc::nonpositive_ratio: return "nonpositive_ratio";
    case errc::precondition: return "precondition";
    case errc::infeasible_sequence: return "infeasible_sequence";
    case errc::too_many: return "too_many";
    case errc::length_mismatch: return "length_mismatch";
    case errc::unsupported: return "unsupported";
  }
  return "unknown";
}

nlohmann::json numerator_json(const Polynomial& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [e, c] : p.terms())
    arr.push_back({e.x.get_str(), e.y.get_str(), c.get_str()});
  return arr;
}

nlohmann::json denominator_json(const ProductForm& f) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& g : f.grouped_factors())
    arr.push_back({g[0].get_str(), g[1].get_str(), g[2].get_str()});
  return arr;
}

nlohmann::json int_list_json(const std::vector<Int>& v) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Int& x : v) arr.push_back(x.get_str());
  return arr;
}

}  // namespace gfkit
