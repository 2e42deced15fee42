#include "dsl.hpp"

#include <cctype>
#include <map>
#include <sstream>

#include "errors.hpp"

namespace gfkit {

namespace {

std::string at(std::size_t line, std::size_t col) {
  return "line " + std::to_string(line) + ", col " + std::to_string(col) + ": ";
}

// One comment-stripped source line with a scanning cursor. Columns are
// 1-based positions in the original line, which comment stripping preserves.
struct LineCursor {
  std::string text;
  std::size_t lineno;
  std::size_t pos = 0;

  std::size_t col() const { return pos + 1; }

  void skip_ws() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  }

  bool done() {
    skip_ws();
    return pos >= text.size();
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  [[noreturn]] void fail_here(errc code, const std::string& msg) {
    skip_ws();
    fail(code, at(lineno, col()) + msg);
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c, const std::string& what) {
    if (!eat(c)) fail_here(errc::syntax_error, "expected '" + std::string(1, c) + "' " + what);
  }

  // Leading keyword: a run of letters (so "L1" yields "L", digits stay put).
  std::string word() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) ++pos;
    return text.substr(start, pos - start);
  }

  Int integer(bool allow_sign) {
    skip_ws();
    std::size_t start = pos;
    if (allow_sign && pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    std::size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == digits) {
      pos = start;
      fail_here(errc::syntax_error, "expected an integer");
    }
    return Int(text.substr(start, pos - start));
  }

  // L<j> reference; digits must follow immediately.
  std::size_t lref() {
    skip_ws();
    if (pos >= text.size() || text[pos] != 'L')
      fail_here(errc::syntax_error, "expected a part reference L<j>");
    std::size_t start = pos++;
    std::size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == digits) {
      pos = start;
      fail_here(errc::syntax_error, "expected digits after 'L'");
    }
    Int idx(text.substr(digits, pos - digits));
    if (idx < 1 || !fits_long(idx)) {
      pos = start;
      fail_here(errc::semantic_error, "part index out of range");
    }
    return static_cast<std::size_t>(idx.get_si());
  }

  long small_int(bool allow_sign, const std::string& what) {
    std::size_t start_col = col();
    Int v = integer(allow_sign);
    if (!fits_long(v))
      fail(errc::semantic_error, at(lineno, start_col) + what + " is out of machine range");
    return v.get_si();
  }
};

std::vector<LineCursor> significant_lines(const std::string& text) {
  std::vector<LineCursor> out;
  std::size_t lineno = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    std::string line = text.substr(start, end == std::string::npos ? std::string::npos : end - start);
    start = end == std::string::npos ? text.size() + 1 : end + 1;
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (std::size_t hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    bool blank = true;
    for (char c : line)
      if (c != ' ' && c != '\t') {
        blank = false;
        break;
      }
    if (!blank) out.push_back(LineCursor{line, lineno});
    if (end == std::string::npos) break;
  }
  return out;
}

MatrixDoc parse_matrix_mode(LineCursor& header, std::vector<LineCursor>& lines) {
  long kv = header.small_int(false, "k");
  if (kv < 1) header.fail_here(errc::semantic_error, "k must be at least 1");
  if (!header.done()) header.fail_here(errc::syntax_error, "unexpected text after k=<int>");
  const std::size_t k = static_cast<std::size_t>(kv);

  std::vector<std::vector<Int>> rows(k, std::vector<Int>(k, 0));
  std::vector<bool> row_seen(k + 1, false);
  EqualitySpec spec = EqualitySpec::none(k);
  bool equal_seen = false, offset_seen = false;

  for (std::size_t n = 1; n < lines.size(); ++n) {
    LineCursor& lc = lines[n];
    lc.skip_ws();
    std::size_t word_col = lc.col();
    std::string w = lc.word();
    if (w == "L") {
      lc.pos = word_col - 1;  // reparse as a reference
      std::size_t i = lc.lref();
      if (i > k)
        fail(errc::semantic_error, at(lc.lineno, word_col) + "row L" + std::to_string(i) +
                                       " exceeds k=" + std::to_string(k));
      if (row_seen[i])
        fail(errc::semantic_error,
             at(lc.lineno, word_col) + "duplicate row for L" + std::to_string(i));
      row_seen[i] = true;
      lc.expect('>', "after the left-hand part");
      lc.expect('=', "after '>'");
      // <term> ((+|-) <term>)*, term = <int>? L<j>; a leading sign is allowed.
      bool first_term = true;
      while (true) {
        Int sign = 1;
        if (first_term) {
          if (lc.eat('-')) sign = -1;
          else lc.eat('+');
        } else if (lc.eat('-')) {
          sign = -1;
        } else if (lc.eat('+')) {
          sign = 1;
        } else if (lc.done()) {
          break;
        } else {
          lc.fail_here(errc::syntax_error, "expected '+', '-', or end of line");
        }
        Int coeff = 1;
        if (std::isdigit(static_cast<unsigned char>(lc.peek()))) {
          coeff = lc.integer(false);
          lc.eat('*');
        }
        std::size_t ref_col = lc.col();
        std::size_t j = lc.lref();
        if (j <= i)
          fail(errc::semantic_error, at(lc.lineno, ref_col) + "L" + std::to_string(j) +
                                         " must have index greater than " + std::to_string(i));
        if (j > k)
          fail(errc::semantic_error, at(lc.lineno, ref_col) + "L" + std::to_string(j) +
                                         " exceeds k=" + std::to_string(k));
        rows[i - 1][j - 1] += sign * coeff;
        first_term = false;
      }
      if (first_term) lc.fail_here(errc::syntax_error, "constraint needs at least one term");
    } else if (w == "equal") {
      lc.expect(':', "after 'equal'");
      if (equal_seen)
        fail(errc::semantic_error, at(lc.lineno, word_col) + "duplicate equal: line");
      equal_seen = true;
      do {
        std::size_t icol = lc.col();
        Int idx = lc.integer(false);
        if (idx < 1 || idx > Int(static_cast<unsigned long>(k)))
          fail(errc::semantic_error,
               at(lc.lineno, icol) + "equality index " + idx.get_str() + " out of 1.." + std::to_string(k));
        if (!spec.equalities.insert(static_cast<std::size_t>(idx.get_ui())).second)
          fail(errc::semantic_error, at(lc.lineno, icol) + "duplicate equality index " + idx.get_str());
      } while (lc.eat(','));
      if (!lc.done()) lc.fail_here(errc::syntax_error, "expected ',' or end of line");
    } else if (w == "offset") {
      lc.expect(':', "after 'offset'");
      if (offset_seen)
        fail(errc::semantic_error, at(lc.lineno, word_col) + "duplicate offset: line");
      offset_seen = true;
      std::vector<Int> d;
      do {
        d.push_back(lc.integer(true));
      } while (lc.eat(','));
      if (!lc.done()) lc.fail_here(errc::syntax_error, "expected ',' or end of line");
      if (d.size() != k)
        fail(errc::semantic_error, at(lc.lineno, word_col) + "offset: needs exactly " +
                                       std::to_string(k) + " entries, got " + std::to_string(d.size()));
      spec.offsets = std::move(d);
    } else {
      fail(errc::syntax_error,
           at(lc.lineno, word_col) + "expected a constraint row, equal:, or offset:");
    }
  }
  return MatrixDoc{ConstraintMatrix(std::move(rows)), std::move(spec)};
}

RatioDoc parse_rational_mode(LineCursor& header, std::vector<LineCursor>& lines) {
  RatioDoc doc;
  while (!header.done()) {
    std::size_t rcol = header.col();
    Int n = header.integer(false);
    header.expect('/', "between numerator and denominator");
    Int d = header.integer(false);
    if (n < 1 || d < 1)
      fail(errc::nonpositive_ratio, at(header.lineno, rcol) + "ratios must be positive");
    doc.ratios.emplace_back(n, d);
  }
  for (std::size_t n = 1; n < lines.size(); ++n) {
    LineCursor& lc = lines[n];
    lc.skip_ws();
    std::size_t word_col = lc.col();
    std::string w = lc.word();
    if (w != "first")
      fail(errc::syntax_error, at(lc.lineno, word_col) + "expected a first: line or end of file");
    lc.expect(':', "after 'first'");
    if (doc.first)
      fail(errc::semantic_error, at(lc.lineno, word_col) + "duplicate first: line");
    std::vector<Int> c;
    while (!lc.done()) c.push_back(lc.integer(true));
    if (c.size() != doc.parts())
      fail(errc::semantic_error, at(lc.lineno, word_col) + "first: needs exactly " +
                                     std::to_string(doc.parts()) + " entries, got " +
                                     std::to_string(c.size()));
    doc.first = std::move(c);
  }
  return doc;
}

}  // namespace

SystemDocument parse_system(const std::string& text) {
  std::vector<LineCursor> lines = significant_lines(text);
  if (lines.empty())
    fail(errc::syntax_error, at(1, 1) + "empty system (expected k=, ratios:, lhv:, or alphabeta:)");

  LineCursor& head = lines.front();
  head.skip_ws();
  std::size_t head_col = head.col();
  std::string w = head.word();
  if (w == "k") {
    head.expect('=', "after 'k'");
    return parse_matrix_mode(head, lines);
  }
  if (w == "ratios") {
    head.expect(':', "after 'ratios'");
    return parse_rational_mode(head, lines);
  }
  if (w == "lhv" || w == "alphabeta") {
    head.expect(':', "after '" + w + "'");
    long p1 = head.small_int(true, "parameter");
    long p2 = head.small_int(true, "parameter");
    long p3 = head.small_int(true, "parameter");
    if (!head.done()) head.fail_here(errc::syntax_error, "expected exactly three parameters");
    if (lines.size() > 1)
      fail(errc::syntax_error,
           at(lines[1].lineno, lines[1].col()) + "unexpected line after " + w + ": header");
    long kv = (w == "lhv") ? p1 : p3;
    if (kv < 1)
      fail(errc::semantic_error, at(head.lineno, head_col) + "k must be at least 1");
    if (w == "lhv") return LhvDoc{static_cast<std::size_t>(kv), p2, p3};
    return AlphaBetaDoc{p1, p2, static_cast<std::size_t>(kv)};
  }
  fail(errc::syntax_error, at(head.lineno, head_col) + "expected k=, ratios:, lhv:, or alphabeta:");
}

std::vector<Int> RatioDoc::chain() const {
  const std::size_t k = parts();
  std::vector<Int> a(k, 1);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t t = 0; t + 1 < k; ++t) a[i] *= (t < i ? ratios[t].second : ratios[t].first);
  Int g = 0;
  for (const Int& v : a) g = gcd(g, v);
  for (Int& v : a) v /= g;
  return a;
}

std::vector<Int> RatioDoc::coefficients() const {
  if (first) return *first;
  std::vector<Int> c(parts(), 0);
  c[0] = 1;
  return c;
}

namespace {

void render_matrix(std::ostringstream& out, const MatrixDoc& doc) {
  const std::size_t k = doc.a.dim();
  out << "k=" << k << "\n";
  for (std::size_t i = 1; i <= k; ++i) {
    bool any = false;
    for (std::size_t j = i + 1; j <= k; ++j) {
      const Int& c = doc.a.at(i, j);
      if (c == 0) continue;
      if (!any) {
        out << "L" << i << " >= ";
        any = true;
        if (c < 0) out << "-";
      } else {
        out << (c < 0 ? " - " : " + ");
      }
      Int m = abs(c);
      if (m != 1) out << m.get_str() << " ";
      out << "L" << j;
    }
    if (any) out << "\n";
  }
  if (!doc.spec.equalities.empty()) {
    out << "equal: ";
    bool first = true;
    for (std::size_t i : doc.spec.equalities) {
      if (!first) out << ", ";
      out << i;
      first = false;
    }
    out << "\n";
  }
  bool any_offset = false;
  for (const Int& d : doc.spec.offsets)
    if (d != 0) any_offset = true;
  if (any_offset) {
    out << "offset: ";
    for (std::size_t i = 0; i < doc.spec.offsets.size(); ++i)
      out << (i ? ", " : "") << doc.spec.offsets[i].get_str();
    out << "\n";
  }
}

}  // namespace

std::string render_system(const SystemDocument& doc) {
  std::ostringstream out;
  if (const auto* m = std::get_if<MatrixDoc>(&doc)) {
    render_matrix(out, *m);
  } else if (const auto* r = std::get_if<RatioDoc>(&doc)) {
    out << "ratios:";
    for (const auto& [n, d] : r->ratios) out << " " << n.get_str() << "/" << d.get_str();
    out << "\n";
    if (r->first) {
      out << "first:";
      for (const Int& c : *r->first) out << " " << c.get_str();
      out << "\n";
    }
  } else if (const auto* v = std::get_if<LhvDoc>(&doc)) {
    out << "lhv: " << v->k << " " << v->l << " " << v->j << "\n";
  } else {
    const auto& ab = std::get<AlphaBetaDoc>(doc);
    out << "alphabeta: " << ab.alpha << " " << ab.beta << " " << ab.k << "\n";
  }
  return out.str();
}

std::size_t document_parts(const SystemDocument& doc) {
  if (const auto* m = std::get_if<MatrixDoc>(&doc)) return m->a.dim();
  if (const auto* r = std::get_if<RatioDoc>(&doc)) return r->parts();
  if (const auto* v = std::get_if<LhvDoc>(&doc)) return v->k;
  return std::get<AlphaBetaDoc>(doc).k;
}

ConstraintSystem to_constraint_system(const SystemDocument& doc) {
  if (const auto* m = std::get_if<MatrixDoc>(&doc)) return IntegerMatrixSystem{m->a, m->spec};
  if (const auto* r = std::get_if<RatioDoc>(&doc))
    return RationalChainSystem{r->chain(), r->coefficients()};
  if (const auto* v = std::get_if<LhvDoc>(&doc)) return LectureHallVariantSystem{v->k, v->l, v->j};
  const auto& ab = std::get<AlphaBetaDoc>(doc);
  return AlphaBetaSystem{ab.alpha, ab.beta, ab.k};
}

}  // namespace gfkit
