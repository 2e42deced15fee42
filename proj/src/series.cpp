#include "series.hpp"

#include <algorithm>

#include "errors.hpp"

namespace gfkit {

Polynomial Polynomial::one() { return monomial(0, 0, 1); }

Polynomial Polynomial::monomial(Int dx, Int dy, Int coeff) {
  Polynomial p;
  p.add_term(std::move(dx), std::move(dy), coeff);
  return p;
}

Polynomial Polynomial::from_terms(TermMap terms) {
  Polynomial p;
  for (auto& [e, c] : terms) p.add_term(e.x, e.y, c);
  return p;
}

Polynomial& Polynomial::add_term(Int dx, Int dy, const Int& coeff) {
  if (dx < 0 || dy < 0)
    fail(errc::usage, "polynomial exponents must be nonnegative, got x^" + dx.get_str() + " y^" + dy.get_str());
  if (coeff == 0) return *this;
  ExpPair key{std::move(dx), std::move(dy)};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

bool Polynomial::is_univariate() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.y == 0; });
}

Int Polynomial::coeff(const Int& dx, const Int& dy) const {
  auto it = terms_.find(ExpPair{dx, dy});
  return it == terms_.end() ? Int(0) : it->second;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  Polynomial out = *this;
  for (const auto& [e, c] : other.terms_) out.add_term(e.x, e.y, c);
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  Polynomial out;
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : other.terms_) out.add_term(ea.x + eb.x, ea.y + eb.y, ca * cb);
  return out;
}

ProductForm::ProductForm(Polynomial numerator, std::vector<Factor> factors)
    : numerator_(std::move(numerator)), factors_(std::move(factors)) {
  for (const Factor& f : factors_) {
    if (f.o < 0 || f.e < 0)
      fail(errc::usage, "denominator factor exponents must be nonnegative");
    if (f.o == 0 && f.e == 0)
      fail(errc::usage, "denominator factor (1 - x^0 y^0) vanishes");
  }
  std::sort(factors_.begin(), factors_.end(), [](const Factor& a, const Factor& b) {
    return GradedLess{}(ExpPair{a.o, a.e}, ExpPair{b.o, b.e});
  });
}

bool ProductForm::is_univariate() const {
  return numerator_.is_univariate() &&
         std::all_of(factors_.begin(), factors_.end(), [](const Factor& f) { return f.e == 0; });
}

std::vector<std::array<Int, 3>> ProductForm::grouped_factors() const {
  std::vector<std::array<Int, 3>> out;
  for (const Factor& f : factors_) {
    if (!out.empty() && out.back()[0] == f.o && out.back()[1] == f.e)
      out.back()[2] += 1;
    else
      out.push_back({f.o, f.e, Int(1)});
  }
  return out;
}

TruncatedSeries::TruncatedSeries(long bound, TermMap coeffs)
    : bound_(bound), coeffs_(std::move(coeffs)) {
  if (bound_ < 0) fail(errc::usage, "truncation bound must be nonnegative");
  for (const auto& [e, c] : coeffs_) {
    (void)c;
    if (e.x < 0 || e.y < 0 || e.total() > bound_)
      fail(errc::usage, "series term outside the truncation window");
  }
}

Int TruncatedSeries::coeff(const Int& dx, const Int& dy) const {
  auto it = coeffs_.find(ExpPair{dx, dy});
  return it == coeffs_.end() ? Int(0) : it->second;
}

TruncatedSeries expand(const ProductForm& f, long n) {
  if (n < 0) fail(errc::usage, "truncation bound must be nonnegative");
  TermMap cur;
  for (const auto& [e, c] : f.numerator().terms())
    if (e.total() <= n) cur.emplace(e, c);

  // Multiplying by 1/(1 - x^o y^e) satisfies R = S + x^o y^e * R, so one
  // pass in graded order per factor suffices.
  for (const Factor& fac : f.factors()) {
    if (fac.o + fac.e > n) continue;  // contributes nothing below the bound
    TermMap next;
    for (long t = 0; t <= n; ++t) {
      for (long dx = 0; dx <= t; ++dx) {
        ExpPair key{Int(dx), Int(t - dx)};
        Int v;
        if (auto it = cur.find(key); it != cur.end()) v = it->second;
        if (key.x >= fac.o && key.y >= fac.e) {
          if (auto it = next.find(ExpPair{key.x - fac.o, key.y - fac.e}); it != next.end())
            v += it->second;
        }
        if (v != 0) next.emplace_hint(next.end(), std::move(key), std::move(v));
      }
    }
    cur.swap(next);
  }
  return TruncatedSeries(n, std::move(cur));
}

std::vector<Int> expand_univariate(const ProductForm& f, long n) {
  if (n < 0) fail(errc::usage, "truncation bound must be nonnegative");
  if (!f.is_univariate()) fail(errc::usage, "dense expansion requires a univariate form");
  std::vector<Int> v(static_cast<std::size_t>(n) + 1, Int(0));
  for (const auto& [e, c] : f.numerator().terms())
    if (e.x <= n) v[e.x.get_ui()] += c;
  for (const Factor& fac : f.factors()) {
    if (fac.o > n) continue;
    long o = fac.o.get_si();
    for (long i = o; i <= n; ++i) v[i] += v[i - o];
  }
  return v;
}

ProductForm substitute_monomial(const ProductForm& f, const std::array<std::array<long, 2>, 2>& m,
                                bool div_x_allowed) {
  if (!div_x_allowed)
    for (const auto& row : m)
      for (long v : row)
        if (v < 0)
          fail(errc::parameter_violation,
               "substitution matrix has a negative entry; pass div_x_allowed to permit division");

  auto image = [&](const Int& dx, const Int& dy) {
    return ExpPair{m[0][0] * dx + m[0][1] * dy, m[1][0] * dx + m[1][1] * dy};
  };

  std::vector<Factor> factors;
  factors.reserve(f.factors().size());
  for (const Factor& fac : f.factors()) {
    ExpPair t = image(fac.o, fac.e);
    if (t.x < 0 || t.y < 0)
      fail(errc::parameter_violation, "substitution sends factor (1 - x^" + fac.o.get_str() +
                                          " y^" + fac.e.get_str() + ") to a negative exponent");
    if (t.x == 0 && t.y == 0)
      fail(errc::parameter_violation, "substitution collapses factor (1 - x^" + fac.o.get_str() +
                                          " y^" + fac.e.get_str() + ") to a constant");
    factors.push_back(Factor{std::move(t.x), std::move(t.y)});
  }

  Polynomial numerator;
  for (const auto& [e, c] : f.numerator().terms()) {
    ExpPair t = image(e.x, e.y);
    if (t.x < 0 || t.y < 0)
      fail(errc::parameter_violation, "substitution sends numerator term x^" + e.x.get_str() +
                                          " y^" + e.y.get_str() + " to a negative exponent");
    numerator.add_term(std::move(t.x), std::move(t.y), c);
  }
  return ProductForm(std::move(numerator), std::move(factors));
}

ProductForm specialize_diagonal(const ProductForm& f) {
  std::vector<Factor> factors;
  factors.reserve(f.factors().size());
  for (const Factor& fac : f.factors()) factors.push_back(Factor{fac.o + fac.e, Int(0)});
  Polynomial numerator;
  for (const auto& [e, c] : f.numerator().terms()) numerator.add_term(e.x + e.y, 0, c);
  return ProductForm(std::move(numerator), std::move(factors));
}

namespace {

// In-place multiply of a dense unit series by (1 - q^m)^p, p of either sign,
// truncated at degree n: expand the binomial series of (1-u)^p in u = q^m.
void mul_binomial_power(std::vector<Int>& v, long m, const Int& p, long n) {
  if (p == 0) return;
  std::vector<Int> weights;  // coefficient of q^{m*t}
  for (long t = 0; t * m <= n; ++t) {
    Int w = binomial(p, static_cast<unsigned long>(t));
    if (t % 2 == 1) w = -w;
    weights.push_back(std::move(w));
  }
  std::vector<Int> out(v.size(), Int(0));
  for (long i = 0; i <= n; ++i) {
    if (v[i] == 0) continue;
    for (long t = 0; t < static_cast<long>(weights.size()) && i + t * m <= n; ++t)
      if (weights[t] != 0) out[i + t * m] += v[i] * weights[t];
  }
  v.swap(out);
}

}  // namespace

std::map<Int, Int> infer_product_form(const TruncatedSeries& s, long n) {
  if (n < 0 || n > s.bound()) fail(errc::usage, "inference degree exceeds the series truncation");
  std::vector<Int> v(static_cast<std::size_t>(n) + 1, Int(0));
  for (const auto& [e, c] : s.coeffs()) {
    if (e.y != 0) fail(errc::usage, "product inference is defined for univariate series only");
    if (e.x <= n) v[e.x.get_ui()] = c;
  }
  if (v[0] != 1) fail(errc::precondition, "product inference needs constant term 1");

  std::map<Int, Int> mults;
  std::vector<Int> residual = v;
  for (long m = 1; m <= n; ++m) {
    const Int c = residual[m];
    if (c == 0) continue;
    mults[Int(m)] = c;
    // Divide the residual by (1-q^m)^{-c}.
    mul_binomial_power(residual, m, c, n);
  }
  for (long i = 1; i <= n; ++i)
    if (residual[i] != 0) fail(errc::precondition, "inference residual did not vanish");

  // Independent re-expansion check of prod (1-q^m)^{-c_m}.
  std::vector<Int> check(static_cast<std::size_t>(n) + 1, Int(0));
  check[0] = 1;
  for (const auto& [m, c] : mults) mul_binomial_power(check, m.get_si(), -c, n);
  if (check != v) fail(errc::precondition, "inferred product does not reproduce the series");
  return mults;
}

}  // namespace gfkit
