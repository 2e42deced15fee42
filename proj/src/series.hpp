#pragma once

#include <array>
#include <map>
#include <vector>

#include "bigint.hpp"

namespace gfkit {

// Exponent pair of a monomial x^dx * y^dy. Univariate objects keep dy == 0
// and are rendered in q. Ordered by total degree, then x-degree, so that
// iteration visits coefficients in the order a truncated expansion fills them
// (and mismatch reports point at the earliest offender).
struct ExpPair {
  Int x, y;
  Int total() const { return x + y; }
  bool operator==(const ExpPair& other) const = default;
};

struct GradedLess {
  bool operator()(const ExpPair& a, const ExpPair& b) const {
    Int ta = a.total(), tb = b.total();
    if (ta != tb) return ta < tb;
    return a.x < b.x;
  }
};

using TermMap = std::map<ExpPair, Int, GradedLess>;

// Finitely supported polynomial with nonnegative exponents; zero coefficients
// are never stored.
class Polynomial {
 public:
  Polynomial() = default;
  static Polynomial one();
  static Polynomial monomial(Int dx, Int dy, Int coeff = 1);
  static Polynomial from_terms(TermMap terms);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_univariate() const;
  Int coeff(const Int& dx, const Int& dy) const;

  Polynomial& add_term(Int dx, Int dy, const Int& coeff);  // builder; validates signs

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  bool operator==(const Polynomial& other) const = default;

 private:
  TermMap terms_;
};

// One denominator factor 1/(1 - x^o y^e).
struct Factor {
  Int o, e;
  bool operator==(const Factor& other) const = default;
};

// numerator / prod (1 - x^o y^e). Factors are kept sorted with repetition as
// multiplicity; (o,e) = (0,0) is rejected since the factor would vanish.
class ProductForm {
 public:
  ProductForm(Polynomial numerator, std::vector<Factor> factors);

  const Polynomial& numerator() const { return numerator_; }
  const std::vector<Factor>& factors() const { return factors_; }
  bool is_univariate() const;

  // factors grouped as (o, e, multiplicity), preserving the sorted order
  std::vector<std::array<Int, 3>> grouped_factors() const;

  bool operator==(const ProductForm& other) const = default;

 private:
  Polynomial numerator_;
  std::vector<Factor> factors_;
};

// Coefficients of a series truncated at total degree <= bound.
class TruncatedSeries {
 public:
  TruncatedSeries(long bound, TermMap coeffs);

  long bound() const { return bound_; }
  const TermMap& coeffs() const { return coeffs_; }
  Int coeff(const Int& dx, const Int& dy) const;

  bool operator==(const TruncatedSeries& other) const = default;

 private:
  long bound_;
  TermMap coeffs_;
};

// Expand a product form to total degree n (>= 0) by repeated geometric-series
// convolution; exact.
TruncatedSeries expand(const ProductForm& f, long n);

// Dense univariate fast path: coefficients of q^0..q^n. Requires
// f.is_univariate().
std::vector<Int> expand_univariate(const ProductForm& f, long n);

// Substitute x -> x^m[0][0] y^m[1][0], y -> x^m[0][1] y^m[1][1] into every
// exponent of f. All transformed exponents must stay componentwise
// nonnegative. div_x_allowed=false additionally rejects matrices with a
// negative entry (substitutions that divide by a variable).
ProductForm substitute_monomial(const ProductForm& f, const std::array<std::array<long, 2>, 2>& m,
                                bool div_x_allowed);

// Set y = x and rename to the single variable q: (o,e) -> (o+e, 0).
ProductForm specialize_diagonal(const ProductForm& f);

// Inverse Euler transform: write a unit univariate series as
// prod_m (1-q^m)^{-c_m} up to degree n and return {m -> c_m}, c_m != 0.
// Requires s constant term 1; multiplicities may be negative. The result is
// re-expanded and compared against the input before returning.
std::map<Int, Int> infer_product_form(const TruncatedSeries& s, long n);

}  // namespace gfkit
