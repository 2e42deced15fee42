#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "exactmat.hpp"
#include "oracle.hpp"
#include "series.hpp"

namespace gfkit {

// Chain system in closed form: part ratios a (positive) and first-row
// coefficients c. c = (1, 0, ..., 0) is the plain chain.
struct RationalSystem {
  std::vector<Int> a;
  std::vector<Int> c;

  static RationalSystem plain(std::vector<Int> a);
  std::size_t parts() const { return a.size(); }
};

// Univariate form for the family of the matrix system (A, spec):
// q^{sum d_i b_i} / prod_{i not in S} (1 - q^{b_i}), where b is the column-sum
// vector of (I-A)^{-1}. Fails if the inverse has a negative entry or a kept
// factor exponent would be < 1.
ProductForm gf_integer(const ConstraintMatrix& a, const EqualitySpec& spec);

// Weight-preserving bijection onto componentwise multiples of b: the image of
// lambda is (b_1*s_1, ..., b_k*s_k) with s = (I-A)*lambda the slack vector.
std::vector<Int> theta_map(const ConstraintMatrix& a, const std::vector<Int>& lambda);
std::vector<Int> theta_inverse(const ConstraintMatrix& a, const std::vector<Int>& parts);

// First-row family: lambda_1 >= sum a_i*lambda_{i+1}, lambda_i >= lambda_{i+1}
// for i >= 2. a has k-1 entries (any integers with nonnegative prefix sums);
// result is 1/(1-q) * prod_i 1/(1 - q^{i + a_1 + ... + a_i}).
ProductForm gf_first_row(const std::vector<Int>& a);

struct RationalGuard {
  bool enabled = true;
  long weight_bound = 0;  // 0 = default 2 * max(a_i) * k
};

// Closed form for the rational chain system; exact ceiling arithmetic, with
// an optional empirical check that the first constraint keeps lambda_1 >= 0.
ProductForm gf_rational(const RationalSystem& sys, const RationalGuard& guard = {});

// Structured description of the alternating chain (a_i > 1 forces
// a_{i+1} = 1): denominator exponents b, plus the run of consecutive
// exponents (lo..hi) that each index with a_{i+1} > 1 contributes to the
// numerator. Runs with lo > hi do not occur; absent indices contribute 1.
struct AlternatingDescription {
  std::vector<Int> b;
  std::vector<std::pair<Int, Int>> runs;  // inclusive ranges, ascending
  ProductForm form;
};

AlternatingDescription gf_special_alternating(const std::vector<Int>& a);

// Two-variable form tracking (odd-position weight, even-position weight):
// 1 / prod_i (1 - x^{o_i} y^{e_i}) with o, e the row-parity column sums of
// (I-A)^{-1}.
ProductForm gf_two_variable(const ConstraintMatrix& a);

// Family lambda_i >= alpha*(lambda_{i+1}+lambda_{i+3}+...)
//                  - beta*(lambda_{i+2}+lambda_{i+4}+...), alpha >= 1,
// beta <= alpha. Factor exponents follow the two-term recurrence
// o_i = alpha*o_{i-1} + (1-beta)*o_{i-2}, e_i = o_{i-1}.
ProductForm gf_alpha_beta(long alpha, long beta, std::size_t k);

// One constraint-prepending step: substitute x -> x^alpha y, y -> x^{1-beta}
// into g. Appending a fresh 1/(1-x) afterwards advances the alpha/beta family
// by one part.
ProductForm gf_prepend_constraint(const ProductForm& g, long alpha, long beta);

// Scaled staircase family, univariate closed form
// 1/(1-q) * prod_{i=1..k-1} 1/(1 - q^{i*l + i*j + l}); needs l > 0 and
// j >= 2 - l.
ProductForm gf_lecture_hall_variant(std::size_t k, long l, long j);

// Its two-variable refinement: 1/(1-x) * prod 1/(1 - x^{l(i+1)+(j-1)i} y^i).
ProductForm gf_lecture_hall_two_variable(std::size_t k, long l, long j);

// Two-variable form for the plain chain lambda_1/a_1 >= ... >= lambda_k/a_k:
// factor exponents are the parity-split prefix sums of a, with a z-indexed
// numerator mirroring the univariate construction.
ProductForm gf_two_variable_rational(const std::vector<Int>& a);

// Column sums of (I-A)^{-1} for the matrix the first-row family implies;
// shared by gf_first_row and the sequence-inversion module.
std::vector<Int> first_row_column_sums(const std::vector<Int>& a);

}  // namespace gfkit
