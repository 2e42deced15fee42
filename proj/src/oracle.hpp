#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "exactmat.hpp"
#include "series.hpp"

namespace gfkit {

// Equality rows and per-row offsets attached to a constraint matrix:
// row i becomes lambda_i = rhs_i + d_i for i in `equalities`, and
// lambda_i >= rhs_i + d_i otherwise.
struct EqualitySpec {
  std::set<std::size_t> equalities;  // 1-based row indices
  std::vector<Int> offsets;          // length k, nonnegative

  static EqualitySpec none(std::size_t k) { return EqualitySpec{{}, std::vector<Int>(k, Int(0))}; }
  bool operator==(const EqualitySpec& other) const = default;
};

void validate_spec(const EqualitySpec& spec, std::size_t k);

// The four families the enumerator understands. It works straight from the
// constraint definitions; it never looks at an inverse matrix or a derived
// exponent sequence, so it can referee them.
struct IntegerMatrixSystem {
  ConstraintMatrix a;
  EqualitySpec spec;
};

// lambda_1 >= c_1*ceil(a_1*lambda_2/a_2) + sum_{i>=2} c_i*lambda_i, and
// lambda_2/a_2 >= ... >= lambda_k/a_k >= 0 (compared by cross-multiplication).
struct RationalChainSystem {
  std::vector<Int> a;  // positive, length k
  std::vector<Int> c;  // length k
};

// lambda_1 >= l*ceil(k*lambda_2/(k-1)) + (j-1)*(lambda_2+lambda_4+...)
//           + (l-1)*(lambda_3+lambda_5+...), with the staircase chain
// lambda_2/(k-1) >= lambda_3/(k-2) >= ... >= lambda_k/1 >= 0.
struct LectureHallVariantSystem {
  std::size_t k;
  long l, j;
};

// lambda_i >= alpha*(lambda_{i+1}+lambda_{i+3}+...) - beta*(lambda_{i+2}+...)
// for 1 <= i <= k.
struct AlphaBetaSystem {
  long alpha, beta;
  std::size_t k;
};

using ConstraintSystem =
    std::variant<IntegerMatrixSystem, RationalChainSystem, LectureHallVariantSystem, AlphaBetaSystem>;

std::size_t system_parts(const ConstraintSystem& sys);

// Visit every member with weight <= n (all parts nonnegative), in the order
// produced by choosing parts from index k down to 1.
void for_each_member(const ConstraintSystem& sys, long n,
                     const std::function<void(const std::vector<Int>&)>& fn);

// counts[w] = number of members of weight w, 0 <= w <= n.
std::vector<Int> count_by_weight(const ConstraintSystem& sys, long n);

// Counts keyed by (odd-position weight, even-position weight), 1-based
// positions, for total weight <= n.
TermMap count_bivariate(const ConstraintSystem& sys, long n);

struct VerifyReport {
  bool pass = true;
  ExpPair at{0, 0};        // earliest mismatching exponent (graded order)
  Int expected, actual;    // oracle count vs form coefficient
  std::string describe() const;
};

// Compare a closed form against the enumerator: univariate forms against
// count_by_weight, bivariate forms against count_bivariate, through degree n.
VerifyReport verify(const ProductForm& form, const ConstraintSystem& sys, long n);

}  // namespace gfkit
