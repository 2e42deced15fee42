#include "construct.hpp"

#include <functional>

#include "errors.hpp"

namespace gfkit {

namespace {

// First-row shape: row 1 carries the increments, rows 2..k-1 a superdiagonal 1.
ConstraintMatrix first_row_matrix(const std::vector<Int>& c) {
  const std::size_t k = c.size();
  std::vector<std::vector<Int>> rows(k, std::vector<Int>(k, 0));
  if (k >= 2) {
    rows[0][1] = c[1] - 1;
    for (std::size_t j = 3; j <= k; ++j) rows[0][j - 1] = c[j - 1] - c[j - 2] - 1;
    for (std::size_t i = 2; i < k; ++i) rows[i - 1][i] = 1;
  }
  return ConstraintMatrix(rows);
}

void check_positive(const std::vector<Int>& c) {
  if (c.empty()) fail(errc::precondition, "sequence must be non-empty");
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] <= 0)
      fail(errc::infeasible_sequence,
           "sequence entry " + std::to_string(i + 1) + " is not positive");
}

}  // namespace

ConstructedSystem matrix_from_sequence(const std::vector<Int>& c) {
  check_positive(c);
  std::vector<Int> seq;
  bool pinned_first = false;
  if (c[0] == 1) {
    seq = c;
  } else {
    // Realize (c_1,...,c_k) as the tail of (1,c_1,...,c_k) with the leading
    // part pinned by an equality so its factor drops out.
    pinned_first = true;
    seq.reserve(c.size() + 1);
    seq.push_back(1);
    seq.insert(seq.end(), c.begin(), c.end());
  }
  ConstraintMatrix a = first_row_matrix(seq);
  UnitMatrix b = nilpotent_inverse(a);
  if (!is_nonnegative(b))
    fail(errc::infeasible_sequence,
         "no matrix with nonnegative inverse realizes this sequence");
  EqualitySpec spec = EqualitySpec::none(seq.size());
  if (pinned_first) spec.equalities.insert(1);
  return ConstructedSystem{a, spec};
}

Int count_matrices_formula(const std::vector<Int>& c) {
  check_positive(c);
  Int n = 1;
  for (std::size_t i = 2; i <= c.size(); ++i)
    n *= binomial(c[i - 1] - 1, static_cast<unsigned long>(i - 2));
  return n;
}

std::vector<ConstraintMatrix> enumerate_matrices(const std::vector<Int>& c,
                                                 std::size_t cap) {
  check_positive(c);
  if (c[0] != 1)
    fail(errc::precondition, "enumeration requires a sequence starting at 1");
  const std::size_t k = c.size();

  // Column i of the inverse holds i-1 free nonnegative entries summing to
  // c_i - 1, so the total is a product of binomials; bail out before
  // materializing anything huge.
  Int total = 1;
  for (std::size_t i = 2; i <= k; ++i)
    total *= binomial(c[i - 1] - 1 + Int(i) - 2, static_cast<unsigned long>(i - 2));
  if (total > Int(static_cast<unsigned long>(cap)))
    fail(errc::too_many, "sequence admits " + total.get_str() +
                             " matrices, over the cap of " + std::to_string(cap));

  std::vector<std::vector<Int>> b(k, std::vector<Int>(k, 0));
  for (std::size_t i = 0; i < k; ++i) b[i][i] = 1;

  std::vector<ConstraintMatrix> out;
  // Fill column col (1-based, >= 2) and recurse; at the end invert.
  std::function<void(std::size_t)> fill_column = [&](std::size_t col) {
    if (col > k) {
      // Invert the unit matrix by back substitution; A = I - B^{-1}.
      std::vector<std::vector<Int>> inv(k, std::vector<Int>(k, 0));
      for (std::size_t i = 0; i < k; ++i) inv[i][i] = 1;
      for (std::size_t j = k; j >= 1; --j) {
        for (std::size_t i = j - 1; i >= 1; --i) {
          Int s = 0;
          for (std::size_t l = i + 1; l <= j; ++l)
            s += b[i - 1][l - 1] * inv[l - 1][j - 1];
          inv[i - 1][j - 1] = -s;
        }
      }
      std::vector<std::vector<Int>> rows(k, std::vector<Int>(k, 0));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) rows[i][j] = -inv[i][j];
      out.push_back(ConstraintMatrix(rows));
      return;
    }
    // Entries b[0..col-2][col-1] >= 0 with sum c_col - 1.
    Int budget = c[col - 1] - 1;
    std::function<void(std::size_t, Int)> place = [&](std::size_t row, Int left) {
      if (row == col - 1) {
        b[row - 1][col - 1] = left;
        fill_column(col + 1);
        return;
      }
      for (Int v = 0; v <= left; ++v) {
        b[row - 1][col - 1] = v;
        place(row + 1, left - v);
      }
    };
    if (budget < 0) return;
    if (col == 1)
      fill_column(2);
    else
      place(1, budget);
  };
  fill_column(k >= 2 ? 2 : k + 1);
  return out;
}

}  // namespace gfkit
