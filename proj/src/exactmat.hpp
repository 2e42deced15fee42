#pragma once

#include <cstddef>
#include <vector>

#include "bigint.hpp"

namespace gfkit {

// Strictly upper triangular k x k integer matrix. Row i encodes the
// constraint lambda_i >= sum_{j>i} A[i,j]*lambda_j; entries may be negative.
// Indices are 1-based on the public surface, matching the text format.
class ConstraintMatrix {
 public:
  explicit ConstraintMatrix(std::size_t k);  // zero matrix: lambda_i >= 0 only
  explicit ConstraintMatrix(std::vector<std::vector<Int>> rows);

  std::size_t dim() const { return k_; }
  const Int& at(std::size_t i, std::size_t j) const;  // 1-based

  bool operator==(const ConstraintMatrix& other) const = default;

 private:
  std::size_t k_;
  std::vector<Int> e_;  // row-major k*k
  friend ConstraintMatrix matrix_from_rows_unchecked(std::size_t, std::vector<Int>);
};

// Unit upper triangular matrix with cached column sums and row-parity column
// sums (odd/even refer to 1-based row indices).
class UnitMatrix {
 public:
  explicit UnitMatrix(std::vector<std::vector<Int>> rows);

  std::size_t dim() const { return k_; }
  const Int& at(std::size_t i, std::size_t j) const;  // 1-based

  const std::vector<Int>& column_sums() const { return colsum_; }
  const std::vector<Int>& odd_sums() const { return oddsum_; }
  const std::vector<Int>& even_sums() const { return evensum_; }

  bool operator==(const UnitMatrix& other) const;

 private:
  UnitMatrix(std::size_t k, std::vector<Int> entries);
  void compute_sums();

  std::size_t k_;
  std::vector<Int> e_;
  std::vector<Int> colsum_, oddsum_, evensum_;

  friend UnitMatrix nilpotent_inverse(const ConstraintMatrix&);
};

// (I - A)^{-1} = I + A + A^2 + ... + A^{k-1}; exact, since A is nilpotent.
UnitMatrix nilpotent_inverse(const ConstraintMatrix& a);

bool is_nonnegative(const UnitMatrix& b);

// Matrix-vector product B*s. Throws length_mismatch if |s| != dim.
std::vector<Int> apply(const UnitMatrix& b, const std::vector<Int>& s);

}  // namespace gfkit
