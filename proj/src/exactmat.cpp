#include "exactmat.hpp"

#include "errors.hpp"

namespace gfkit {

ConstraintMatrix::ConstraintMatrix(std::size_t k) : k_(k) {
  if (k == 0) fail(errc::usage, "constraint matrix must have at least one row");
  e_.assign(k * k, Int(0));
}

ConstraintMatrix::ConstraintMatrix(std::vector<std::vector<Int>> rows) : k_(rows.size()) {
  if (k_ == 0) fail(errc::usage, "constraint matrix must have at least one row");
  e_.assign(k_ * k_, Int(0));
  for (std::size_t i = 0; i < k_; ++i) {
    if (rows[i].size() != k_)
      fail(errc::length_mismatch, "constraint matrix row " + std::to_string(i + 1) + " has wrong length");
    for (std::size_t j = 0; j < k_; ++j) {
      if (j <= i && rows[i][j] != 0)
        fail(errc::usage, "constraint matrix entry (" + std::to_string(i + 1) + "," +
                              std::to_string(j + 1) + ") must be zero below or on the diagonal");
      e_[i * k_ + j] = rows[i][j];
    }
  }
}

const Int& ConstraintMatrix::at(std::size_t i, std::size_t j) const {
  return e_[(i - 1) * k_ + (j - 1)];
}

UnitMatrix::UnitMatrix(std::size_t k, std::vector<Int> entries) : k_(k), e_(std::move(entries)) {
  compute_sums();
}

UnitMatrix::UnitMatrix(std::vector<std::vector<Int>> rows) : k_(rows.size()) {
  if (k_ == 0) fail(errc::usage, "unit matrix must have at least one row");
  e_.assign(k_ * k_, Int(0));
  for (std::size_t i = 0; i < k_; ++i) {
    if (rows[i].size() != k_)
      fail(errc::length_mismatch, "unit matrix row " + std::to_string(i + 1) + " has wrong length");
    for (std::size_t j = 0; j < k_; ++j) {
      if (j < i && rows[i][j] != 0)
        fail(errc::usage, "unit matrix must be upper triangular");
      if (j == i && rows[i][j] != 1)
        fail(errc::usage, "unit matrix needs ones on the diagonal");
      e_[i * k_ + j] = rows[i][j];
    }
  }
  compute_sums();
}

void UnitMatrix::compute_sums() {
  colsum_.assign(k_, Int(0));
  oddsum_.assign(k_, Int(0));
  evensum_.assign(k_, Int(0));
  for (std::size_t i = 0; i < k_; ++i)
    for (std::size_t j = 0; j < k_; ++j) {
      const Int& v = e_[i * k_ + j];
      colsum_[j] += v;
      // parity of the 1-based row index
      if (i % 2 == 0)
        oddsum_[j] += v;
      else
        evensum_[j] += v;
    }
}

const Int& UnitMatrix::at(std::size_t i, std::size_t j) const {
  return e_[(i - 1) * k_ + (j - 1)];
}

bool UnitMatrix::operator==(const UnitMatrix& other) const {
  return k_ == other.k_ && e_ == other.e_;
}

UnitMatrix nilpotent_inverse(const ConstraintMatrix& a) {
  const std::size_t k = a.dim();
  // result = I; power = I; then k-1 rounds of power *= A, result += power.
  std::vector<Int> result(k * k, Int(0)), power(k * k, Int(0));
  for (std::size_t i = 0; i < k; ++i) result[i * k + i] = power[i * k + i] = 1;
  for (std::size_t round = 1; round < k; ++round) {
    std::vector<Int> next(k * k, Int(0));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t l = i; l < k; ++l) {   // power is upper triangular
        const Int& p = power[i * k + l];
        if (p == 0) continue;
        for (std::size_t j = l + 1; j <= k - 1; ++j) next[i * k + j] += p * a.at(l + 1, j + 1);
      }
    power.swap(next);
    bool all_zero = true;
    for (std::size_t t = 0; t < k * k; ++t) {
      if (power[t] != 0) {
        all_zero = false;
        result[t] += power[t];
      }
    }
    if (all_zero) break;
  }
  return UnitMatrix(k, std::move(result));
}

bool is_nonnegative(const UnitMatrix& b) {
  const std::size_t k = b.dim();
  for (std::size_t i = 1; i <= k; ++i)
    for (std::size_t j = i + 1; j <= k; ++j)
      if (b.at(i, j) < 0) return false;
  return true;
}

std::vector<Int> apply(const UnitMatrix& b, const std::vector<Int>& s) {
  const std::size_t k = b.dim();
  if (s.size() != k)
    fail(errc::length_mismatch, "vector of length " + std::to_string(s.size()) +
                                    " applied to a matrix of size " + std::to_string(k));
  std::vector<Int> out(k, Int(0));
  for (std::size_t i = 1; i <= k; ++i)
    for (std::size_t j = i; j <= k; ++j)
      if (b.at(i, j) != 0) out[i - 1] += b.at(i, j) * s[j - 1];
  return out;
}

}  // namespace gfkit
