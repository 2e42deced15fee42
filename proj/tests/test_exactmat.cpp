#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "errors.hpp"
#include "exactmat.hpp"

using namespace gfkit;

namespace {

ConstraintMatrix mat(std::vector<std::vector<long>> rows) {
  std::vector<std::vector<Int>> out;
  for (auto& r : rows) out.emplace_back(r.begin(), r.end());
  return ConstraintMatrix(std::move(out));
}

std::vector<Int> ints(std::vector<long> v) { return std::vector<Int>(v.begin(), v.end()); }

}  // namespace

TEST_CASE("zero matrix has the identity as inverse") {
  ConstraintMatrix a(3);
  CHECK(a.dim() == 3);
  for (std::size_t i = 1; i <= 3; ++i)
    for (std::size_t j = 1; j <= 3; ++j) CHECK(a.at(i, j) == 0);
  UnitMatrix b = nilpotent_inverse(a);
  CHECK(b.column_sums() == ints({1, 1, 1}));
  CHECK(is_nonnegative(b));
}

TEST_CASE("mixed-sign four-part system inverts to the j-i+1 pattern") {
  // rows: L1 >= 2 L2 - L3, L2 >= 2 L3 - L4, L3 >= 2 L4
  ConstraintMatrix a = mat({{0, 2, -1, 0}, {0, 0, 2, -1}, {0, 0, 0, 2}, {0, 0, 0, 0}});
  UnitMatrix b = nilpotent_inverse(a);
  for (std::size_t i = 1; i <= 4; ++i)
    for (std::size_t j = i; j <= 4; ++j) CHECK(b.at(i, j) == Int(static_cast<long>(j - i + 1)));
  CHECK(b.column_sums() == ints({1, 3, 6, 10}));
  CHECK(b.odd_sums() == ints({1, 2, 4, 6}));
  CHECK(b.even_sums() == ints({0, 1, 2, 4}));
}

TEST_CASE("geometric superdiagonal inverse") {
  // L_i >= 2 L_{i+1} gives B[i][j] = 2^(j-i)
  ConstraintMatrix a = mat({{0, 2, 0}, {0, 0, 2}, {0, 0, 0}});
  UnitMatrix b = nilpotent_inverse(a);
  CHECK(b.at(1, 3) == 4);
  CHECK(b.column_sums() == ints({1, 3, 7}));
}

TEST_CASE("a negative inverse entry is reported by is_nonnegative") {
  ConstraintMatrix a = mat({{0, -1}, {0, 0}});
  UnitMatrix b = nilpotent_inverse(a);
  CHECK(b.at(1, 2) == -1);
  CHECK(!is_nonnegative(b));
}

TEST_CASE("apply multiplies by the unit matrix") {
  ConstraintMatrix a = mat({{0, 2, -1, 0}, {0, 0, 2, -1}, {0, 0, 0, 2}, {0, 0, 0, 0}});
  UnitMatrix b = nilpotent_inverse(a);
  CHECK(gfkit::apply(b, ints({1, 0, 0, 0})) == ints({1, 0, 0, 0}));
  CHECK(gfkit::apply(b, ints({0, 0, 0, 1})) == ints({4, 3, 2, 1}));
  CHECK_THROWS_AS(gfkit::apply(b, ints({1, 2})), error);
}

TEST_CASE("constructor contracts") {
  CHECK_THROWS_AS(ConstraintMatrix(0), error);
  // ragged rows
  CHECK_THROWS_AS(mat({{0, 1}, {0}}), error);
  // entry on or below the diagonal
  CHECK_THROWS_AS(mat({{1, 0}, {0, 0}}), error);
  CHECK_THROWS_AS(mat({{0, 0}, {1, 0}}), error);
  try {
    mat({{0, 0}, {1, 0}});
  } catch (const error& e) {
    CHECK(e.code() == errc::usage);
  }
}

TEST_CASE("random systems: inverse, parity sums and column action agree") {
  std::mt19937 rng(961748927u);
  std::uniform_int_distribution<long> entry(-3, 3);
  std::uniform_int_distribution<std::size_t> dim(1, 6);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t k = dim(rng);
    std::vector<std::vector<Int>> rows(k, std::vector<Int>(k, Int(0)));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j) rows[i][j] = entry(rng);
    ConstraintMatrix a(rows);
    UnitMatrix b = nilpotent_inverse(a);

    // (I - A) * B = I, checked entry by entry
    for (std::size_t i = 1; i <= k; ++i) {
      for (std::size_t j = 1; j <= k; ++j) {
        Int s = b.at(i, j);
        for (std::size_t l = i + 1; l <= j; ++l) s -= a.at(i, l) * b.at(l, j);
        CHECK(s == (i == j ? 1 : 0));
      }
    }

    // the first column sum is always 1; parities partition each column sum
    CHECK(b.column_sums()[0] == 1);
    for (std::size_t j = 0; j < k; ++j)
      CHECK(b.odd_sums()[j] + b.even_sums()[j] == b.column_sums()[j]);

    // applying a standard basis vector reads off a column
    for (std::size_t j = 1; j <= k; ++j) {
      std::vector<Int> e(k, Int(0));
      e[j - 1] = 1;
      std::vector<Int> col = gfkit::apply(b, e);
      for (std::size_t i = 1; i <= k; ++i) CHECK(col[i - 1] == b.at(i, j));
    }
  }
}
