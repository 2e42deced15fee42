#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "errors.hpp"
#include "gfengine.hpp"
#include "oracle.hpp"
#include "series.hpp"

using namespace gfkit;

namespace {

ConstraintMatrix mat(std::vector<std::vector<long>> rows) {
  std::vector<std::vector<Int>> out;
  for (auto& r : rows) out.emplace_back(r.begin(), r.end());
  return ConstraintMatrix(std::move(out));
}

std::vector<Int> ints(std::vector<long> v) { return std::vector<Int>(v.begin(), v.end()); }

ProductForm plain_product(std::vector<long> exps) {
  std::vector<Factor> f;
  for (long e : exps) f.push_back(Factor{Int(e), Int(0)});
  return ProductForm(Polynomial::one(), std::move(f));
}

std::vector<long> exponents_of(const ProductForm& f) {
  std::vector<long> out;
  for (const Factor& fac : f.factors()) out.push_back(fac.o.get_si());
  return out;
}

std::vector<std::pair<long, long>> pairs_of(const ProductForm& f) {
  std::vector<std::pair<long, long>> out;
  for (const Factor& fac : f.factors()) out.emplace_back(fac.o.get_si(), fac.e.get_si());
  return out;
}

Polynomial poly_from_exponents(const std::vector<long>& exps) {
  Polynomial p;
  for (long e : exps) p.add_term(e, 0, 1);
  return p;
}

const ConstraintMatrix kFour = mat({{0, 2, -1, 0}, {0, 0, 2, -1}, {0, 0, 0, 2}, {0, 0, 0, 0}});

}  // namespace

TEST_CASE("integer closed form of the mixed-sign system") {
  ProductForm f = gf_integer(kFour, EqualitySpec::none(4));
  CHECK(f == plain_product({1, 3, 6, 10}));
  CHECK(verify(f, IntegerMatrixSystem{kFour, EqualitySpec::none(4)}, 25).pass);
}

TEST_CASE("geometric superdiagonal closed form") {
  ConstraintMatrix a = mat({{0, 2, 0}, {0, 0, 2}, {0, 0, 0}});
  CHECK(gf_integer(a, EqualitySpec::none(3)) == plain_product({1, 3, 7}));
}

TEST_CASE("equality rows drop factors, offsets move the numerator") {
  ConstraintMatrix a = mat({{0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 0, 1}, {0, 0, 0, 0}});
  EqualitySpec spec{{1, 3}, ints({1, 0, 1, 0})};
  ProductForm f = gf_integer(a, spec);
  CHECK(f.numerator() == Polynomial::monomial(2, 0));
  CHECK(exponents_of(f) == std::vector<long>{2, 4});
  CHECK(verify(f, IntegerMatrixSystem{a, spec}, 20).pass);
}

TEST_CASE("two pinned leading rows leave a two-factor product") {
  ConstraintMatrix a =
      mat({{0, 1, 1, 1}, {0, 0, 1, 1}, {0, 0, 0, 1}, {0, 0, 0, 0}});
  EqualitySpec spec{{1, 2}, ints({0, 0, 0, 0})};
  ProductForm f = gf_integer(a, spec);
  CHECK(f == plain_product({4, 8}));
  CHECK(verify(f, IntegerMatrixSystem{a, spec}, 25).pass);
}

TEST_CASE("a negative inverse entry rejects the family") {
  ConstraintMatrix a = mat({{0, -1}, {0, 0}});
  CHECK_THROWS_AS(gf_integer(a, EqualitySpec::none(2)), error);
  try {
    gf_integer(a, EqualitySpec::none(2));
  } catch (const error& e) {
    CHECK(e.code() == errc::composition_condition);
  }
}

TEST_CASE("theta maps slack to factor multiples") {
  ConstraintMatrix a = mat({{0, 2}, {0, 0}});
  CHECK(theta_map(a, ints({5, 2})) == ints({1, 6}));
  CHECK(theta_inverse(a, ints({1, 6})) == ints({5, 2}));

  CHECK(theta_map(kFour, ints({4, 3, 2, 1})) == ints({0, 0, 0, 10}));
  CHECK(theta_inverse(kFour, ints({0, 0, 0, 10})) == ints({4, 3, 2, 1}));

  CHECK_THROWS_AS(theta_map(a, ints({1, 2})), error);       // not in the family
  CHECK_THROWS_AS(theta_inverse(a, ints({1, 5})), error);   // 5 not a multiple of 3
  CHECK_THROWS_AS(theta_map(a, ints({1})), error);          // wrong length
}

TEST_CASE("theta is a weight-preserving bijection on random families") {
  std::mt19937 rng(334214459u);
  std::uniform_int_distribution<long> entry(-2, 2);
  std::uniform_int_distribution<std::size_t> dim(1, 4);
  int kept = 0;
  while (kept < 25) {
    const std::size_t k = dim(rng);
    std::vector<std::vector<Int>> rows(k, std::vector<Int>(k, Int(0)));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j) rows[i][j] = entry(rng);
    ConstraintMatrix a(rows);
    if (!is_nonnegative(nilpotent_inverse(a))) continue;
    ++kept;
    for_each_member(IntegerMatrixSystem{a, EqualitySpec::none(k)}, 10,
                    [&](const std::vector<Int>& lam) {
                      std::vector<Int> image = theta_map(a, lam);
                      Int wl = 0, wi = 0;
                      for (const Int& v : lam) wl += v;
                      for (const Int& v : image) wi += v;
                      CHECK(wl == wi);
                      CHECK(theta_inverse(a, image) == lam);
                    });
  }
}

TEST_CASE("first-row family closed form") {
  ProductForm f = gf_first_row(ints({2, 2, 2}));
  CHECK(f == plain_product({1, 3, 6, 9}));
  CHECK(first_row_column_sums(ints({2, 2, 2})) == ints({1, 3, 6, 9}));

  // matches the integer engine on the matrix it implies
  ConstraintMatrix a =
      mat({{0, 2, 2, 2}, {0, 0, 1, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}});
  CHECK(gf_integer(a, EqualitySpec::none(4)) == f);

  // empty coefficient list: a single free part
  CHECK(gf_first_row({}) == plain_product({1}));

  // negative coefficients are fine while prefix sums stay nonnegative
  ProductForm g = gf_first_row(ints({2, -2, 1}));
  CHECK(g == plain_product({1, 3, 2, 4}));
  CHECK_THROWS_AS(gf_first_row(ints({1, -2})), error);
}

TEST_CASE("plain rational chain reproduces the staircase identity") {
  RationalSystem sys = RationalSystem::plain(ints({1, 3, 2, 3, 1}));
  ProductForm f = gf_rational(sys);
  CHECK(exponents_of(f) == std::vector<long>{1, 4, 6, 9, 10});
  CHECK(f.numerator() ==
        poly_from_exponents({0, 2, 3, 5, 7, 4, 7, 9, 10, 6, 8, 5, 8, 10, 11, 13, 15, 12}));
  // the whole thing collapses to partitions with at most five part sizes
  CHECK(expand_univariate(f, 20) == expand_univariate(plain_product({1, 2, 3, 4, 5}), 20));
  CHECK(verify(f, RationalChainSystem{sys.a, sys.c}, 20).pass);
}

TEST_CASE("weighted first row over a rational chain") {
  RationalSystem sys{ints({7, 3, 2, 1}), ints({2, 3, 1, 5})};
  ProductForm f = gf_rational(sys);
  CHECK(exponents_of(f) == std::vector<long>{1, 26, 30, 36});
  CHECK(f.numerator() == poly_from_exponents({0, 10, 20, 18, 28, 38}));
  CHECK(verify(f, RationalChainSystem{sys.a, sys.c}, 45).pass);
}

TEST_CASE("single-part chain") {
  ProductForm f = gf_rational(RationalSystem::plain(ints({1})));
  CHECK(f == plain_product({1}));
}

TEST_CASE("the chain guard rejects first rows that can go negative") {
  // ceil(lambda_2/2) - lambda_2 dips below zero at lambda_2 = 2, but the
  // factor exponents stay positive, so only the guard objects.
  RationalSystem sys{ints({1, 2}), ints({1, -1})};
  CHECK_THROWS_AS(gf_rational(sys), error);
  try {
    gf_rational(sys);
  } catch (const error& e) {
    CHECK(e.code() == errc::composition_condition);
  }
  RationalGuard off;
  off.enabled = false;
  CHECK_NOTHROW(gf_rational(sys, off));

  // A derived exponent below 1 is rejected even with the guard off.
  RationalSystem degenerate{ints({1, 1}), ints({-1, 0})};
  try {
    gf_rational(degenerate, off);
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code() == errc::degenerate_factor);
  }
}

TEST_CASE("chain entries must be positive") {
  CHECK_THROWS_AS(gf_rational(RationalSystem::plain(ints({1, 0}))), error);
  CHECK_THROWS_AS(gf_rational(RationalSystem{ints({1, 1}), ints({1})}), error);
}

TEST_CASE("alternating chain description") {
  AlternatingDescription d = gf_special_alternating(ints({1, 1, 2, 1, 2}));
  CHECK(d.b == ints({1, 2, 4, 5, 7}));
  REQUIRE(d.runs.size() == 2);
  CHECK(d.runs[0] == std::pair<Int, Int>{3, 3});
  CHECK(d.runs[1] == std::pair<Int, Int>{6, 6});
  CHECK(d.form.numerator() == poly_from_exponents({0, 3, 6, 9}));  // (1+q^3)(1+q^6)
  CHECK(verify(d.form, RationalChainSystem{ints({1, 1, 2, 1, 2}), ints({1, 0, 0, 0, 0})}, 25).pass);

  AlternatingDescription e = gf_special_alternating(ints({1, 2, 1, 3}));
  CHECK(e.b == ints({1, 3, 4, 7}));
  REQUIRE(e.runs.size() == 2);
  CHECK(e.runs[0] == std::pair<Int, Int>{2, 2});
  CHECK(e.runs[1] == std::pair<Int, Int>{5, 6});
  CHECK(e.form.numerator() == poly_from_exponents({0, 2, 5, 6, 7, 8}));  // (1+q^2)(1+q^5+q^6)
  CHECK(verify(e.form, RationalChainSystem{ints({1, 2, 1, 3}), ints({1, 0, 0, 0})}, 25).pass);

  CHECK_THROWS_AS(gf_special_alternating(ints({1, 2, 2})), error);  // consecutive entries > 1
  CHECK_THROWS_AS(gf_special_alternating(ints({3})), error);        // needs two parts
}

TEST_CASE("two-variable integer form") {
  CHECK(pairs_of(gf_two_variable(ConstraintMatrix(2))) ==
        std::vector<std::pair<long, long>>{{0, 1}, {1, 0}});

  ConstraintMatrix stairs4 =
      mat({{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}});
  CHECK(pairs_of(gf_two_variable(stairs4)) ==
        std::vector<std::pair<long, long>>{{1, 0}, {1, 1}, {2, 1}, {2, 2}});

  ConstraintMatrix all4 = mat({{0, 1, 1, 1}, {0, 0, 1, 1}, {0, 0, 0, 1}, {0, 0, 0, 0}});
  ProductForm f = gf_two_variable(all4);
  CHECK(pairs_of(f) == std::vector<std::pair<long, long>>{{1, 0}, {1, 1}, {3, 1}, {5, 3}});
  CHECK(verify(f, IntegerMatrixSystem{all4, EqualitySpec::none(4)}, 16).pass);

  CHECK_THROWS_AS(gf_two_variable(mat({{0, -1}, {0, 0}})), error);
}

TEST_CASE("diagonal specialization of the two-variable form is the weight form") {
  std::mt19937 rng(87178291u);
  std::uniform_int_distribution<long> entry(-2, 3);
  std::uniform_int_distribution<std::size_t> dim(1, 5);
  int kept = 0;
  while (kept < 40) {
    const std::size_t k = dim(rng);
    std::vector<std::vector<Int>> rows(k, std::vector<Int>(k, Int(0)));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j) rows[i][j] = entry(rng);
    ConstraintMatrix a(rows);
    if (!is_nonnegative(nilpotent_inverse(a))) continue;
    ++kept;
    CHECK(specialize_diagonal(gf_two_variable(a)) == gf_integer(a, EqualitySpec::none(k)));
  }
}

TEST_CASE("alternating-coefficient family factor exponents") {
  CHECK(pairs_of(gf_alpha_beta(1, -1, 6)) ==
        std::vector<std::pair<long, long>>{{1, 0}, {1, 1}, {3, 1}, {5, 3}, {11, 5}, {21, 11}});
  CHECK(pairs_of(gf_alpha_beta(1, 1, 5)) ==
        std::vector<std::pair<long, long>>{{1, 0}, {1, 1}, {1, 1}, {1, 1}, {1, 1}});
  CHECK(pairs_of(gf_alpha_beta(2, 2, 4)) ==
        std::vector<std::pair<long, long>>{{1, 0}, {2, 1}, {3, 2}, {4, 3}});
  CHECK_THROWS_AS(gf_alpha_beta(0, 0, 3), error);
  CHECK_THROWS_AS(gf_alpha_beta(1, 2, 3), error);
  CHECK_THROWS_AS(gf_alpha_beta(1, 1, 0), error);
}

TEST_CASE("prepending one constraint advances the family") {
  for (auto [alpha, beta] : std::vector<std::pair<long, long>>{{1, -1}, {1, 1}, {2, 2}, {3, 1}}) {
    for (std::size_t k = 1; k <= 5; ++k) {
      ProductForm g = gf_alpha_beta(alpha, beta, k);
      ProductForm stepped = gf_prepend_constraint(g, alpha, beta);
      std::vector<Factor> factors = stepped.factors();
      factors.push_back(Factor{1, 0});
      CHECK(ProductForm(stepped.numerator(), std::move(factors)) ==
            gf_alpha_beta(alpha, beta, k + 1));
    }
  }
}

TEST_CASE("the alternating-coefficient form counts its family") {
  for (auto [alpha, beta] : std::vector<std::pair<long, long>>{{1, -1}, {2, 0}, {2, 2}}) {
    ProductForm f = gf_alpha_beta(alpha, beta, 4);
    CHECK(verify(f, AlphaBetaSystem{alpha, beta, 4}, 14).pass);
  }
}

TEST_CASE("scaled staircase closed forms") {
  CHECK(exponents_of(gf_lecture_hall_variant(4, 1, 1)) == std::vector<long>{1, 3, 5, 7});
  CHECK(exponents_of(gf_lecture_hall_variant(3, 1, 2)) == std::vector<long>{1, 4, 7});
  CHECK(exponents_of(gf_lecture_hall_variant(4, 3, -1)) == std::vector<long>{1, 5, 7, 9});
  CHECK(exponents_of(gf_lecture_hall_variant(1, 2, 0)) == std::vector<long>{1});
  CHECK_THROWS_AS(gf_lecture_hall_variant(3, 0, 1), error);
  CHECK_THROWS_AS(gf_lecture_hall_variant(3, 1, 0), error);

  CHECK(verify(gf_lecture_hall_variant(3, 1, 2), LectureHallVariantSystem{3, 1, 2}, 25).pass);
}

TEST_CASE("scaled staircase two-variable refinement specializes to the weight form") {
  CHECK(pairs_of(gf_lecture_hall_two_variable(4, 1, 1)) ==
        std::vector<std::pair<long, long>>{{1, 0}, {2, 1}, {3, 2}, {4, 3}});
  for (auto [l, j] : std::vector<std::pair<long, long>>{{1, 1}, {3, -1}, {1, 2}, {2, 0}}) {
    for (std::size_t k = 1; k <= 4; ++k) {
      CHECK(specialize_diagonal(gf_lecture_hall_two_variable(k, l, j)) ==
            gf_lecture_hall_variant(k, l, j));
    }
  }
}

TEST_CASE("two-variable plain chain") {
  ProductForm f = gf_two_variable_rational(ints({1, 1}));
  CHECK(pairs_of(f) == std::vector<std::pair<long, long>>{{1, 0}, {1, 1}});
  CHECK(f.numerator() == Polynomial::one());

  // matches the integer two-variable form on the all-ones chain
  ConstraintMatrix stairs3 = mat({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}});
  CHECK(gf_two_variable_rational(ints({1, 1, 1})) == gf_two_variable(stairs3));

  ProductForm g = gf_two_variable_rational(ints({2, 1}));
  CHECK(pairs_of(g) == std::vector<std::pair<long, long>>{{1, 0}, {2, 1}});
  CHECK(verify(g, RationalChainSystem{ints({2, 1}), ints({1, 0})}, 14).pass);

  ProductForm h = gf_two_variable_rational(ints({1, 2}));
  CHECK(pairs_of(h) == std::vector<std::pair<long, long>>{{1, 0}, {1, 2}});
  Polynomial want_num = Polynomial::one() + Polynomial::monomial(1, 1);
  CHECK(h.numerator() == want_num);
  CHECK(verify(h, RationalChainSystem{ints({1, 2}), ints({1, 0})}, 14).pass);

  CHECK_THROWS_AS(gf_two_variable_rational(ints({1, 0})), error);
}
