#include "gfengine.hpp"

#include <algorithm>

#include "errors.hpp"

namespace gfkit {

RationalSystem RationalSystem::plain(std::vector<Int> a) {
  std::vector<Int> c(a.size(), Int(0));
  if (!c.empty()) c[0] = 1;
  return RationalSystem{std::move(a), std::move(c)};
}

ProductForm gf_integer(const ConstraintMatrix& a, const EqualitySpec& spec) {
  const std::size_t k = a.dim();
  validate_spec(spec, k);
  UnitMatrix b = nilpotent_inverse(a);
  if (!is_nonnegative(b))
    fail(errc::composition_condition,
         "(I-A)^{-1} has a negative entry; the family is not a set of compositions");
  const std::vector<Int>& col = b.column_sums();

  Int shift = 0;
  for (std::size_t i = 0; i < k; ++i) shift += spec.offsets[i] * col[i];

  std::vector<Factor> factors;
  for (std::size_t i = 1; i <= k; ++i) {
    if (spec.equalities.count(i)) continue;
    if (col[i - 1] < 1)
      fail(errc::degenerate_factor,
           "column sum b_" + std::to_string(i) + " = " + col[i - 1].get_str() + " is below 1");
    factors.push_back(Factor{col[i - 1], Int(0)});
  }
  return ProductForm(Polynomial::monomial(std::move(shift), 0), std::move(factors));
}

namespace {

// Slack vector s = (I - A) * lambda, i.e. s_i = lambda_i - sum_j A[i,j]*lambda_j.
std::vector<Int> slacks(const ConstraintMatrix& a, const std::vector<Int>& lambda) {
  const std::size_t k = a.dim();
  if (lambda.size() != k)
    fail(errc::length_mismatch, "vector of length " + std::to_string(lambda.size()) +
                                    " against a system with " + std::to_string(k) + " parts");
  std::vector<Int> s(lambda);
  for (std::size_t i = 1; i <= k; ++i)
    for (std::size_t j = i + 1; j <= k; ++j)
      if (a.at(i, j) != 0) s[i - 1] -= a.at(i, j) * lambda[j - 1];
  return s;
}

}  // namespace

std::vector<Int> theta_map(const ConstraintMatrix& a, const std::vector<Int>& lambda) {
  std::vector<Int> s = slacks(a, lambda);
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] < 0)
      fail(errc::not_in_family, "constraint " + std::to_string(i + 1) +
                                    " is violated (slack " + s[i].get_str() + ")");
  UnitMatrix b = nilpotent_inverse(a);
  for (std::size_t i = 0; i < s.size(); ++i) s[i] *= b.column_sums()[i];
  return s;
}

std::vector<Int> theta_inverse(const ConstraintMatrix& a, const std::vector<Int>& parts) {
  const std::size_t k = a.dim();
  if (parts.size() != k)
    fail(errc::length_mismatch, "vector of length " + std::to_string(parts.size()) +
                                    " against a system with " + std::to_string(k) + " parts");
  UnitMatrix b = nilpotent_inverse(a);
  if (!is_nonnegative(b))
    fail(errc::composition_condition,
         "(I-A)^{-1} has a negative entry; the correspondence is not defined");
  const std::vector<Int>& col = b.column_sums();
  std::vector<Int> s(k);
  for (std::size_t i = 0; i < k; ++i) {
    if (parts[i] < 0 || parts[i] % col[i] != 0)
      fail(errc::not_multiple, "component " + std::to_string(i + 1) + " = " + parts[i].get_str() +
                                   " is not a nonnegative multiple of " + col[i].get_str());
    s[i] = parts[i] / col[i];
  }
  return gfkit::apply(b, s);
}

std::vector<Int> first_row_column_sums(const std::vector<Int>& a) {
  // For the implied matrix (first row a, unit superdiagonal below), column
  // i+1 of the inverse sums to (i + prefix_i) + ... computed directly:
  // b_1 = 1 and b_{i+1} = i + a_1 + ... + a_i.
  std::vector<Int> b{Int(1)};
  Int prefix = 0;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    prefix += a[i - 1];
    if (prefix < 0)
      fail(errc::composition_condition, "prefix sum a_1+...+a_" + std::to_string(i) + " = " +
                                            prefix.get_str() + " is negative");
    b.push_back(Int(i) + prefix);
  }
  return b;
}

ProductForm gf_first_row(const std::vector<Int>& a) {
  std::vector<Int> b = first_row_column_sums(a);
  std::vector<Factor> factors;
  for (const Int& e : b) {
    if (e < 1) fail(errc::degenerate_factor, "exponent " + e.get_str() + " is below 1");
    factors.push_back(Factor{e, Int(0)});
  }
  return ProductForm(Polynomial::one(), std::move(factors));
}

namespace {

std::vector<Int> rational_column_sums(const RationalSystem& sys) {
  const std::size_t k = sys.parts();
  std::vector<Int> b{Int(1)};
  for (std::size_t i = 2; i <= k; ++i) {
    Int v = sys.c[0] * sys.a[0];
    for (std::size_t t = 2; t <= i; ++t) v += (sys.c[t - 1] + 1) * sys.a[t - 1];
    b.push_back(std::move(v));
  }
  return b;
}

void validate_rational(const RationalSystem& sys) {
  if (sys.a.empty()) fail(errc::parameter_violation, "need at least one part");
  if (sys.c.size() != sys.a.size())
    fail(errc::length_mismatch, "coefficient vector must have one entry per part");
  for (const Int& ai : sys.a)
    if (ai < 1)
      fail(errc::nonpositive_ratio, "chain entries must be positive, got " + ai.get_str());
}

// Empirical check that the first constraint can never force lambda_1 below
// zero: enumerate tails of the chain up to a weight bound and require every
// right-hand side to be nonnegative.
void run_rational_guard(const RationalSystem& sys, long bound) {
  const std::size_t k = sys.parts();
  if (k < 2) return;
  std::vector<Int> lam(k, Int(0));  // positions 2..k used
  std::function<void(std::size_t, long)> rec = [&](std::size_t i, long budget) {
    if (i == 1) {
      Int rhs = sys.c[0] * ceil_div(sys.a[0] * lam[1], sys.a[1]);
      for (std::size_t t = 2; t <= k; ++t) rhs += sys.c[t - 1] * lam[t - 1];
      if (rhs < 0)
        fail(errc::composition_condition,
             "first constraint allows lambda_1 = " + rhs.get_str() + " < 0 at tail (" +
                 join(std::vector<Int>(lam.begin() + 1, lam.end()), ",") + ")");
      return;
    }
    Int lo = 0;
    if (i < k) lo = ceil_div(sys.a[i - 1] * lam[i], sys.a[i]);
    if (lo > budget) return;
    for (long v = static_cast<long>(lo.get_si()); v <= budget; ++v) {
      lam[i - 1] = v;
      rec(i - 1, budget - v);
    }
    lam[i - 1] = 0;
  };
  rec(k, bound);
}

// The numerator of the chain closed form is indexed by tuples
// (z_2, ..., z_k), 0 <= z_i < a_i. `emit` receives each tuple's ceiling
// offsets: the first-row ceiling c_1*ceil(a_1 z_2 / a_2) and the chain step
// indicators ceil(z_{i+1}/a_{i+1} - z_i/a_i) in {0,1} for 2 <= i <= k-1.
template <typename Emit>
void for_each_z_tuple(const std::vector<Int>& a, const Emit& emit) {
  const std::size_t k = a.size();
  std::vector<Int> z(k + 1, Int(0));  // z[i] for 2 <= i <= k
  std::vector<int> steps(k + 1, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i > k) {
      Int first_ceil = k >= 2 ? ceil_div(a[0] * z[2], a[1]) : Int(0);
      for (std::size_t t = 2; t + 1 <= k; ++t) {
        // ceil(z_{t+1}/a_{t+1} - z_t/a_t) over the common denominator
        Int p = z[t + 1] * a[t - 1] - z[t] * a[t];
        Int step = ceil_div(p, a[t - 1] * a[t]);
        if (step < 0 || step > 1)
          fail(errc::precondition, "chain step indicator left {0,1}");  // unreachable by design
        steps[t] = static_cast<int>(step.get_si());
      }
      emit(z, first_ceil, steps);
      return;
    }
    for (Int v = 0; v < a[i - 1]; ++v) {
      z[i] = v;
      rec(i + 1);
    }
    z[i] = 0;
  };
  rec(2);
}

}  // namespace

ProductForm gf_rational(const RationalSystem& sys, const RationalGuard& guard) {
  validate_rational(sys);
  const std::size_t k = sys.parts();

  if (guard.enabled) {
    long bound = guard.weight_bound;
    if (bound <= 0) {
      Int mx = 0;
      for (const Int& ai : sys.a) mx = std::max(mx, ai);
      Int suggested = 2 * mx * Int(k);
      bound = fits_long(suggested) ? suggested.get_si() : 64;
    }
    run_rational_guard(sys, bound);
  }

  std::vector<Int> b = rational_column_sums(sys);
  for (std::size_t i = 0; i < b.size(); ++i)
    if (b[i] < 1)
      fail(errc::degenerate_factor,
           "derived exponent b_" + std::to_string(i + 1) + " = " + b[i].get_str() + " is below 1");

  Polynomial numerator;
  for_each_z_tuple(sys.a, [&](const std::vector<Int>& z, const Int& first_ceil,
                              const std::vector<int>& steps) {
    Int e = sys.c[0] * first_ceil;
    for (std::size_t t = 2; t <= k; ++t) e += (sys.c[t - 1] + 1) * z[t];
    for (std::size_t t = 2; t + 1 <= k; ++t)
      if (steps[t]) e += b[t - 1];
    if (e < 0) fail(errc::composition_condition, "numerator exponent " + e.get_str() + " is negative");
    numerator.add_term(std::move(e), 0, 1);
  });

  std::vector<Factor> factors;
  for (Int& e : b) factors.push_back(Factor{std::move(e), Int(0)});
  return ProductForm(std::move(numerator), std::move(factors));
}

AlternatingDescription gf_special_alternating(const std::vector<Int>& a) {
  const std::size_t k = a.size();
  if (k < 2) fail(errc::parameter_violation, "need at least two parts");
  for (std::size_t i = 0; i < k; ++i) {
    if (a[i] < 1) fail(errc::nonpositive_ratio, "chain entries must be positive");
    if (i + 1 < k && a[i] > 1 && a[i + 1] != 1)
      fail(errc::precondition, "entry " + std::to_string(i + 1) + " exceeds 1, so entry " +
                                   std::to_string(i + 2) + " must equal 1");
  }

  std::vector<Int> b{Int(1), a[0] + a[1]};
  for (std::size_t i = 2; i < k; ++i) b.push_back(b.back() + a[i]);

  // One run of consecutive numerator exponents per index with a_{i+1} > 1.
  // (A wide gap below b_2 caused by a_1 > 1 is a genuine hole, not a run.)
  Polynomial numerator = Polynomial::one();
  std::vector<std::pair<Int, Int>> runs;
  for (std::size_t i = 1; i < k; ++i) {
    if (a[i] <= 1) continue;
    Int lo = b[i - 1] + 1, hi = b[i] - 1;
    Polynomial run = Polynomial::one();
    for (Int e = lo; e <= hi; ++e) run.add_term(e, 0, 1);
    numerator = numerator * run;
    runs.emplace_back(std::move(lo), std::move(hi));
  }

  std::vector<Factor> factors;
  for (const Int& e : b) factors.push_back(Factor{e, Int(0)});
  return AlternatingDescription{std::move(b), std::move(runs),
                                ProductForm(std::move(numerator), std::move(factors))};
}

ProductForm gf_two_variable(const ConstraintMatrix& a) {
  UnitMatrix b = nilpotent_inverse(a);
  if (!is_nonnegative(b))
    fail(errc::composition_condition,
         "(I-A)^{-1} has a negative entry; the family is not a set of compositions");
  std::vector<Factor> factors;
  for (std::size_t i = 0; i < a.dim(); ++i)
    factors.push_back(Factor{b.odd_sums()[i], b.even_sums()[i]});
  return ProductForm(Polynomial::one(), std::move(factors));
}

ProductForm gf_alpha_beta(long alpha, long beta, std::size_t k) {
  if (k == 0) fail(errc::parameter_violation, "need at least one part");
  if (alpha < 1 || beta > alpha)
    fail(errc::parameter_violation, "need alpha >= 1 and beta <= alpha");
  std::vector<Int> o{Int(1)}, e{Int(0)};
  if (k >= 2) {
    o.push_back(Int(alpha));
    e.push_back(Int(1));
  }
  for (std::size_t i = 3; i <= k; ++i) {
    o.push_back(Int(alpha) * o[i - 2] + Int(1 - beta) * o[i - 3]);
    e.push_back(o[i - 2]);
  }
  std::vector<Factor> factors;
  for (std::size_t i = 0; i < k; ++i) factors.push_back(Factor{o[i], e[i]});
  return ProductForm(Polynomial::one(), std::move(factors));
}

ProductForm gf_prepend_constraint(const ProductForm& g, long alpha, long beta) {
  if (alpha < 1 || beta > alpha)
    fail(errc::parameter_violation, "need alpha >= 1 and beta <= alpha");
  // x -> x^alpha y, y -> x^{1-beta}. Division by x appears once beta > 1.
  std::array<std::array<long, 2>, 2> m{{{alpha, 1 - beta}, {1, 0}}};
  return substitute_monomial(g, m, beta > 1);
}

ProductForm gf_lecture_hall_variant(std::size_t k, long l, long j) {
  if (k == 0) fail(errc::parameter_violation, "need at least one part");
  if (l <= 0 || j < 2 - l)
    fail(errc::parameter_violation, "need l > 0 and j >= 2 - l");
  std::vector<Factor> factors{Factor{Int(1), Int(0)}};
  for (std::size_t i = 1; i < k; ++i)
    factors.push_back(Factor{Int(i) * l + Int(i) * j + l, Int(0)});
  return ProductForm(Polynomial::one(), std::move(factors));
}

ProductForm gf_lecture_hall_two_variable(std::size_t k, long l, long j) {
  if (k == 0) fail(errc::parameter_violation, "need at least one part");
  if (l <= 0 || j < 2 - l)
    fail(errc::parameter_violation, "need l > 0 and j >= 2 - l");
  std::vector<Factor> factors{Factor{Int(1), Int(0)}};
  for (std::size_t i = 1; i < k; ++i)
    factors.push_back(Factor{Int(l) * Int(i + 1) + Int(j - 1) * Int(i), Int(i)});
  return ProductForm(Polynomial::one(), std::move(factors));
}

ProductForm gf_two_variable_rational(const std::vector<Int>& a) {
  RationalSystem sys = RationalSystem::plain(a);
  validate_rational(sys);
  const std::size_t k = a.size();

  // Parity-split prefix sums: o_i collects odd-indexed entries up to i,
  // e_i the even-indexed ones; o_i + e_i recovers the univariate exponent.
  std::vector<Int> o(k), e(k);
  Int odd = 0, even = 0;
  for (std::size_t i = 1; i <= k; ++i) {
    if (i % 2 == 1)
      odd += a[i - 1];
    else
      even += a[i - 1];
    o[i - 1] = odd;
    e[i - 1] = even;
  }
  o[0] = 1;
  e[0] = 0;

  Polynomial numerator;
  for_each_z_tuple(a, [&](const std::vector<Int>& z, const Int& first_ceil,
                          const std::vector<int>& steps) {
    Int ex = first_ceil, ey = 0;
    for (std::size_t t = 2; t <= k; ++t) (t % 2 == 1 ? ex : ey) += z[t];
    for (std::size_t t = 2; t + 1 <= k; ++t)
      if (steps[t]) {
        ex += o[t - 1];
        ey += e[t - 1];
      }
    numerator.add_term(std::move(ex), std::move(ey), 1);
  });

  std::vector<Factor> factors;
  for (std::size_t i = 0; i < k; ++i) factors.push_back(Factor{o[i], e[i]});
  return ProductForm(std::move(numerator), std::move(factors));
}

}  // namespace gfkit
