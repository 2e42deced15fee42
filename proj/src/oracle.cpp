#include "oracle.hpp"

#include <sstream>

#include "errors.hpp"

namespace gfkit {

void validate_spec(const EqualitySpec& spec, std::size_t k) {
  for (std::size_t i : spec.equalities)
    if (i < 1 || i > k)
      fail(errc::usage, "equality row " + std::to_string(i) + " outside 1.." + std::to_string(k));
  if (spec.offsets.size() != k)
    fail(errc::length_mismatch, "offset vector length " + std::to_string(spec.offsets.size()) +
                                    " does not match k=" + std::to_string(k));
  for (const Int& d : spec.offsets)
    if (d < 0) fail(errc::usage, "offsets must be nonnegative");
}

std::size_t system_parts(const ConstraintSystem& sys) {
  return std::visit(
      [](const auto& s) -> std::size_t {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, IntegerMatrixSystem>)
          return s.a.dim();
        else if constexpr (std::is_same_v<T, RationalChainSystem>)
          return s.a.size();
        else
          return s.k;
      },
      sys);
}

namespace {

using Visit = std::function<void(const std::vector<Int>&)>;

// All enumerators pick lambda_k first and walk down to lambda_1, so the lower
// bound for the current part depends only on parts already chosen and the
// remaining weight budget prunes each branch immediately.

void enumerate_integer(const IntegerMatrixSystem& sys, long n, const Visit& fn) {
  const std::size_t k = sys.a.dim();
  validate_spec(sys.spec, k);
  std::vector<Int> lam(k, Int(0));
  std::function<void(std::size_t, long)> rec = [&](std::size_t i, long budget) {
    if (i == 0) {
      fn(lam);
      return;
    }
    Int rhs = sys.spec.offsets[i - 1];
    for (std::size_t j = i + 1; j <= k; ++j) {
      const Int& aij = sys.a.at(i, j);
      if (aij != 0) rhs += aij * lam[j - 1];
    }
    if (sys.spec.equalities.count(i)) {
      if (rhs >= 0 && rhs <= budget) {
        lam[i - 1] = rhs;
        rec(i - 1, budget - static_cast<long>(rhs.get_si()));
        lam[i - 1] = 0;
      }
      return;
    }
    Int lo = rhs > 0 ? rhs : Int(0);
    if (lo > budget) return;
    for (long v = static_cast<long>(lo.get_si()); v <= budget; ++v) {
      lam[i - 1] = v;
      rec(i - 1, budget - v);
    }
    lam[i - 1] = 0;
  };
  rec(k, n);
}

void enumerate_rational(const std::vector<Int>& a, const std::vector<Int>& c, long n,
                        const Visit& fn) {
  const std::size_t k = a.size();
  if (c.size() != k) fail(errc::length_mismatch, "coefficient vector must have one entry per part");
  for (const Int& ai : a)
    if (ai < 1) fail(errc::nonpositive_ratio, "chain denominators must be positive");
  std::vector<Int> lam(k, Int(0));
  std::function<void(std::size_t, long)> rec = [&](std::size_t i, long budget) {
    if (i == 0) {
      fn(lam);
      return;
    }
    Int lo = 0;
    if (i == 1 && k >= 2) {
      Int rhs = c[0] * ceil_div(a[0] * lam[1], a[1]);
      for (std::size_t t = 2; t <= k; ++t) rhs += c[t - 1] * lam[t - 1];
      if (rhs > 0) lo = rhs;
    } else if (i >= 2 && i < k) {
      // lambda_i / a_i >= lambda_{i+1} / a_{i+1}
      lo = ceil_div(a[i - 1] * lam[i], a[i]);
    }
    if (lo > budget) return;
    for (long v = static_cast<long>(lo.get_si()); v <= budget; ++v) {
      lam[i - 1] = v;
      rec(i - 1, budget - v);
    }
    lam[i - 1] = 0;
  };
  rec(k, n);
}

void enumerate_lecture_hall_variant(const LectureHallVariantSystem& sys, long n, const Visit& fn) {
  const std::size_t k = sys.k;
  if (k == 0) fail(errc::parameter_violation, "need at least one part");
  std::vector<Int> lam(k, Int(0));
  std::function<void(std::size_t, long)> rec = [&](std::size_t i, long budget) {
    if (i == 0) {
      fn(lam);
      return;
    }
    Int lo = 0;
    if (i == 1 && k >= 2) {
      Int rhs = Int(sys.l) * ceil_div(Int(k) * lam[1], Int(k - 1));
      for (std::size_t t = 2; t <= k; t += 2) rhs += Int(sys.j - 1) * lam[t - 1];
      for (std::size_t t = 3; t <= k; t += 2) rhs += Int(sys.l - 1) * lam[t - 1];
      if (rhs > 0) lo = rhs;
    } else if (i >= 2 && i < k) {
      // lambda_i / (k-i+1) >= lambda_{i+1} / (k-i)
      lo = ceil_div(Int(k - i + 1) * lam[i], Int(k - i));
    }
    if (lo > budget) return;
    for (long v = static_cast<long>(lo.get_si()); v <= budget; ++v) {
      lam[i - 1] = v;
      rec(i - 1, budget - v);
    }
    lam[i - 1] = 0;
  };
  rec(k, n);
}

void enumerate_alpha_beta(const AlphaBetaSystem& sys, long n, const Visit& fn) {
  const std::size_t k = sys.k;
  if (k == 0) fail(errc::parameter_violation, "need at least one part");
  std::vector<Int> lam(k, Int(0));
  std::function<void(std::size_t, long)> rec = [&](std::size_t i, long budget) {
    if (i == 0) {
      fn(lam);
      return;
    }
    Int rhs = 0;
    for (std::size_t t = i + 1; t <= k; t += 2) rhs += Int(sys.alpha) * lam[t - 1];
    for (std::size_t t = i + 2; t <= k; t += 2) rhs -= Int(sys.beta) * lam[t - 1];
    Int lo = rhs > 0 ? rhs : Int(0);
    if (lo > budget) return;
    for (long v = static_cast<long>(lo.get_si()); v <= budget; ++v) {
      lam[i - 1] = v;
      rec(i - 1, budget - v);
    }
    lam[i - 1] = 0;
  };
  rec(k, n);
}

}  // namespace

void for_each_member(const ConstraintSystem& sys, long n, const Visit& fn) {
  if (n < 0) fail(errc::usage, "weight bound must be nonnegative");
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, IntegerMatrixSystem>)
          enumerate_integer(s, n, fn);
        else if constexpr (std::is_same_v<T, RationalChainSystem>)
          enumerate_rational(s.a, s.c, n, fn);
        else if constexpr (std::is_same_v<T, LectureHallVariantSystem>)
          enumerate_lecture_hall_variant(s, n, fn);
        else
          enumerate_alpha_beta(s, n, fn);
      },
      sys);
}

std::vector<Int> count_by_weight(const ConstraintSystem& sys, long n) {
  std::vector<Int> counts(static_cast<std::size_t>(n) + 1, Int(0));
  for_each_member(sys, n, [&](const std::vector<Int>& lam) {
    Int w = 0;
    for (const Int& v : lam) w += v;
    counts[w.get_ui()] += 1;
  });
  return counts;
}

TermMap count_bivariate(const ConstraintSystem& sys, long n) {
  TermMap counts;
  for_each_member(sys, n, [&](const std::vector<Int>& lam) {
    Int odd = 0, even = 0;
    for (std::size_t i = 0; i < lam.size(); ++i)
      (i % 2 == 0 ? odd : even) += lam[i];
    counts[ExpPair{std::move(odd), std::move(even)}] += 1;
  });
  return counts;
}

std::string VerifyReport::describe() const {
  if (pass) return "pass";
  std::ostringstream os;
  os << "mismatch at x^" << at.x.get_str();
  if (at.y != 0) os << " y^" << at.y.get_str();
  os << ": enumeration " << expected.get_str() << ", closed form " << actual.get_str();
  return os.str();
}

VerifyReport verify(const ProductForm& form, const ConstraintSystem& sys, long n) {
  VerifyReport rep;
  if (form.is_univariate()) {
    std::vector<Int> counts = count_by_weight(sys, n);
    std::vector<Int> coeffs = expand_univariate(form, n);
    for (long w = 0; w <= n; ++w) {
      if (counts[w] != coeffs[w]) {
        rep.pass = false;
        rep.at = ExpPair{Int(w), Int(0)};
        rep.expected = counts[w];
        rep.actual = coeffs[w];
        return rep;
      }
    }
    return rep;
  }
  TermMap counts = count_bivariate(sys, n);
  TruncatedSeries series = expand(form, n);
  // Walk the full graded triangle so zero-vs-nonzero disagreements surface.
  for (long t = 0; t <= n; ++t) {
    for (long dx = 0; dx <= t; ++dx) {
      ExpPair key{Int(dx), Int(t - dx)};
      Int want;
      if (auto it = counts.find(key); it != counts.end()) want = it->second;
      Int got = series.coeff(key.x, key.y);
      if (want != got) {
        rep.pass = false;
        rep.at = key;
        rep.expected = std::move(want);
        rep.actual = std::move(got);
        return rep;
      }
    }
  }
  return rep;
}

}  // namespace gfkit
