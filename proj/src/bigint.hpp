#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace gfkit {

// All arithmetic in this library is exact. Column sums grow factorially for
// some inputs, so every quantity that can leave machine range is an Int.
using Int = mpz_class;

// floor(p/q) with the sign convention of mathematical floor division, q > 0.
inline Int floor_div(const Int& p, const Int& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  return r;
}

// ceil(p/q), q > 0. Exact; this is the only "division" the engine performs.
inline Int ceil_div(const Int& p, const Int& q) {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  return r;
}

// Binomial coefficient with the usual conventions: zero when r < 0 or r > n
// for nonnegative n. GMP extends to negative n; we only need small r.
inline Int binomial(const Int& n, unsigned long r) {
  Int out;
  mpz_bin_ui(out.get_mpz_t(), n.get_mpz_t(), r);
  return out;
}

inline bool fits_long(const Int& v) { return v.fits_slong_p(); }

inline std::string join(const std::vector<Int>& vals, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < vals.size(); ++i) {
    if (i) out += sep;
    out += vals[i].get_str();
  }
  return out;
}

}  // namespace gfkit
