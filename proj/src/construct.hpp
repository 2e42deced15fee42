#pragma once

// Inverse problem: given a target exponent sequence b, recover constraint
// matrices whose unit inverse has those column sums.

#include <cstddef>
#include <vector>

#include "bigint.hpp"
#include "exactmat.hpp"
#include "oracle.hpp"

namespace gfkit {

// A reconstructed system: the matrix together with the equality/offset
// decoration needed when the sequence does not start at 1.
struct ConstructedSystem {
  ConstraintMatrix a;
  EqualitySpec spec;
};

// Build one canonical matrix realizing the sequence c as factor exponents.
//  - c[0] == 1: superdiagonal-style matrix, plain inequality system.
//  - c[0] >  1: prepend a part pinned by an equality row; needs c[i] >= i+1.
// Throws errc::infeasible_sequence when no matrix exists.
ConstructedSystem matrix_from_sequence(const std::vector<Int>& c);

// Closed-form count prod_{i=2..k} binom(c_i - 1, i - 2) for strictly
// increasing c with c_1 = 1.  Reported alongside enumeration; the two
// disagree for some inputs, so enumeration is the ground truth.
Int count_matrices_formula(const std::vector<Int>& c);

// Enumerate every strictly-upper-triangular matrix A whose inverse column
// sums equal c (requires c[0] == 1).  Works by enumerating unit upper
// triangular B column by column and inverting.  Aborts with errc::too_many
// past the cap.
std::vector<ConstraintMatrix> enumerate_matrices(const std::vector<Int>& c,
                                                 std::size_t cap = 1000000);

}  // namespace gfkit
