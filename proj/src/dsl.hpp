#pragma once

// Line-oriented text format for constraint systems (.gfk files).
//
//   matrix mode     k=<int> header, then constraint rows
//                     L<i> >= <term> ((+|-) <term>)*      term: <int>? L<j>, j > i
//                   and optional decorations
//                     equal: <i, ...>                     rows forced to equality
//                     offset: <d_1, ..., d_k>             additive offsets
//   rational mode   ratios: n1/d1 n2/d2 ...               the part-ratio chain
//                   first: c1 c2 ... ck                   optional first-row weights
//   variant modes   lhv: k l j        |      alphabeta: alpha beta k
//
// '#' starts a comment; blank lines are ignored; CRLF accepted.

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "bigint.hpp"
#include "exactmat.hpp"
#include "oracle.hpp"

namespace gfkit {

struct MatrixDoc {
  ConstraintMatrix a;
  EqualitySpec spec;
  bool operator==(const MatrixDoc&) const = default;
};

struct RatioDoc {
  std::vector<std::pair<Int, Int>> ratios;  // (n_i, d_i), kept verbatim
  std::optional<std::vector<Int>> first;    // present iff a first: line was given

  std::size_t parts() const { return ratios.size() + 1; }
  // The chain vector a: cross-multiplied ratio products, reduced by their gcd.
  std::vector<Int> chain() const;
  // The first-row coefficient vector c, defaulting to (1, 0, ..., 0).
  std::vector<Int> coefficients() const;

  bool operator==(const RatioDoc&) const = default;
};

struct LhvDoc {
  std::size_t k;
  long l, j;
  bool operator==(const LhvDoc&) const = default;
};

struct AlphaBetaDoc {
  long alpha, beta;
  std::size_t k;
  bool operator==(const AlphaBetaDoc&) const = default;
};

using SystemDocument = std::variant<MatrixDoc, RatioDoc, LhvDoc, AlphaBetaDoc>;

// Parse; throws errc::syntax_error / errc::semantic_error with a
// "line L, col C:" prefix on every diagnostic.
SystemDocument parse_system(const std::string& text);

// Canonical text; parse_system(render_system(doc)) == doc.
std::string render_system(const SystemDocument& doc);

std::size_t document_parts(const SystemDocument& doc);

// The enumerator-facing view of the same system.
ConstraintSystem to_constraint_system(const SystemDocument& doc);

}  // namespace gfkit
