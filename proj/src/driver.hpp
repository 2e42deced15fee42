#pragma once

// Subcommand semantics shared by the command-line tool and the C API: each
// run_* function turns a parsed document plus options into printable output
// and an exit code, so both front ends behave identically.

#include <optional>
#include <string>
#include <vector>

#include "dsl.hpp"
#include "series.hpp"

namespace gfkit {

struct DriverOptions {
  long trunc = 25;    // oracle / expansion bound
  bool json = false;  // machine-readable output
  bool guard = true;  // empirical first-constraint check for ratio chains
};

// Closed form of the system's weight generating function.
ProductForm univariate_form(const SystemDocument& doc, bool use_guard = true);

// Closed form tracking (odd-position weight, even-position weight); only
// defined for undecorated matrix systems, plain chains, and the variant
// families.
ProductForm bivariate_form(const SystemDocument& doc);

// The factor exponent sequence reported as "b": column sums for matrix
// systems, the univariate factor exponents otherwise.
std::vector<Int> exponent_sequence(const SystemDocument& doc, bool use_guard = true);

struct RunResult {
  int exit_code = 0;  // 0 ok; 2 verification mismatch (errors are thrown)
  std::string out;    // payload without trailing newline
};

RunResult run_gf(const SystemDocument& doc, const DriverOptions& opt, bool two_variable);
RunResult run_verify(const SystemDocument& doc, const DriverOptions& opt,
                     const std::optional<ProductForm>& form_override = std::nullopt);
RunResult run_expand(const SystemDocument& doc, const DriverOptions& opt);
RunResult run_infer(const SystemDocument& doc, const DriverOptions& opt);
RunResult run_theta(const SystemDocument& doc, const std::vector<Int>& v, bool inverse_dir,
                    const DriverOptions& opt);
RunResult run_inverse(const std::vector<Int>& seq, const DriverOptions& opt);

}  // namespace gfkit
