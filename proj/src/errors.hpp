#pragma once

#include <stdexcept>
#include <string>

namespace gfkit {

// One code per distinct failure contract. The C API maps these 1:1 onto its
// status enum, so keep the list append-only.
enum class errc {
  usage,                  // malformed call (bad lengths, bad flags)
  syntax_error,           // system text does not lex/parse
  semantic_error,         // parses but violates a structural rule
  composition_condition,  // inverse has a negative entry / family not compositions
  degenerate_factor,      // a factor exponent would be < 1
  not_in_family,          // vector fails the constraints it was claimed to meet
  not_multiple,           // weight vector not componentwise divisible
  parameter_violation,    // numeric parameter outside the stated range
  nonpositive_ratio,      // ratio/chain data must be positive
  precondition,           // documented operation precondition failed
  infeasible_sequence,    // no matrix realizes the requested column sums
  too_many,               // enumeration would exceed the safety cap
  length_mismatch,        // vector length disagrees with the system size
  unsupported,            // operation not defined for this system kind
};

const char* errc_name(errc c);

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace gfkit
