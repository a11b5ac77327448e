#pragma once

#include <stdexcept>
#include <string>

namespace gz {

// Failure taxonomy shared by every module. Each value carries a stable
// machine-readable tag that the CLI prints on stderr and maps to an exit code.
enum class ErrorCode {
  NonSymmetric,          // matrix fails the Hermitian / skew-symmetric invariant
  ShapeMismatch,         // sizes of coupled data disagree
  UnsupportedPair,       // branching requested for a pair outside the U/SO chains
  NotInterlacing,        // pattern rows violate the interlacing inequalities
  NegativeRadicand,      // bordered reconstruction handed inconsistent data
  NotRegular,            // operation requires a strict pattern
  UnsupportedGroup,      // operation not defined for this group tag
  DegenerateLevel,       // flow requested at a non-simple eigenvalue
  DimMismatch,           // inequality-system dimension disagrees with the point
  Unbounded,             // vertex enumeration on an unbounded system
  DimTooLarge,           // vertex enumeration beyond the supported dimension
  InvalidTriangulation,  // chord list is not a triangulation of the n-gon
  EmptyModuli,           // rejection sampling exhausted its draw budget
  DegenerateDiagonal,    // bending axis vanishes
  BadInput,              // malformed file, flag, or schema
};

const char* error_tag(ErrorCode code);

struct Error : std::runtime_error {
  Error(ErrorCode c, const std::string& what) : std::runtime_error(what), code(c) {}
  ErrorCode code;
};

[[noreturn]] inline void fail(ErrorCode c, const std::string& what) { throw Error(c, what); }

}  // namespace gz
