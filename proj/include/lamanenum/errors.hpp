#pragma once

#include <stdexcept>
#include <string>

namespace laman {

// Exit codes shared between the library and the CLI front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitParse = 2,
  kExitGenericity = 3,
  kExitConstraints = 4,
  kExitVerifyMismatch = 5,
};

struct EnumError : std::runtime_error {
  EnumError(int code, const std::string& what) : std::runtime_error(what), exit_code(code) {}
  int exit_code;
};

struct ParseError : EnumError {
  explicit ParseError(const std::string& what) : EnumError(kExitParse, what) {}
};

// Point set violates the generic-position requirement (collinear triple,
// coincident points).
struct GenericityError : EnumError {
  explicit GenericityError(const std::string& what) : EnumError(kExitGenericity, what) {}
};

// Constraint set F is unusable: out of range, crossing, or dependent in the
// rigidity matroid.
struct ConstraintError : EnumError {
  explicit ConstraintError(const std::string& what) : EnumError(kExitConstraints, what) {}
};

}  // namespace laman
