#pragma once

#include <stdexcept>
#include <string>

namespace umbrella {

enum class ErrorKind {
  kNotSublattice,
  kNonFreeQuotient,
  kNotContained,
  kNotAFacet,
  kNotAFace,
  kChartMissesY,
  kBudgetExceeded,
  kInternalConsistency,
  kValidation,
};

const char* to_string(ErrorKind kind);

/// Base class for every error raised by the library. `kind()` lets callers
/// (notably the CLI) map failures onto exit codes without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Input rejected by validation. `reason()` is a short machine-readable tag
/// such as "not-pointed" or "weight-required".
class ValidationError : public Error {
 public:
  ValidationError(std::string reason, const std::string& what)
      : Error(ErrorKind::kValidation, what), reason_(std::move(reason)) {}

  const std::string& reason() const noexcept { return reason_; }

 private:
  std::string reason_;
};

}  // namespace umbrella
