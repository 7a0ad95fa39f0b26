#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sascone {

enum class ErrorKind {
  InvalidArgument,
  NotCoprime,
  SmoothnessViolation,
  Overflow,
  BaseMismatch,
  NonMonotoneBase,
  OddTotal,
  NotFano,
  ProductCase,
  NonpositiveVolume,
  BracketFailure,
  BoxViolation,
  Mismatch,
};

std::string_view to_string(ErrorKind kind);

// Process exit status associated with an error kind:
// 2 validation, 3 mathematical precondition, 4 golden mismatch.
int exit_code(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace sascone
