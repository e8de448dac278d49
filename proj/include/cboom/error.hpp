#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cboom {

enum class ErrorKind {
  CompositeModulus,
  ReducibleModulus,
  DivisionByZero,
  NotASquare,
  CtxMismatch,
  NotSquarefree,
  ZeroPolynomial,
  NotDivisible,
  CZero,
  AZero,
  NotAPermutation,
  BudgetExceeded,
  NoBound,
  DegenerateTriangle,
  NotZeroDimensional,
  FixtureMismatch,
  Parse,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every failure raised by the library carries a kind so callers (and the CLI)
// can map it to an exit code without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace cboom
