#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace expasym {

/// Failure categories surfaced by the library. The CLI prints the name of
/// the category together with the module that raised it.
enum class ErrorKind {
  DenominatorZero,
  ZeroMoment,
  OrderTooLarge,
  InvalidFamily,
  NotPureExponentialIndex,
  DerivativeCapExceeded,
  DerivativeOrderExceedsDegree,
  GrowthBoundViolated,
  QuadratureNotConverged,
  OutOfDomain,
  PhiVanishes,
  AllResidualsZero,
  GridNotDyadic,
  NotExact,
  NoEvaluator,
  InvalidArgument,
  ParseError,
};

std::string_view error_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string_view module, const std::string& what)
      : std::runtime_error(what), kind_(kind), module_(module) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view module() const noexcept { return module_; }
  std::string_view name() const noexcept { return error_name(kind_); }

 private:
  ErrorKind kind_;
  std::string_view module_;
};

}  // namespace expasym
