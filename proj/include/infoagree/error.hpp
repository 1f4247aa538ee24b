#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace infoagree {

enum class ErrorKind {
  NotSquare,
  DimensionTooSmall,
  NegativeCell,
  AllZero,
  Overflow,
  ZeroProbability,
  NonPositiveWeight,
  InconsistentTotal,
  InconsistentMarginal,
  ContainsZero,
  NonPositiveEpsilon,
  EmptySweep,
  InvalidArgument,
  ParseError,
  Io,
  Internal,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so
/// callers (the CLI in particular) can map it onto an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace infoagree
