#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hsurf {

enum class ErrorKind {
  ParseError,
  MixedDegree,
  UnknownVariable,
  BadPrime,
  FieldDisagreement,
  NoStabilization,
  DegreeBelowRange,
  DegreeTooSmall,
  ScanExhausted,
  NotEffective,
  UnsupportedDimension,
  NotSingular,
  DegeneratePoint,
  MixedParameters,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries a machine-readable kind so the
// CLI can map it onto exit codes and report reasons.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hsurf
