#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace valkit {

enum class ErrorKind {
  InvalidArgument,
  NotPrime,
  PrimeMismatch,
  FieldMismatch,
  GroupMismatch,
  RingMismatch,
  ArityMismatch,
  PrecisionLoss,
  DivisionByZero,
  NotHomogeneous,
  BecameZero,
  NotASimpleRoot,
  HypothesisFailed,
  ResidueObstruction,
  ValuationNotDivisible,
  NotAnNthPower,
  SingularResidueZero,
  DomainTooLarge,
  Unresolved,
  TooWide,
  ParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the toolkit carries a machine-readable kind so the
/// command-line front end can map it to an exit code without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, std::vector<std::string> expected,
             const std::string& message);

  std::size_t position() const noexcept { return position_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::vector<std::string> expected_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace valkit
