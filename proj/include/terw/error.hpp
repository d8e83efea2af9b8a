#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace terw {

enum class ErrorKind {
  NonPrime,
  OrderTooSmall,
  DimensionMismatch,
  NotInvolution,
  IdentityAutomorphism,
  NonDiagonalAutomorphism,
  YNotFixed,
  BadG2Params,
  BadDicyclicY,
  GuardExceeded,
  MixedRootOrders,
  OrthogonalityFailure,
  AxiomFailure,
  NonIntegralMultiplicity,
  IdempotencyFailure,
  MultiplicityMismatch,
  ArithmeticOverflow,
  InvalidSpec,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Errors that mean "the input does not describe a valid group".
inline bool is_spec_error(ErrorKind k) noexcept {
  switch (k) {
    case ErrorKind::NonPrime:
    case ErrorKind::OrderTooSmall:
    case ErrorKind::DimensionMismatch:
    case ErrorKind::NotInvolution:
    case ErrorKind::IdentityAutomorphism:
    case ErrorKind::NonDiagonalAutomorphism:
    case ErrorKind::YNotFixed:
    case ErrorKind::BadG2Params:
    case ErrorKind::BadDicyclicY:
    case ErrorKind::InvalidSpec:
      return true;
    default:
      return false;
  }
}

}  // namespace terw
