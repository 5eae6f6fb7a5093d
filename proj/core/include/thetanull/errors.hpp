#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace thetanull {

enum class ErrorKind {
  // input validation
  NotSymmetric,
  NotPositiveDefinite,
  NotSymplectic,
  GenusMismatch,
  BadCharacteristic,
  BadOrder,
  ToleranceBelowCertificate,
  NotOnTheta0,
  // numerical failures
  SingularCocycle,
  TargetUnreachable,
  NoConvergence,
  LeftSiegelSpace,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// True for failures caused by the numerics rather than by malformed input.
constexpr bool is_numerical(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::SingularCocycle:
    case ErrorKind::TargetUnreachable:
    case ErrorKind::NoConvergence:
    case ErrorKind::LeftSiegelSpace:
      return true;
    default:
      return false;
  }
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace thetanull
