#include "thetanull/errors.hpp"

namespace thetanull {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorKind::NotSymplectic: return "NotSymplectic";
    case ErrorKind::GenusMismatch: return "GenusMismatch";
    case ErrorKind::BadCharacteristic: return "BadCharacteristic";
    case ErrorKind::BadOrder: return "BadOrder";
    case ErrorKind::ToleranceBelowCertificate: return "ToleranceBelowCertificate";
    case ErrorKind::NotOnTheta0: return "NotOnTheta0";
    case ErrorKind::SingularCocycle: return "SingularCocycle";
    case ErrorKind::TargetUnreachable: return "TargetUnreachable";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::LeftSiegelSpace: return "LeftSiegelSpace";
  }
  return "Unknown";
}

}  // namespace thetanull
