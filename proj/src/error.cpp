#include "biproj/error.hpp"

namespace biproj {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidInput: return "InvalidInput";
    case Errc::NotPrime: return "NotPrime";
    case Errc::InexactField: return "InexactField";
    case Errc::PrimeFieldEigen: return "PrimeFieldEigen";
    case Errc::SingularMatrix: return "SingularMatrix";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::NotBihomogeneous: return "NotBihomogeneous";
    case Errc::ZeroPoint: return "ZeroPoint";
    case Errc::DegreeMismatch: return "DegreeMismatch";
    case Errc::DegreeTooLarge: return "DegreeTooLarge";
    case Errc::SingularBar: return "SingularBar";
    case Errc::CommutationFailure: return "CommutationFailure";
    case Errc::BasisMismatch: return "BasisMismatch";
    case Errc::NotFoundBelowCap: return "NotFoundBelowCap";
    case Errc::ClusterAmbiguity: return "ClusterAmbiguity";
    case Errc::CoordinateChangeFailed: return "CoordinateChangeFailed";
    case Errc::NotAdmissible: return "NotAdmissible";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

}  // namespace biproj
