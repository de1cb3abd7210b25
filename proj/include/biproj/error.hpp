#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace biproj {

enum class Errc {
  InvalidInput,
  NotPrime,
  InexactField,
  PrimeFieldEigen,
  SingularMatrix,
  SyntaxError,
  NotBihomogeneous,
  ZeroPoint,
  DegreeMismatch,
  DegreeTooLarge,
  SingularBar,
  CommutationFailure,
  BasisMismatch,
  NotFoundBelowCap,
  ClusterAmbiguity,
  CoordinateChangeFailed,
  NotAdmissible,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace biproj
