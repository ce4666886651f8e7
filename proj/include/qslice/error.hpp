#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qslice {

/// Precondition and domain failures raised by the library.
enum class ErrorCode {
  PointOutsideDomain,
  DomainMismatch,
  BasisDegenerate,
  EmptySet,
  DimensionMismatch,
  NotSymplectic,
  NotPositive,
  NotSelfAdjoint,
  InvalidJ,
  BasisNotOrthonormal,
  EigensolverFailure,
  Overflow,
  InsideSpectrumBound,
  NotNormal,
  DiagonalizationFailure,
  SymmetryViolation,
  NotIntrinsic,
  WrongSliceClass,
  NotCircular,
  SpectrumOutsideDomain,
  RadiusTooSmall,
  SingularDelta,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace qslice
