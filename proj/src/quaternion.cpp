#include "qslice/quaternion.hpp"

#include "qslice/complexified.hpp"
#include "qslice/error.hpp"

namespace qslice {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::PointOutsideDomain: return "point-outside-domain";
    case ErrorCode::DomainMismatch: return "domain-mismatch";
    case ErrorCode::BasisDegenerate: return "basis-degenerate";
    case ErrorCode::EmptySet: return "empty-set";
    case ErrorCode::DimensionMismatch: return "dimension-mismatch";
    case ErrorCode::NotSymplectic: return "not-symplectic";
    case ErrorCode::NotPositive: return "not-positive";
    case ErrorCode::NotSelfAdjoint: return "not-self-adjoint";
    case ErrorCode::InvalidJ: return "J-not-valid";
    case ErrorCode::BasisNotOrthonormal: return "basis-not-orthonormal";
    case ErrorCode::EigensolverFailure: return "eigensolver-failure";
    case ErrorCode::Overflow: return "overflow";
    case ErrorCode::InsideSpectrumBound: return "q-inside-spectrum-bound";
    case ErrorCode::NotNormal: return "not-normal";
    case ErrorCode::DiagonalizationFailure: return "diagonalization-failure";
    case ErrorCode::SymmetryViolation: return "symmetry-violation";
    case ErrorCode::NotIntrinsic: return "not-intrinsic";
    case ErrorCode::WrongSliceClass: return "wrong-slice-class";
    case ErrorCode::NotCircular: return "not-circular";
    case ErrorCode::SpectrumOutsideDomain: return "spectrum-outside-domain";
    case ErrorCode::RadiusTooSmall: return "radius-too-small";
    case ErrorCode::SingularDelta: return "singular-delta";
    case ErrorCode::InvalidArgument: return "invalid-argument";
  }
  return "unknown";
}

SpherePoint::SpherePoint(const Quaternion& q) {
  const double n = q.imag_norm();
  if (n <= kRealTolerance * std::fmax(1.0, q.norm())) {
    throw Error(ErrorCode::InvalidArgument, "sphere point needs a nonzero imaginary part");
  }
  q_ = q.imag() / n;
}

SphereDecomposition sphere_decompose(const Quaternion& q, double tol) {
  SphereDecomposition out;
  out.alpha = q.real();
  const double beta = q.imag_norm();
  if (beta <= tol * std::fmax(1.0, q.norm())) {
    out.beta = 0.0;
    return out;
  }
  out.beta = beta;
  out.iota = SpherePoint(q);
  return out;
}

Quaternion rotation_to(const SpherePoint& iota) {
  // The rotation r x conj(r) sending i to iota is about the axis i x iota,
  // by the angle between them; r = (1 + iota conj(i)) normalized works unless
  // iota = -i, where any unit orthogonal to i does.
  const Quaternion& t = iota.value();
  Quaternion r = Quaternion(1.0) + t * Quaternion::i().conj();
  if (r.norm() < 1e-8) {
    return Quaternion::j();
  }
  return r / r.norm();
}

double hc_norm(const ComplexifiedQuaternion& w) {
  const double cross = (w.p * w.q.conj()).imag_norm();
  return std::sqrt(w.q.norm2() + w.p.norm2() + 2.0 * cross);
}

double hc_slice_abs(const ComplexifiedQuaternion& w, const Quaternion& iota) { return (w.q + iota * w.p).norm(); }

}  // namespace qslice
