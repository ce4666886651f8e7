#pragma once

#include <complex>
#include <optional>
#include <utility>
#include <vector>

#include "qslice/qmatrix.hpp"
#include "qslice/slice_function.hpp"

namespace qslice {

/// J from the polar factor of T - T*, completed on Ker(T - T*) by an eigenbasis of A.
struct JConstruction {
  QMatrix j;
  /// Polar factors of T - T*.
  QMatrix w;
  QMatrix p;
  /// Orthonormal eigenvectors of A spanning Ker(T - T*); J z = z i on each.
  std::vector<QVector> kernel;
};

/// Throws Error(NotNormal) unless ||T T* - T* T|| <= 1e-10 ||T||^2.
JConstruction construct_j_detailed(const QMatrix& t);
QMatrix construct_J(const QMatrix& t);

/// The completion with the sign of J flipped on the first kernel vector; empty if Ker(T - T*) = 0.
std::optional<QMatrix> alternative_j(const JConstruction& jc);

struct CalculusContext {
  QMatrix t;
  QMatrix a;
  QMatrix b;
  QMatrix j;
  QMatrix k;
  QMatrix jk;
  Quaternion iota = Quaternion::i();
  Quaternion kappa = Quaternion::j();
  /// Orthonormal basis of H+ = {u : J u = u i}.
  PlusBasis plus;
  /// T restricted to H+ in the plus basis, T+ = U diag(lambda) U^H.
  ComplexMatrix t_plus;
  ComplexMatrix u;
  std::vector<std::complex<double>> lambda;
  /// Basis of H+ vectors z_m = Y U e_m; T z_m = z_m lambda_m.
  LeftMultiplication basis;

  /// L_q from the basis.
  QMatrix left(const Quaternion& q) const { return left_mult_from_basis(basis, q); }
  double norm_t = 0.0;
};

/// Throws Error(NotNormal) or Error(DiagonalizationFailure).
CalculusContext build_context(const QMatrix& t);

/// Uses the supplied J. Throws Error(InvalidJ) unless J is an anti-self-adjoint unitary
/// commuting with T and T = A + J B.
CalculusContext build_context_with_j(const QMatrix& t, const QMatrix& j);

struct RealMonomial {
  int dx = 0;
  int dy = 0;
  double coef = 0.0;
};

using RealPolynomial = std::vector<RealMonomial>;

/// Q1(A, B) + J Q2(A, B). Throws Error(SymmetryViolation) unless Q1 is even and Q2 odd in Y.
QMatrix polynomial_calculus(const CalculusContext& ctx, const RealPolynomial& q1, const RealPolynomial& q2);

/// Real (Q1, Q2) of an intrinsic polynomial stem. Throws Error(NotIntrinsic).
std::pair<RealPolynomial, RealPolynomial> real_polynomials(const StemFunction& stem);

/// Throws Error(SpectrumOutsideDomain) if some eigenvalue is outside the domain of f.
void require_spectrum_in_domain(const CalculusContext& ctx, const SliceFunction& f);

/// Throws Error(NotIntrinsic).
QMatrix intrinsic_calculus(const CalculusContext& ctx, const SliceFunction& f);
/// f0(T) + f1(T) J. Throws Error(WrongSliceClass) unless f takes values in C_iota.
QMatrix cslice_calculus(const CalculusContext& ctx, const SliceFunction& f);
/// f0(T) + f1(T) J + f2(T) K + f3(T) J K. Throws Error(NotCircular).
QMatrix circular_calculus(const CalculusContext& ctx, const SliceFunction& f);
QMatrix general_calculus(const CalculusContext& ctx, const SliceFunction& f);

/// U = L_kappa, with U T U* = T*.
QMatrix adjoint_similarity(const CalculusContext& ctx);

inline constexpr int kDefaultContourNodes = 256;
double default_contour_radius(const CalculusContext& ctx);

/// Trapezoid rule for (1/2pi) int S_L^-1(s, T) ds iota^-1 f(s) on |s| = radius in C_iota,
/// with S_L^-1(s, T) = -Delta_s(T)^-1 (T - L_conj(s)).
/// Throws Error(RadiusTooSmall), Error(SingularDelta) or Error(InvalidArgument) for nodes < 16.
QMatrix slice_regular_contour(const CalculusContext& ctx, const SliceFunction& f, double radius,
                              int nodes = kDefaultContourNodes);

struct SpectralWeight {
  double lambda = 0.0;
  double weight = 0.0;
};

/// Squared norms of the projections of u on the eigenspaces of a self-adjoint T.
/// Throws Error(NotSelfAdjoint).
std::vector<SpectralWeight> spectral_measure_weights(const QMatrix& t, const QVector& u, double rel_tol = 1e-7);

}  // namespace qslice
