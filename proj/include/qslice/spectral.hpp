#pragma once

#include <string>
#include <vector>

#include "qslice/check.hpp"
#include "qslice/qmatrix.hpp"
#include "qslice/slice_function.hpp"

namespace qslice {

/// T^2 - T (q + conj q) + |q|^2 I.
QMatrix delta_q(const QMatrix& t, const Quaternion& q);

/// Upper half-plane representatives of the spherical spectrum with multiplicities.
struct SphericalSpectrum {
  CircularSet set;
  std::vector<int> multiplicity;
  double radius = 0.0;

  const std::vector<CircularSet::Point>& reps() const { return set.reps(); }
};

/// Eigenvalues of chi(T) folded to (Re, |Im|) and clustered within tol * max(1, ||T||).
/// Throws Error(EigensolverFailure).
SphericalSpectrum spherical_spectrum(const QMatrix& t, double rel_tol = 1e-8);

double spectral_radius(const QMatrix& t);

/// ||T^(2^k)||^(1/2^k) for k = 0..n_max. Throws Error(Overflow) on non-finite norms.
std::vector<double> gelfand_check(const QMatrix& t, int n_max);

/// Coefficients a_0..a_count of the resolvent series in powers of T.
std::vector<double> resolvent_coefficients(const Quaternion& q, std::size_t count);

/// sum T^n a_n, which inverts Delta_q(T) when |q| > ||T||.
/// Throws Error(InsideSpectrumBound) if |q| <= ||T|| (1 + 1e-6).
QMatrix resolvent_series(const QMatrix& t, const Quaternion& q, double tol, std::size_t* terms_used = nullptr);

/// Direct inverse through the complex embedding. Throws Error(SingularDelta).
QMatrix qmat_inverse(const QMatrix& m);

/// Symmetric Hausdorff distance between two finite sets of (alpha, beta) points.
double hausdorff(const std::vector<CircularSet::Point>& a, const std::vector<CircularSet::Point>& b);
/// sup over a of the distance to b.
double one_sided_hausdorff(const std::vector<CircularSet::Point>& a, const std::vector<CircularSet::Point>& b);

/// (Re q, |Im q|).
CircularSet::Point fold(const Quaternion& q);

enum class OperatorClass { SelfAdjoint, AntiSelfAdjoint, Unitary, Normal, Generic };

std::string to_string(OperatorClass c);

struct SpectralClassReport {
  std::vector<OperatorClass> classes;
  std::vector<CheckRecord> checks;
  /// The residual and continuous spectra are empty in finite dimension.
  std::string note;
};

SpectralClassReport verify_spectral_classes(const QMatrix& t, double tol = 1e-10);

}  // namespace qslice
