#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "qslice/qmatrix.hpp"
#include "qslice/slice_function.hpp"

namespace qslice {

using Rng = std::mt19937_64;

/// Standard normal components.
Quaternion random_quaternion(Rng& rng);
/// Uniform on the sphere of unit imaginary quaternions.
SpherePoint random_sphere_point(Rng& rng);
QVector random_qvector(std::size_t n, Rng& rng);
/// Standard normal entries.
QMatrix random_qmatrix(std::size_t n, Rng& rng);
/// Gram-Schmidt of a random matrix.
QMatrix random_unitary(std::size_t n, Rng& rng);

struct NormalOptions {
  /// Probability that a diagonal entry is real, which puts it in Ker(T - T*).
  double real_probability = 0.25;
  /// The first min_real diagonal entries are forced to be real.
  std::size_t min_real = 0;
  double alpha_max = 1.0;
  double beta_min = 0.1;
  double beta_max = 1.0;
};

/// T = V D V* with D = diag(alpha_m + iota_m beta_m).
struct NormalSample {
  QMatrix t;
  QMatrix v;
  std::vector<Quaternion> diag;
};

NormalSample random_normal(std::size_t n, Rng& rng, const NormalOptions& opts = {});
QMatrix random_self_adjoint(std::size_t n, Rng& rng);
QMatrix random_anti_self_adjoint(std::size_t n, Rng& rng);
QMatrix random_anti_self_adjoint_unitary(std::size_t n, Rng& rng);

/// Polynomial stem of q -> sum q^m a_m.
StemFunction power_series_stem(const std::vector<Quaternion>& coefs);
/// Random polynomial stem with parity-correct monomials of total degree <= degree.
StemFunction random_polynomial_stem(int degree, Rng& rng, bool real_coefficients = false);

}  // namespace qslice
