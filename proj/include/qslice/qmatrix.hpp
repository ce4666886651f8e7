#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "qslice/quaternion.hpp"

namespace qslice {

using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// Column vector in H^n with <u|v> = sum conj(u_k) v_k.
class QVector {
 public:
  QVector() = default;
  explicit QVector(std::size_t n) : v_(n) {}
  explicit QVector(std::vector<Quaternion> v) : v_(std::move(v)) {}
  QVector(std::initializer_list<Quaternion> v) : v_(v) {}

  static QVector basis(std::size_t n, std::size_t k);

  std::size_t size() const { return v_.size(); }
  Quaternion& operator[](std::size_t k) { return v_[k]; }
  const Quaternion& operator[](std::size_t k) const { return v_[k]; }
  const std::vector<Quaternion>& data() const { return v_; }

  QVector operator+(const QVector& o) const;
  QVector operator-(const QVector& o) const;
  QVector operator*(double s) const;
  /// Right scalar multiplication u q.
  QVector operator*(const Quaternion& q) const;

  double norm() const;

 private:
  std::vector<Quaternion> v_;
};

Quaternion inner(const QVector& u, const QVector& v);

/// n x n quaternionic matrix acting on the left of column vectors.
class QMatrix {
 public:
  QMatrix() = default;
  explicit QMatrix(std::size_t n) : n_(n), m_(n * n) {}

  static QMatrix identity(std::size_t n);
  static QMatrix zero(std::size_t n) { return QMatrix(n); }
  static QMatrix diagonal(const std::vector<Quaternion>& d);
  /// Throws Error(DimensionMismatch) unless rows form a square grid.
  static QMatrix from_rows(const std::vector<std::vector<Quaternion>>& rows);
  /// Matrix whose columns are the given vectors.
  static QMatrix from_columns(const std::vector<QVector>& cols);

  std::size_t n() const { return n_; }
  Quaternion& operator()(std::size_t r, std::size_t c) { return m_[r * n_ + c]; }
  const Quaternion& operator()(std::size_t r, std::size_t c) const { return m_[r * n_ + c]; }

  QVector column(std::size_t c) const;

  QMatrix operator+(const QMatrix& o) const;
  QMatrix operator-(const QMatrix& o) const;
  QMatrix operator*(const QMatrix& o) const;
  QMatrix operator*(double s) const;
  QVector operator*(const QVector& u) const;
  QMatrix operator-() const { return *this * -1.0; }

  /// Largest entry modulus.
  double max_abs() const;
  double frobenius() const;

  bool operator==(const QMatrix& o) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<Quaternion> m_;
};

/// Throws Error(DimensionMismatch) for different sizes.
QMatrix qmat_mul(const QMatrix& m, const QMatrix& n);
QMatrix qmat_adjoint(const QMatrix& m);

/// M = M1 + M2 j  maps to  [[M1, M2], [-conj(M2), conj(M1)]].
ComplexMatrix chi_embed(const QMatrix& m);
/// Inverse of chi_embed. Throws Error(NotSymplectic) if the block structure fails by more than 1e-10.
QMatrix chi_extract(const ComplexMatrix& c, double tol = 1e-10);

/// u = u1 + u2 j  maps to  (u1, -conj(u2)); chi(M) phi(u) = phi(M u).
ComplexVector chi_vector(const QVector& u);
QVector chi_vector_extract(const ComplexVector& x);

double op_norm(const QMatrix& m);

bool is_self_adjoint(const QMatrix& m, double tol = 1e-10);
bool is_anti_self_adjoint(const QMatrix& m, double tol = 1e-10);
bool is_unitary(const QMatrix& m, double tol = 1e-10);
/// ||M M* - M* M|| <= tol ||M||^2.
bool is_normal(const QMatrix& m, double tol = 1e-10);

/// Throws Error(NotSelfAdjoint) or Error(NotPositive).
QMatrix sqrt_positive(const QMatrix& m);

struct PolarDecomposition {
  QMatrix w;
  QMatrix p;
};

inline constexpr double kRankCutoff = 1e-10;

/// M = W P with P = |M| and W a partial isometry vanishing on Ker(P).
PolarDecomposition polar_decompose(const QMatrix& m, double cutoff = kRankCutoff);

/// Quaternionic modified Gram-Schmidt with one extra pass. Vectors whose residual falls
/// below drop_tol times their original norm are skipped.
std::vector<QVector> orthonormalize(const std::vector<QVector>& vectors, double drop_tol = 1e-8);

/// Largest |<z_a|z_b> - delta_ab|.
double gram_deviation(const std::vector<QVector>& basis);

/// Throws Error(InvalidJ) unless J is anti-self-adjoint and unitary.
void require_valid_j(const QMatrix& j, double tol = 1e-10);

struct SplitVector {
  QVector plus;
  QVector minus;
};

/// u = u+ + u- with J u+ = u+ iota and J u- = -u- iota.
SplitVector split_plus_minus(const QVector& u, const QMatrix& j, const SpherePoint& iota);

/// Orthonormal basis of {u : J u = u iota}.
struct PlusBasis {
  QMatrix j;
  Quaternion iota;
  std::vector<QVector> vectors;
};

PlusBasis plus_basis(const QMatrix& j, const SpherePoint& iota);

/// Operator with T J = J T whose restriction to H+ has matrix S in the given basis,
/// entries x + i y read as x + iota y. Throws Error(BasisNotOrthonormal).
QMatrix extend_complex_operator(const ComplexMatrix& s, const PlusBasis& basis);

/// Left scalar multiplication u -> sum_z z q <z|u> induced by an orthonormal basis.
class LeftMultiplication {
 public:
  LeftMultiplication() = default;
  /// Throws Error(BasisNotOrthonormal) if the Gram deviation reaches 1e-10.
  explicit LeftMultiplication(std::vector<QVector> basis);

  const std::vector<QVector>& basis() const { return basis_; }
  /// Matrix with the basis vectors as columns.
  const QMatrix& unitary() const { return z_; }
  std::size_t n() const { return z_.n(); }

  /// Z diag(d) Z*.
  QMatrix diagonal(const std::vector<Quaternion>& d) const;

 private:
  std::vector<QVector> basis_;
  QMatrix z_;
  QMatrix z_adj_;
};

QMatrix left_mult_from_basis(const LeftMultiplication& basis, const Quaternion& q);

}  // namespace qslice
