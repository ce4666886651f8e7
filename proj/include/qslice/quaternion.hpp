#pragma once

#include <cmath>
#include <complex>
#include <optional>

namespace qslice {

/// Tolerance below which an imaginary part counts as zero, relative to max(1, |q|).
inline constexpr double kRealTolerance = 1e-12;

/// q = a + b i + c j + d k.
struct Quaternion {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double a_, double b_ = 0.0, double c_ = 0.0, double d_ = 0.0)
      : a(a_), b(b_), c(c_), d(d_) {}

  static constexpr Quaternion i() { return {0.0, 1.0, 0.0, 0.0}; }
  static constexpr Quaternion j() { return {0.0, 0.0, 1.0, 0.0}; }
  static constexpr Quaternion k() { return {0.0, 0.0, 0.0, 1.0}; }

  /// Embeds x + y i in the slice C_i.
  static constexpr Quaternion from_complex(std::complex<double> z) { return {z.real(), z.imag(), 0.0, 0.0}; }

  constexpr bool operator==(const Quaternion&) const = default;

  constexpr Quaternion operator+(const Quaternion& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }
  constexpr Quaternion operator-(const Quaternion& o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }
  constexpr Quaternion operator-() const { return {-a, -b, -c, -d}; }
  constexpr Quaternion operator*(double s) const { return {a * s, b * s, c * s, d * s}; }
  constexpr Quaternion operator/(double s) const { return {a / s, b / s, c / s, d / s}; }

  // Hamilton product, ij = -ji = k.
  constexpr Quaternion operator*(const Quaternion& o) const {
    return {a * o.a - b * o.b - c * o.c - d * o.d,
            a * o.b + b * o.a + c * o.d - d * o.c,
            a * o.c - b * o.d + c * o.a + d * o.b,
            a * o.d + b * o.c - c * o.b + d * o.a};
  }

  Quaternion& operator+=(const Quaternion& o) { return *this = *this + o; }
  Quaternion& operator-=(const Quaternion& o) { return *this = *this - o; }
  Quaternion& operator*=(const Quaternion& o) { return *this = *this * o; }
  Quaternion& operator*=(double s) { return *this = *this * s; }

  constexpr Quaternion conj() const { return {a, -b, -c, -d}; }
  constexpr double real() const { return a; }
  constexpr Quaternion imag() const { return {0.0, b, c, d}; }
  constexpr double norm2() const { return a * a + b * b + c * c + d * d; }
  double norm() const { return std::sqrt(norm2()); }
  double imag_norm() const { return std::sqrt(b * b + c * c + d * d); }
  Quaternion inverse() const { return conj() / norm2(); }

  bool is_real(double tol = kRealTolerance) const { return imag_norm() <= tol * std::fmax(1.0, norm()); }

  /// Complex number a + b i; only meaningful for elements of C_i.
  std::complex<double> to_complex() const { return {a, b}; }
};

constexpr Quaternion operator*(double s, const Quaternion& q) { return q * s; }

inline Quaternion quat_mul(const Quaternion& p, const Quaternion& q) { return p * q; }

/// Euclidean dot product of H seen as R^4.
constexpr double dot(const Quaternion& p, const Quaternion& q) { return p.a * q.a + p.b * q.b + p.c * q.c + p.d * q.d; }

/// Unit imaginary quaternion; always squares to -1.
class SpherePoint {
 public:
  /// Normalizes the imaginary part of q. Throws Error(InvalidArgument) if Im(q) vanishes.
  explicit SpherePoint(const Quaternion& q);

  static SpherePoint i() { return SpherePoint(Quaternion::i()); }
  static SpherePoint j() { return SpherePoint(Quaternion::j()); }
  static SpherePoint k() { return SpherePoint(Quaternion::k()); }

  const Quaternion& value() const { return q_; }
  operator const Quaternion&() const { return q_; }
  SpherePoint operator-() const { return SpherePoint(-q_); }

  /// alpha + iota * beta.
  Quaternion slice_point(double alpha, double beta) const { return Quaternion(alpha) + q_ * beta; }

 private:
  Quaternion q_;
};

/// q = alpha + iota beta with beta = |Im q| >= 0; iota is empty when q is real.
struct SphereDecomposition {
  double alpha = 0.0;
  double beta = 0.0;
  std::optional<SpherePoint> iota;
};

SphereDecomposition sphere_decompose(const Quaternion& q, double tol = kRealTolerance);

/// Unit quaternion r with r i conj(r) = iota.
Quaternion rotation_to(const SpherePoint& iota);

}  // namespace qslice
