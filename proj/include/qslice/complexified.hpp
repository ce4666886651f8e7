#pragma once

#include "qslice/quaternion.hpp"

namespace qslice {

// Element w = q + i p of H (x) C. The complex unit i is central and distinct
// from the quaternion unit i.
struct ComplexifiedQuaternion {
  Quaternion q;
  Quaternion p;

  constexpr bool operator==(const ComplexifiedQuaternion&) const = default;

  constexpr ComplexifiedQuaternion operator+(const ComplexifiedQuaternion& o) const { return {q + o.q, p + o.p}; }
  constexpr ComplexifiedQuaternion operator-(const ComplexifiedQuaternion& o) const { return {q - o.q, p - o.p}; }
  constexpr ComplexifiedQuaternion operator*(double s) const { return {q * s, p * s}; }
};

/// (q+ip)(q'+ip') = qq' - pp' + i(qp' + pq').
constexpr ComplexifiedQuaternion hc_mul(const ComplexifiedQuaternion& w, const ComplexifiedQuaternion& y) {
  return {w.q * y.q - w.p * y.p, w.q * y.p + w.p * y.q};
}

constexpr ComplexifiedQuaternion operator*(const ComplexifiedQuaternion& w, const ComplexifiedQuaternion& y) {
  return hc_mul(w, y);
}

/// w* = conj(q) - i conj(p).
constexpr ComplexifiedQuaternion hc_star(const ComplexifiedQuaternion& w) { return {w.q.conj(), -w.p.conj()}; }

/// sqrt(|q|^2 + |p|^2 + 2 |Im(p conj(q))|), which equals sup over the sphere of |q + iota p|.
double hc_norm(const ComplexifiedQuaternion& w);

/// |q + iota p| for a single point of the sphere.
double hc_slice_abs(const ComplexifiedQuaternion& w, const Quaternion& iota);

}  // namespace qslice
