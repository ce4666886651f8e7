#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qslice/complexified.hpp"
#include "qslice/quaternion.hpp"

namespace qslice {

inline constexpr double kMergeTolerance = 1e-8;

/// Finite subset of the closed upper half-plane, each point (alpha, beta).
class CircularSet {
 public:
  struct Point {
    double alpha = 0.0;
    double beta = 0.0;
  };

  CircularSet() = default;
  /// Points with beta < 0 are reflected; points closer than tol are merged.
  explicit CircularSet(const std::vector<Point>& points, double tol = kMergeTolerance);

  const std::vector<Point>& reps() const { return reps_; }
  double tolerance() const { return tol_; }
  bool empty() const { return reps_.empty(); }
  std::size_t size() const { return reps_.size(); }

  /// True if (alpha, |beta|) lies within tol of some representative.
  bool contains(double alpha, double beta, double tol) const;

 private:
  std::vector<Point> reps_;
  double tol_ = kMergeTolerance;
};

namespace domain {
/// All of C.
struct Plane {};
/// [alpha_min, alpha_max] x [-beta_max, beta_max].
struct Rectangle {
  double alpha_min = 0.0;
  double alpha_max = 0.0;
  double beta_max = 0.0;
};
/// [lo, hi] on the real axis.
struct RealInterval {
  double lo = 0.0;
  double hi = 0.0;
};
struct Finite {
  CircularSet set;
};
}  // namespace domain

using Domain = std::variant<domain::Plane, domain::Rectangle, domain::RealInterval, domain::Finite>;

inline constexpr double kDomainTolerance = 1e-8;

bool domain_contains(const Domain& d, double alpha, double beta, double tol = kDomainTolerance);
bool domain_equal(const Domain& a, const Domain& b);

/// Values (F1, F2) of a stem function at z = alpha + i beta.
struct StemValue {
  Quaternion f1;
  Quaternion f2;

  ComplexifiedQuaternion as_complexified() const { return {f1, f2}; }
};

/// Sparse monomial c X^dx Y^dy with a quaternion coefficient.
struct Monomial {
  int dx = 0;
  int dy = 0;
  Quaternion coef;
};

/// Pair (Q1, Q2) of bivariate polynomials with Q1 even and Q2 odd in Y.
struct PolynomialStem {
  std::vector<Monomial> q1;
  std::vector<Monomial> q2;
};

/// Drops wrong-parity terms of size <= tol, merges repeated monomials.
/// Throws Error(SymmetryViolation) if a wrong-parity coefficient exceeds tol.
PolynomialStem normalize_polynomial(PolynomialStem p, double tol = 1e-12);

Quaternion eval_polynomial(const std::vector<Monomial>& q, double x, double y);

/// Sampled (alpha, beta, F1, F2) values on a finite domain.
struct TabulatedStem {
  struct Row {
    double alpha = 0.0;
    double beta = 0.0;
    Quaternion f1;
    Quaternion f2;
  };
  std::vector<Row> rows;
};

enum class StemKind { Polynomial, Builtin, Tabulated, Custom };

class StemFunction {
 public:
  using Evaluator = std::function<StemValue(double alpha, double beta)>;

  /// Opaque callable stem. Throws Error(SymmetryViolation) if sampled even-odd symmetry fails.
  StemFunction(Evaluator eval, Domain dom, std::string label = "custom");

  static StemFunction polynomial(PolynomialStem p, Domain dom = domain::Plane{});
  /// One of: id, conj, re, immod, square, exp, sqrt, one.
  static StemFunction builtin(const std::string& name);
  static StemFunction constant(const Quaternion& value, Domain dom = domain::Plane{});
  /// Tabulated stem; beta >= 0 rows, evaluation on conjugates by symmetry.
  static StemFunction tabulated(TabulatedStem table, double tol = kMergeTolerance);

  /// Throws Error(PointOutsideDomain) if (alpha, beta) is not in the domain.
  StemValue operator()(double alpha, double beta) const;
  /// Evaluates without the domain check.
  StemValue eval_unchecked(double alpha, double beta) const { return eval_(alpha, beta); }

  StemKind kind() const { return kind_; }
  const Domain& domain() const { return domain_; }
  const std::string& label() const { return label_; }
  const std::optional<PolynomialStem>& polynomial_data() const { return poly_; }
  const std::optional<Quaternion>& constant_value() const { return const_; }

  StemFunction with_domain(Domain dom) const;

 private:
  StemFunction() = default;

  Evaluator eval_;
  Domain domain_;
  StemKind kind_ = StemKind::Custom;
  std::string label_;
  std::optional<PolynomialStem> poly_;
  std::optional<Quaternion> const_;
};

/// Sample points used for classification and symmetry validation. 64 points.
std::vector<CircularSet::Point> domain_samples(const Domain& d, std::size_t count = 64);

/// Throws Error(SymmetryViolation) if F1(conj z) != F1(z) or F2(conj z) != -F2(z) on samples.
void validate_stem_symmetry(const StemFunction::Evaluator& eval, const Domain& d, double tol = 1e-10);

struct SliceClass {
  enum class Kind { Intrinsic, Circular, CSlice, General };
  Kind kind = Kind::General;
  /// Slice axis when all values lie in one C_iota (set for CSlice and possibly Circular).
  std::optional<Quaternion> axis;

  bool is_intrinsic() const { return kind == Kind::Intrinsic; }
  bool is_circular() const { return kind == Kind::Intrinsic || kind == Kind::Circular; }
  bool is_cslice(const Quaternion& iota, double tol = 1e-10) const;
};

std::string to_string(const SliceClass& c);

class SliceFunction {
 public:
  explicit SliceFunction(StemFunction stem);

  const StemFunction& stem() const { return stem_; }
  const SliceClass& slice_class() const { return class_; }
  const Domain& domain() const { return stem_.domain(); }

 private:
  StemFunction stem_;
  SliceClass class_;
};

/// F1(alpha, beta) + iota F2(alpha, beta) for q = alpha + iota beta.
Quaternion slice_eval(const SliceFunction& f, const Quaternion& q);

/// Stem product FG = (F1G1 - F2G2) + i(F1G2 + F2G1).
SliceFunction slice_product(const SliceFunction& f, const SliceFunction& g);
SliceFunction slice_sum(const SliceFunction& f, const SliceFunction& g);
/// f . c_q
SliceFunction slice_right_scale(const SliceFunction& f, const Quaternion& q);
/// c_q . f
SliceFunction slice_left_scale(const Quaternion& q, const SliceFunction& f);
/// F* = conj(F1) - i conj(F2).
SliceFunction slice_star(const SliceFunction& f);

SliceClass classify_slice(const SliceFunction& f);

struct Components {
  SliceFunction f0;
  SliceFunction f1;
  SliceFunction f2;
  SliceFunction f3;
};

/// f = f0 + f1 iota + f2 kappa + f3 iota kappa with intrinsic f_l.
/// Throws Error(BasisDegenerate) unless iota and kappa are orthogonal.
Components decompose_components(const SliceFunction& f, const SpherePoint& iota, const SpherePoint& kappa);

/// max over K of the H_C norm of F(z). Throws Error(EmptySet) for empty K.
double sup_norm(const SliceFunction& f, const CircularSet& k);

}  // namespace qslice
