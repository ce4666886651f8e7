#include "qslice/calculus.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qslice/error.hpp"
#include "qslice/spectral.hpp"

namespace qslice {

using cd = std::complex<double>;

namespace {

constexpr double kNormalTol = 1e-10;

void require_normal(const QMatrix& t) {
  if (!is_normal(t, kNormalTol)) {
    throw Error(ErrorCode::NotNormal, "operator is not normal");
  }
}

// Picks, among the candidates, the one with the largest residual against the accepted
// vectors, until `count` vectors are accepted.
std::vector<QVector> pivoted_orthonormalize(std::vector<QVector> cand, std::size_t count) {
  std::vector<QVector> out;
  while (out.size() < count) {
    double best = -1.0;
    std::size_t best_k = 0;
    QVector best_v;
    for (std::size_t k = 0; k < cand.size(); ++k) {
      QVector w = cand[k];
      for (int pass = 0; pass < 2; ++pass) {
        for (const auto& z : out) {
          w = w - z * inner(z, w);
        }
      }
      const double nw = w.norm();
      if (nw > best) {
        best = nw;
        best_k = k;
        best_v = w;
      }
    }
    if (best < 1e-6) {
      throw Error(ErrorCode::DiagonalizationFailure, "kernel eigenbasis is rank deficient");
    }
    out.push_back(best_v * (1.0 / best));
    cand.erase(cand.begin() + static_cast<std::ptrdiff_t>(best_k));
  }
  return out;
}

QMatrix sum_z_q_z(const std::vector<QVector>& zs, const Quaternion& q, std::size_t n) {
  QMatrix m(n);
  for (const auto& z : zs) {
    for (std::size_t r = 0; r < n; ++r) {
      const Quaternion zq = z[r] * q;
      for (std::size_t c = 0; c < n; ++c) {
        m(r, c) += zq * z[c].conj();
      }
    }
  }
  return m;
}

QMatrix real_poly_eval(const RealPolynomial& poly, const std::vector<QMatrix>& apow, const std::vector<QMatrix>& bpow) {
  const std::size_t n = apow.front().n();
  QMatrix s(n);
  for (const auto& m : poly) {
    s = s + apow[static_cast<std::size_t>(m.dx)] * bpow[static_cast<std::size_t>(m.dy)] * m.coef;
  }
  return s;
}

// Requires an intrinsic f; evaluates F1 + i F2 at each eigenvalue of T+.
QMatrix intrinsic_unchecked(const CalculusContext& ctx, const SliceFunction& f) {
  const auto n = static_cast<Eigen::Index>(ctx.lambda.size());
  Eigen::VectorXcd d(n);
  for (Eigen::Index m = 0; m < n; ++m) {
    const cd l = ctx.lambda[static_cast<std::size_t>(m)];
    const StemValue v = f.stem().eval_unchecked(l.real(), l.imag());
    d(m) = cd(v.f1.real(), v.f2.real());
  }
  const ComplexMatrix s = ctx.u * d.asDiagonal() * ctx.u.adjoint();
  return extend_complex_operator(s, ctx.plus);
}

CalculusContext finish_context(const QMatrix& t, const JConstruction& jc) {
  const std::size_t n = t.n();
  CalculusContext ctx;
  ctx.t = t;
  ctx.norm_t = op_norm(t);
  const double scale = std::max(1.0, ctx.norm_t);
  ctx.a = (t + qmat_adjoint(t)) * 0.5;
  ctx.b = jc.p * 0.5;
  ctx.j = jc.j;
  ctx.plus = plus_basis(jc.j, SpherePoint::i());

  const auto ni = static_cast<Eigen::Index>(n);
  ComplexMatrix y(2 * ni, ni);
  for (Eigen::Index c = 0; c < ni; ++c) {
    y.col(c) = chi_vector(ctx.plus.vectors[static_cast<std::size_t>(c)]);
  }
  ctx.t_plus = y.adjoint() * chi_embed(t) * y;
  Eigen::ComplexSchur<ComplexMatrix> schur(ctx.t_plus);
  if (schur.info() != Eigen::Success) {
    throw Error(ErrorCode::DiagonalizationFailure, "Schur decomposition did not converge");
  }
  ctx.u = schur.matrixU();
  const ComplexMatrix& r = schur.matrixT();
  const ComplexMatrix off = r.triangularView<Eigen::StrictlyUpper>();
  if (ni > 0 && off.cwiseAbs().maxCoeff() > 1e-8 * scale) {
    throw Error(ErrorCode::DiagonalizationFailure, "restriction to H+ is not normal");
  }
  for (Eigen::Index m = 0; m < ni; ++m) {
    const cd l = r(m, m);
    if (l.imag() < -1e-10 * scale) {
      throw Error(ErrorCode::DiagonalizationFailure, "eigenvalue of T+ below the real axis");
    }
    ctx.lambda.push_back(l);
  }
  const ComplexMatrix yu = y * ctx.u;
  std::vector<QVector> zs;
  for (Eigen::Index c = 0; c < ni; ++c) {
    zs.push_back(chi_vector_extract(yu.col(c)));
  }
  ctx.basis = LeftMultiplication(std::move(zs));
  ctx.k = ctx.left(ctx.kappa);
  ctx.jk = ctx.j * ctx.k;
  return ctx;
}

}  // namespace

JConstruction construct_j_detailed(const QMatrix& t) {
  require_normal(t);
  const std::size_t n = t.n();
  const auto ni = static_cast<Eigen::Index>(n);
  const double scale = op_norm(t);
  const QMatrix d = t - qmat_adjoint(t);
  JConstruction out;
  if (n == 0) {
    return out;
  }
  Eigen::JacobiSVD<ComplexMatrix> svd(chi_embed(d), Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Eigen::VectorXd& s = svd.singularValues();
  const ComplexMatrix& u = svd.matrixU();
  const ComplexMatrix& v = svd.matrixV();
  // Rank of T - T* is decided relative to ||T||, so roundoff in T - T* for nearly
  // self-adjoint T counts as kernel.
  Eigen::Index rank = 0;
  while (rank < s.size() && s(rank) > kRankCutoff * scale) {
    ++rank;
  }
  if (rank % 2 != 0) {
    ++rank;
  }
  const ComplexMatrix p = v * s.asDiagonal() * v.adjoint();
  out.p = chi_extract(0.5 * (p + p.adjoint()));
  out.w = chi_extract(u.leftCols(rank) * v.leftCols(rank).adjoint());
  out.j = out.w;

  const Eigen::Index kdim = 2 * ni - rank;
  if (kdim > 0) {
    const ComplexMatrix q = v.rightCols(kdim);
    const ComplexMatrix ca = chi_embed((t + qmat_adjoint(t)) * 0.5);
    ComplexMatrix h = q.adjoint() * ca * q;
    h = 0.5 * (h + h.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
    if (es.info() != Eigen::Success) {
      throw Error(ErrorCode::EigensolverFailure, "kernel eigensolver did not converge");
    }
    const ComplexMatrix e = q * es.eigenvectors();
    std::vector<QVector> cand;
    for (Eigen::Index c = 0; c < kdim; ++c) {
      cand.push_back(chi_vector_extract(e.col(c)));
    }
    out.kernel = pivoted_orthonormalize(std::move(cand), static_cast<std::size_t>(kdim / 2));
    out.j = out.j + sum_z_q_z(out.kernel, Quaternion::i(), n);
  }
  return out;
}

QMatrix construct_J(const QMatrix& t) { return construct_j_detailed(t).j; }

std::optional<QMatrix> alternative_j(const JConstruction& jc) {
  if (jc.kernel.empty()) {
    return std::nullopt;
  }
  return jc.j - sum_z_q_z({jc.kernel.front()}, Quaternion::i(), jc.j.n()) * 2.0;
}

CalculusContext build_context(const QMatrix& t) { return finish_context(t, construct_j_detailed(t)); }

CalculusContext build_context_with_j(const QMatrix& t, const QMatrix& j) {
  require_normal(t);
  if (j.n() != t.n()) {
    throw Error(ErrorCode::DimensionMismatch, "J and T have different sizes");
  }
  require_valid_j(j);
  const double scale = std::max(1.0, op_norm(t));
  if (op_norm(j * t - t * j) > 1e-9 * scale) {
    throw Error(ErrorCode::InvalidJ, "J does not commute with T");
  }
  JConstruction jc;
  jc.j = j;
  jc.p = polar_decompose(t - qmat_adjoint(t)).p;
  const QMatrix a = (t + qmat_adjoint(t)) * 0.5;
  if (op_norm(t - (a + j * jc.p * 0.5)) > 1e-9 * scale) {
    throw Error(ErrorCode::InvalidJ, "T != A + J B for the supplied J");
  }
  return finish_context(t, jc);
}

QMatrix polynomial_calculus(const CalculusContext& ctx, const RealPolynomial& q1, const RealPolynomial& q2) {
  int max_dx = 0;
  int max_dy = 0;
  for (const auto* poly : {&q1, &q2}) {
    const int parity = poly == &q1 ? 0 : 1;
    for (const auto& m : *poly) {
      if (m.dx < 0 || m.dy < 0) {
        throw Error(ErrorCode::InvalidArgument, "negative monomial degree");
      }
      if (m.dy % 2 != parity && std::fabs(m.coef) > 1e-12) {
        throw Error(ErrorCode::SymmetryViolation, parity == 0 ? "Q1 must be even in Y" : "Q2 must be odd in Y");
      }
      max_dx = std::max(max_dx, m.dx);
      max_dy = std::max(max_dy, m.dy);
    }
  }
  const std::size_t n = ctx.t.n();
  std::vector<QMatrix> apow{QMatrix::identity(n)};
  std::vector<QMatrix> bpow{QMatrix::identity(n)};
  for (int k = 0; k < max_dx; ++k) {
    apow.push_back(apow.back() * ctx.a);
  }
  for (int k = 0; k < max_dy; ++k) {
    bpow.push_back(bpow.back() * ctx.b);
  }
  auto filtered = [](const RealPolynomial& p, int parity) {
    RealPolynomial out;
    for (const auto& m : p) {
      if (m.dy % 2 == parity) {
        out.push_back(m);
      }
    }
    return out;
  };
  return real_poly_eval(filtered(q1, 0), apow, bpow) + ctx.j * real_poly_eval(filtered(q2, 1), apow, bpow);
}

std::pair<RealPolynomial, RealPolynomial> real_polynomials(const StemFunction& stem) {
  const auto& p = stem.polynomial_data();
  if (!p) {
    throw Error(ErrorCode::InvalidArgument, "stem is not a polynomial");
  }
  auto convert = [](const std::vector<Monomial>& terms) {
    RealPolynomial out;
    for (const auto& m : terms) {
      if (m.coef.imag_norm() > 1e-12 * std::max(1.0, m.coef.norm())) {
        throw Error(ErrorCode::NotIntrinsic, "polynomial has non-real coefficients");
      }
      out.push_back({m.dx, m.dy, m.coef.real()});
    }
    return out;
  };
  return {convert(p->q1), convert(p->q2)};
}

void require_spectrum_in_domain(const CalculusContext& ctx, const SliceFunction& f) {
  for (const auto& l : ctx.lambda) {
    if (!domain_contains(f.domain(), l.real(), l.imag(), kDomainTolerance)) {
      throw Error(ErrorCode::SpectrumOutsideDomain, "spectrum point (" + std::to_string(l.real()) + ", " +
                                                        std::to_string(l.imag()) + ") outside the domain");
    }
  }
}

QMatrix intrinsic_calculus(const CalculusContext& ctx, const SliceFunction& f) {
  if (!f.slice_class().is_intrinsic()) {
    throw Error(ErrorCode::NotIntrinsic, "function is " + to_string(f.slice_class()));
  }
  require_spectrum_in_domain(ctx, f);
  return intrinsic_unchecked(ctx, f);
}

QMatrix cslice_calculus(const CalculusContext& ctx, const SliceFunction& f) {
  if (!f.slice_class().is_cslice(ctx.iota)) {
    throw Error(ErrorCode::WrongSliceClass, "function does not take values in C_i");
  }
  require_spectrum_in_domain(ctx, f);
  const Components c = decompose_components(f, SpherePoint(ctx.iota), SpherePoint(ctx.kappa));
  return intrinsic_unchecked(ctx, c.f0) + intrinsic_unchecked(ctx, c.f1) * ctx.j;
}

QMatrix circular_calculus(const CalculusContext& ctx, const SliceFunction& f) {
  if (!f.slice_class().is_circular()) {
    throw Error(ErrorCode::NotCircular, "function is " + to_string(f.slice_class()));
  }
  return general_calculus(ctx, f);
}

QMatrix general_calculus(const CalculusContext& ctx, const SliceFunction& f) {
  require_spectrum_in_domain(ctx, f);
  const Components c = decompose_components(f, SpherePoint(ctx.iota), SpherePoint(ctx.kappa));
  return intrinsic_unchecked(ctx, c.f0) + intrinsic_unchecked(ctx, c.f1) * ctx.j +
         intrinsic_unchecked(ctx, c.f2) * ctx.k + intrinsic_unchecked(ctx, c.f3) * ctx.jk;
}

QMatrix adjoint_similarity(const CalculusContext& ctx) { return ctx.left(ctx.kappa); }

double default_contour_radius(const CalculusContext& ctx) { return 1.25 * ctx.norm_t + 1.0; }

QMatrix slice_regular_contour(const CalculusContext& ctx, const SliceFunction& f, double radius, int nodes) {
  if (!(radius > ctx.norm_t)) {
    throw Error(ErrorCode::RadiusTooSmall, "contour radius must exceed ||T||");
  }
  if (nodes < 16) {
    throw Error(ErrorCode::InvalidArgument, "at least 16 quadrature nodes are required");
  }
  const std::size_t n = ctx.t.n();
  const QMatrix t2 = ctx.t * ctx.t;
  const QMatrix id = QMatrix::identity(n);
  QMatrix acc(n);
  for (int m = 0; m < nodes; ++m) {
    const double theta = 2.0 * std::numbers::pi * m / nodes;
    const Quaternion s = Quaternion(std::cos(theta)) * radius + ctx.iota * (std::sin(theta) * radius);
    const QMatrix delta = t2 - ctx.t * (2.0 * s.real()) + id * s.norm2();
    const QMatrix kernel = -(qmat_inverse(delta) * (ctx.t - ctx.left(s.conj())));
    // ds iota^-1 = s dtheta on the circle.
    acc = acc + kernel * ctx.left(s * slice_eval(f, s));
  }
  return acc * (1.0 / nodes);
}

std::vector<SpectralWeight> spectral_measure_weights(const QMatrix& t, const QVector& u, double rel_tol) {
  if (!is_self_adjoint(t)) {
    throw Error(ErrorCode::NotSelfAdjoint, "spectral measure needs a self-adjoint operator");
  }
  if (u.size() != t.n()) {
    throw Error(ErrorCode::DimensionMismatch, "vector and operator sizes differ");
  }
  std::vector<SpectralWeight> out;
  if (t.n() == 0) {
    return out;
  }
  const ComplexMatrix c = chi_embed(t);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(0.5 * (c + c.adjoint()));
  if (es.info() != Eigen::Success) {
    throw Error(ErrorCode::EigensolverFailure, "self-adjoint eigensolver did not converge");
  }
  const Eigen::VectorXd& ev = es.eigenvalues();
  const ComplexVector coeff = es.eigenvectors().adjoint() * chi_vector(u);
  const double tol = rel_tol * std::max(1.0, op_norm(t));
  double lsum = 0.0;
  int count = 0;
  double w = 0.0;
  for (Eigen::Index k = 0; k < ev.size(); ++k) {
    if (count > 0 && ev(k) - ev(k - 1) > tol) {
      out.push_back({lsum / count, w});
      lsum = 0.0;
      count = 0;
      w = 0.0;
    }
    lsum += ev(k);
    ++count;
    w += std::norm(coeff(k));
  }
  out.push_back({lsum / count, w});
  return out;
}

}  // namespace qslice
