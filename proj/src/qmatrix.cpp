#include "qslice/qmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "qslice/error.hpp"

namespace qslice {

using cd = std::complex<double>;

namespace {

// q = z1 + z2 j with z1 = a + b i, z2 = c + d i.
cd part1(const Quaternion& q) { return {q.a, q.b}; }
cd part2(const Quaternion& q) { return {q.c, q.d}; }
Quaternion from_parts(cd z1, cd z2) { return {z1.real(), z1.imag(), z2.real(), z2.imag()}; }

void require_same_size(std::size_t a, std::size_t b) {
  if (a != b) {
    throw Error(ErrorCode::DimensionMismatch, "sizes " + std::to_string(a) + " and " + std::to_string(b));
  }
}

}  // namespace

QVector QVector::basis(std::size_t n, std::size_t k) {
  QVector e(n);
  e[k] = Quaternion(1.0);
  return e;
}

QVector QVector::operator+(const QVector& o) const {
  require_same_size(size(), o.size());
  QVector r(size());
  for (std::size_t k = 0; k < size(); ++k) {
    r[k] = v_[k] + o[k];
  }
  return r;
}

QVector QVector::operator-(const QVector& o) const {
  require_same_size(size(), o.size());
  QVector r(size());
  for (std::size_t k = 0; k < size(); ++k) {
    r[k] = v_[k] - o[k];
  }
  return r;
}

QVector QVector::operator*(double s) const {
  QVector r(size());
  for (std::size_t k = 0; k < size(); ++k) {
    r[k] = v_[k] * s;
  }
  return r;
}

QVector QVector::operator*(const Quaternion& q) const {
  QVector r(size());
  for (std::size_t k = 0; k < size(); ++k) {
    r[k] = v_[k] * q;
  }
  return r;
}

double QVector::norm() const {
  double s = 0.0;
  for (const auto& q : v_) {
    s += q.norm2();
  }
  return std::sqrt(s);
}

Quaternion inner(const QVector& u, const QVector& v) {
  require_same_size(u.size(), v.size());
  Quaternion s;
  for (std::size_t k = 0; k < u.size(); ++k) {
    s += u[k].conj() * v[k];
  }
  return s;
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n);
  for (std::size_t k = 0; k < n; ++k) {
    m(k, k) = Quaternion(1.0);
  }
  return m;
}

QMatrix QMatrix::diagonal(const std::vector<Quaternion>& d) {
  QMatrix m(d.size());
  for (std::size_t k = 0; k < d.size(); ++k) {
    m(k, k) = d[k];
  }
  return m;
}

QMatrix QMatrix::from_rows(const std::vector<std::vector<Quaternion>>& rows) {
  QMatrix m(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    require_same_size(rows[r].size(), rows.size());
    for (std::size_t c = 0; c < rows.size(); ++c) {
      m(r, c) = rows[r][c];
    }
  }
  return m;
}

QMatrix QMatrix::from_columns(const std::vector<QVector>& cols) {
  QMatrix m(cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    require_same_size(cols[c].size(), cols.size());
    for (std::size_t r = 0; r < cols.size(); ++r) {
      m(r, c) = cols[c][r];
    }
  }
  return m;
}

QVector QMatrix::column(std::size_t c) const {
  QVector v(n_);
  for (std::size_t r = 0; r < n_; ++r) {
    v[r] = (*this)(r, c);
  }
  return v;
}

QMatrix QMatrix::operator+(const QMatrix& o) const {
  require_same_size(n_, o.n_);
  QMatrix r(n_);
  for (std::size_t k = 0; k < m_.size(); ++k) {
    r.m_[k] = m_[k] + o.m_[k];
  }
  return r;
}

QMatrix QMatrix::operator-(const QMatrix& o) const {
  require_same_size(n_, o.n_);
  QMatrix r(n_);
  for (std::size_t k = 0; k < m_.size(); ++k) {
    r.m_[k] = m_[k] - o.m_[k];
  }
  return r;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
  require_same_size(n_, o.n_);
  QMatrix r(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t l = 0; l < n_; ++l) {
      const Quaternion a = (*this)(i, l);
      for (std::size_t j = 0; j < n_; ++j) {
        r(i, j) += a * o(l, j);
      }
    }
  }
  return r;
}

QMatrix QMatrix::operator*(double s) const {
  QMatrix r(n_);
  for (std::size_t k = 0; k < m_.size(); ++k) {
    r.m_[k] = m_[k] * s;
  }
  return r;
}

QVector QMatrix::operator*(const QVector& u) const {
  require_same_size(n_, u.size());
  QVector r(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t l = 0; l < n_; ++l) {
      r[i] += (*this)(i, l) * u[l];
    }
  }
  return r;
}

double QMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& q : m_) {
    m = std::max(m, q.norm());
  }
  return m;
}

double QMatrix::frobenius() const {
  double s = 0.0;
  for (const auto& q : m_) {
    s += q.norm2();
  }
  return std::sqrt(s);
}

QMatrix qmat_mul(const QMatrix& m, const QMatrix& n) { return m * n; }

QMatrix qmat_adjoint(const QMatrix& m) {
  QMatrix r(m.n());
  for (std::size_t i = 0; i < m.n(); ++i) {
    for (std::size_t j = 0; j < m.n(); ++j) {
      r(j, i) = m(i, j).conj();
    }
  }
  return r;
}

ComplexMatrix chi_embed(const QMatrix& m) {
  const auto n = static_cast<Eigen::Index>(m.n());
  ComplexMatrix c(2 * n, 2 * n);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index s = 0; s < n; ++s) {
      const Quaternion& q = m(static_cast<std::size_t>(r), static_cast<std::size_t>(s));
      const cd z1 = part1(q);
      const cd z2 = part2(q);
      c(r, s) = z1;
      c(r, n + s) = z2;
      c(n + r, s) = -std::conj(z2);
      c(n + r, n + s) = std::conj(z1);
    }
  }
  return c;
}

QMatrix chi_extract(const ComplexMatrix& c, double tol) {
  if (c.rows() != c.cols() || c.rows() % 2 != 0) {
    throw Error(ErrorCode::NotSymplectic, "expected a square matrix of even size");
  }
  const Eigen::Index n = c.rows() / 2;
  const double scale = std::max(1.0, c.cwiseAbs().maxCoeff());
  QMatrix m(static_cast<std::size_t>(n));
  double defect = 0.0;
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index s = 0; s < n; ++s) {
      const cd a = c(r, s);
      const cd b = c(r, n + s);
      const cd cc = c(n + r, s);
      const cd d = c(n + r, n + s);
      defect = std::max({defect, std::abs(a - std::conj(d)), std::abs(b + std::conj(cc))});
      m(static_cast<std::size_t>(r), static_cast<std::size_t>(s)) =
          from_parts(0.5 * (a + std::conj(d)), 0.5 * (b - std::conj(cc)));
    }
  }
  if (defect > tol * scale) {
    throw Error(ErrorCode::NotSymplectic, "block defect " + std::to_string(defect));
  }
  return m;
}

ComplexVector chi_vector(const QVector& u) {
  const auto n = static_cast<Eigen::Index>(u.size());
  ComplexVector x(2 * n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const Quaternion& q = u[static_cast<std::size_t>(k)];
    x(k) = part1(q);
    x(n + k) = -std::conj(part2(q));
  }
  return x;
}

QVector chi_vector_extract(const ComplexVector& x) {
  const Eigen::Index n = x.size() / 2;
  QVector u(static_cast<std::size_t>(n));
  for (Eigen::Index k = 0; k < n; ++k) {
    u[static_cast<std::size_t>(k)] = from_parts(x(k), -std::conj(x(n + k)));
  }
  return u;
}

// All SVDs use the Jacobi solver: the divide-and-conquer one was seen to return
// a wrong factorization for some 16 x 16 embeddings.
double op_norm(const QMatrix& m) {
  if (m.n() == 0) {
    return 0.0;
  }
  Eigen::JacobiSVD<ComplexMatrix> svd(chi_embed(m));
  return svd.singularValues()(0);
}

bool is_self_adjoint(const QMatrix& m, double tol) {
  return op_norm(m - qmat_adjoint(m)) <= tol * std::max(1.0, op_norm(m));
}

bool is_anti_self_adjoint(const QMatrix& m, double tol) {
  return op_norm(m + qmat_adjoint(m)) <= tol * std::max(1.0, op_norm(m));
}

bool is_unitary(const QMatrix& m, double tol) {
  return op_norm(qmat_adjoint(m) * m - QMatrix::identity(m.n())) <= tol;
}

bool is_normal(const QMatrix& m, double tol) {
  const QMatrix a = qmat_adjoint(m);
  const double nm = op_norm(m);
  return op_norm(m * a - a * m) <= tol * nm * nm;
}

QMatrix sqrt_positive(const QMatrix& m) {
  if (!is_self_adjoint(m)) {
    throw Error(ErrorCode::NotSelfAdjoint, "square root needs a self-adjoint operator");
  }
  const ComplexMatrix c = chi_embed(m);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(0.5 * (c + c.adjoint()));
  if (es.info() != Eigen::Success) {
    throw Error(ErrorCode::EigensolverFailure, "self-adjoint eigensolver did not converge");
  }
  const Eigen::VectorXd& ev = es.eigenvalues();
  const double scale = std::max(1.0, ev.cwiseAbs().maxCoeff());
  if (ev.size() > 0 && ev(0) < -1e-10 * scale) {
    throw Error(ErrorCode::NotPositive, "minimum eigenvalue " + std::to_string(ev(0)));
  }
  const Eigen::VectorXd root = ev.cwiseMax(0.0).cwiseSqrt();
  const ComplexMatrix& v = es.eigenvectors();
  return chi_extract(v * root.asDiagonal() * v.adjoint());
}

PolarDecomposition polar_decompose(const QMatrix& m, double cutoff) {
  const std::size_t n = m.n();
  if (n == 0) {
    return {QMatrix(0), QMatrix(0)};
  }
  Eigen::JacobiSVD<ComplexMatrix> svd(chi_embed(m), Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Eigen::VectorXd& s = svd.singularValues();
  const ComplexMatrix& u = svd.matrixU();
  const ComplexMatrix& v = svd.matrixV();
  const double smax = s(0);
  Eigen::Index rank = 0;
  while (rank < s.size() && s(rank) > cutoff * smax && smax > 0.0) {
    ++rank;
  }
  const ComplexMatrix p = v * s.asDiagonal() * v.adjoint();
  const ComplexMatrix w = u.leftCols(rank) * v.leftCols(rank).adjoint();
  return {chi_extract(w), chi_extract(0.5 * (p + p.adjoint()))};
}

std::vector<QVector> orthonormalize(const std::vector<QVector>& vectors, double drop_tol) {
  std::vector<QVector> out;
  for (const auto& v : vectors) {
    const double n0 = v.norm();
    if (n0 == 0.0) {
      continue;
    }
    QVector w = v;
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& z : out) {
        w = w - z * inner(z, w);
      }
    }
    const double nw = w.norm();
    if (nw > drop_tol * n0) {
      out.push_back(w * (1.0 / nw));
    }
  }
  return out;
}

double gram_deviation(const std::vector<QVector>& basis) {
  double dev = 0.0;
  for (std::size_t a = 0; a < basis.size(); ++a) {
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const Quaternion g = inner(basis[a], basis[b]) - Quaternion(a == b ? 1.0 : 0.0);
      dev = std::max(dev, g.norm());
    }
  }
  return dev;
}

void require_valid_j(const QMatrix& j, double tol) {
  if (!is_anti_self_adjoint(j, tol) || !is_unitary(j, tol)) {
    throw Error(ErrorCode::InvalidJ, "J must be anti-self-adjoint and unitary");
  }
}

SplitVector split_plus_minus(const QVector& u, const QMatrix& j, const SpherePoint& iota) {
  require_valid_j(j);
  const QVector jui = (j * u) * iota.value();
  return {(u - jui) * 0.5, (u + jui) * 0.5};
}

PlusBasis plus_basis(const QMatrix& j, const SpherePoint& iota) {
  require_valid_j(j);
  const auto n = static_cast<Eigen::Index>(j.n());
  const ComplexMatrix cj = chi_embed(j);
  const ComplexMatrix p = 0.5 * (ComplexMatrix::Identity(2 * n, 2 * n) - cd(0.0, 1.0) * cj);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(0.5 * (p + p.adjoint()));
  if (es.info() != Eigen::Success) {
    throw Error(ErrorCode::EigensolverFailure, "projector eigensolver did not converge");
  }
  if (n > 0 && (es.eigenvalues()(n) < 0.5 || es.eigenvalues()(n - 1) > 0.5)) {
    throw Error(ErrorCode::InvalidJ, "eigenspaces of J have unequal dimension");
  }
  const Quaternion rbar = rotation_to(iota).conj();
  PlusBasis out{j, iota.value(), {}};
  for (Eigen::Index c = n; c < 2 * n; ++c) {
    out.vectors.push_back(chi_vector_extract(es.eigenvectors().col(c)) * rbar);
  }
  return out;
}

QMatrix extend_complex_operator(const ComplexMatrix& s, const PlusBasis& basis) {
  const std::size_t n = basis.j.n();
  if (basis.vectors.size() != n || static_cast<std::size_t>(s.rows()) != n || static_cast<std::size_t>(s.cols()) != n) {
    throw Error(ErrorCode::DimensionMismatch, "operator and basis sizes differ");
  }
  if (gram_deviation(basis.vectors) >= 1e-10) {
    throw Error(ErrorCode::BasisNotOrthonormal, "basis of H+ is not orthonormal");
  }
  for (const auto& z : basis.vectors) {
    if ((basis.j * z - z * basis.iota).norm() >= 1e-10) {
      throw Error(ErrorCode::BasisNotOrthonormal, "basis vector outside H+");
    }
  }
  QMatrix sq(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const cd z = s(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
      sq(r, c) = Quaternion(z.real()) + basis.iota * z.imag();
    }
  }
  const QMatrix zm = QMatrix::from_columns(basis.vectors);
  return zm * sq * qmat_adjoint(zm);
}

LeftMultiplication::LeftMultiplication(std::vector<QVector> basis) : basis_(std::move(basis)) {
  if (gram_deviation(basis_) >= 1e-10) {
    throw Error(ErrorCode::BasisNotOrthonormal, "Gram deviation " + std::to_string(gram_deviation(basis_)));
  }
  z_ = QMatrix::from_columns(basis_);
  z_adj_ = qmat_adjoint(z_);
}

QMatrix LeftMultiplication::diagonal(const std::vector<Quaternion>& d) const {
  require_same_size(d.size(), z_.n());
  QMatrix zd = z_;
  for (std::size_t r = 0; r < z_.n(); ++r) {
    for (std::size_t c = 0; c < z_.n(); ++c) {
      zd(r, c) = z_(r, c) * d[c];
    }
  }
  return zd * z_adj_;
}

QMatrix left_mult_from_basis(const LeftMultiplication& basis, const Quaternion& q) {
  return basis.diagonal(std::vector<Quaternion>(basis.n(), q));
}

}  // namespace qslice
