#include "qslice/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>

#include "qslice/error.hpp"

namespace qslice {

namespace {

struct Cluster {
  double alpha = 0.0;
  double beta = 0.0;
  int count = 0;
};

// Single-linkage clustering of points sorted lexicographically.
std::vector<Cluster> cluster_points(std::vector<CircularSet::Point> pts, double tol) {
  const std::size_t m = pts.size();
  std::vector<std::size_t> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      if (std::hypot(pts[a].alpha - pts[b].alpha, pts[a].beta - pts[b].beta) <= tol) {
        parent[find(a)] = find(b);
      }
    }
  }
  std::vector<Cluster> acc(m);
  for (std::size_t a = 0; a < m; ++a) {
    Cluster& c = acc[find(a)];
    c.alpha += pts[a].alpha;
    c.beta += pts[a].beta;
    ++c.count;
  }
  std::vector<Cluster> out;
  for (auto& c : acc) {
    if (c.count > 0) {
      out.push_back({c.alpha / c.count, c.beta / c.count, c.count});
    }
  }
  std::sort(out.begin(), out.end(), [](const Cluster& x, const Cluster& y) {
    return x.alpha < y.alpha || (x.alpha == y.alpha && x.beta < y.beta);
  });
  return out;
}

double max_over(const std::vector<CircularSet::Point>& pts, double (*f)(const CircularSet::Point&)) {
  double m = 0.0;
  for (const auto& p : pts) {
    m = std::max(m, f(p));
  }
  return m;
}

}  // namespace

QMatrix delta_q(const QMatrix& t, const Quaternion& q) {
  return t * t - t * (2.0 * q.real()) + QMatrix::identity(t.n()) * q.norm2();
}

CircularSet::Point fold(const Quaternion& q) { return {q.real(), q.imag_norm()}; }

SphericalSpectrum spherical_spectrum(const QMatrix& t, double rel_tol) {
  SphericalSpectrum out;
  if (t.n() == 0) {
    return out;
  }
  Eigen::ComplexEigenSolver<ComplexMatrix> es(chi_embed(t), false);
  if (es.info() != Eigen::Success) {
    throw Error(ErrorCode::EigensolverFailure, "complex eigensolver did not converge");
  }
  std::vector<CircularSet::Point> pts;
  for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
    const std::complex<double> z = es.eigenvalues()(k);
    pts.push_back({z.real(), std::fabs(z.imag())});
  }
  const double tol = rel_tol * std::max(1.0, op_norm(t));
  const std::vector<Cluster> clusters = cluster_points(pts, tol);
  std::vector<CircularSet::Point> reps;
  for (const auto& c : clusters) {
    reps.push_back({c.alpha, c.beta});
  }
  out.set = CircularSet(reps, tol);
  out.multiplicity.assign(out.set.size(), 0);
  for (const auto& c : clusters) {
    std::size_t best = 0;
    double dist = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < out.set.size(); ++k) {
      const double d = std::hypot(out.set.reps()[k].alpha - c.alpha, out.set.reps()[k].beta - c.beta);
      if (d < dist) {
        dist = d;
        best = k;
      }
    }
    out.multiplicity[best] += c.count;
  }
  for (auto& m : out.multiplicity) {
    m = (m + 1) / 2;
  }
  out.radius = max_over(out.set.reps(), [](const CircularSet::Point& p) { return std::hypot(p.alpha, p.beta); });
  return out;
}

double spectral_radius(const QMatrix& t) { return spherical_spectrum(t).radius; }

std::vector<double> gelfand_check(const QMatrix& t, int n_max) {
  if (n_max < 1) {
    throw Error(ErrorCode::InvalidArgument, "n_max must be at least 1");
  }
  std::vector<double> out;
  QMatrix p = t;
  double exponent = 1.0;
  for (int k = 0; k <= n_max; ++k) {
    const double nrm = op_norm(p);
    if (!std::isfinite(nrm) || nrm > 1e300) {
      throw Error(ErrorCode::Overflow, "power norm overflows at k = " + std::to_string(k));
    }
    out.push_back(std::pow(nrm, exponent));
    if (k < n_max) {
      p = p * p;
      exponent *= 0.5;
    }
  }
  return out;
}

std::vector<double> resolvent_coefficients(const Quaternion& q, std::size_t count) {
  // a_n = s_n / |q|^(2n+2) with s_n = sum_h q^h conj(q)^(n-h); s_{n+1} = 2 Re(q) s_n - |q|^2 s_{n-1}.
  const double m2 = q.norm2();
  const double two_alpha = 2.0 * q.real();
  std::vector<double> a;
  a.reserve(count + 1);
  a.push_back(1.0 / m2);
  if (count >= 1) {
    a.push_back(two_alpha / (m2 * m2));
  }
  for (std::size_t n = 1; n < count; ++n) {
    a.push_back((two_alpha * a[n] - a[n - 1]) / m2);
  }
  return a;
}

QMatrix resolvent_series(const QMatrix& t, const Quaternion& q, double tol, std::size_t* terms_used) {
  const double nt = op_norm(t);
  const double nq = q.norm();
  if (nq <= nt * (1.0 + 1e-6) || nq == 0.0) {
    throw Error(ErrorCode::InsideSpectrumBound, "|q| must exceed ||T||");
  }
  if (!(tol > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
  }
  const double r = nt / nq;
  const double m2 = q.norm2();
  const double two_alpha = 2.0 * q.real();
  constexpr std::size_t kMaxTerms = 200000;
  QMatrix sum = QMatrix::identity(t.n()) * (1.0 / m2);
  QMatrix power = QMatrix::identity(t.n());
  double a_prev = 0.0;
  double a_cur = 1.0 / m2;
  std::size_t n = 0;
  // Tail after index n is at most (n+1) r^n / (|q|^2 (1-r)^2).
  double rn = 1.0;
  while (true) {
    ++n;
    rn *= r;
    const double tail = static_cast<double>(n + 1) * rn / (m2 * (1.0 - r) * (1.0 - r));
    if (tail < tol || rn == 0.0) {
      break;
    }
    if (n > kMaxTerms) {
      throw Error(ErrorCode::Overflow, "resolvent series did not converge");
    }
    const double a_next = n == 1 ? two_alpha / (m2 * m2) : (two_alpha * a_cur - a_prev) / m2;
    a_prev = a_cur;
    a_cur = a_next;
    power = power * t;
    sum = sum + power * a_cur;
    if (!std::isfinite(sum.max_abs())) {
      throw Error(ErrorCode::Overflow, "resolvent series overflowed");
    }
  }
  if (terms_used != nullptr) {
    *terms_used = n;
  }
  return sum;
}

QMatrix qmat_inverse(const QMatrix& m) {
  const ComplexMatrix c = chi_embed(m);
  Eigen::PartialPivLU<ComplexMatrix> lu(c);
  if (c.size() > 0 && !(lu.rcond() > 1e-14)) {
    throw Error(ErrorCode::SingularDelta, "matrix is numerically singular");
  }
  return chi_extract(lu.inverse(), 1e-8);
}

double one_sided_hausdorff(const std::vector<CircularSet::Point>& a, const std::vector<CircularSet::Point>& b) {
  if (a.empty()) {
    return 0.0;
  }
  if (b.empty()) {
    return std::numeric_limits<double>::infinity();
  }
  double h = 0.0;
  for (const auto& p : a) {
    double d = std::numeric_limits<double>::infinity();
    for (const auto& s : b) {
      d = std::min(d, std::hypot(p.alpha - s.alpha, p.beta - s.beta));
    }
    h = std::max(h, d);
  }
  return h;
}

double hausdorff(const std::vector<CircularSet::Point>& a, const std::vector<CircularSet::Point>& b) {
  return std::max(one_sided_hausdorff(a, b), one_sided_hausdorff(b, a));
}

CheckRecord make_check(std::string name, std::string property, double residual, double tolerance, bool soft) {
  CheckRecord r{std::move(name), std::move(property), CheckStatus::Pass, residual, tolerance, soft};
  if (!(residual <= tolerance)) {
    r.status = soft ? CheckStatus::SoftWarn : CheckStatus::Fail;
  }
  return r;
}

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::SoftWarn: return "soft-warn";
  }
  return "fail";
}

std::string to_string(OperatorClass c) {
  switch (c) {
    case OperatorClass::SelfAdjoint: return "self-adjoint";
    case OperatorClass::AntiSelfAdjoint: return "anti-self-adjoint";
    case OperatorClass::Unitary: return "unitary";
    case OperatorClass::Normal: return "normal";
    case OperatorClass::Generic: return "generic";
  }
  return "generic";
}

SpectralClassReport verify_spectral_classes(const QMatrix& t, double tol) {
  SpectralClassReport rep;
  rep.note = "residual and continuous spherical spectra are empty in finite dimension";
  const std::size_t n = t.n();
  const double nt = op_norm(t);
  const double scale = std::max(1.0, nt);
  const bool sa = is_self_adjoint(t, tol);
  const bool asa = is_anti_self_adjoint(t, tol);
  const bool un = is_unitary(t, tol);
  const bool nor = is_normal(t, tol);
  if (sa) rep.classes.push_back(OperatorClass::SelfAdjoint);
  if (asa) rep.classes.push_back(OperatorClass::AntiSelfAdjoint);
  if (un) rep.classes.push_back(OperatorClass::Unitary);
  rep.classes.push_back(nor ? OperatorClass::Normal : OperatorClass::Generic);

  const SphericalSpectrum sp = spherical_spectrum(t);
  const auto& reps = sp.reps();
  if (sa) {
    rep.checks.push_back(make_check("self-adjoint-real-spectrum", "self-adjoint operators have real spectrum",
                                    max_over(reps, [](const CircularSet::Point& p) { return p.beta; }), 1e-8 * scale));
  }
  if (asa) {
    rep.checks.push_back(make_check("anti-self-adjoint-imaginary-spectrum",
                                    "anti-self-adjoint operators have purely imaginary spectrum",
                                    max_over(reps, [](const CircularSet::Point& p) { return std::fabs(p.alpha); }),
                                    1e-8 * scale));
  }
  if (un) {
    rep.checks.push_back(make_check(
        "unitary-unit-spectrum", "unitary operators have spectrum on the unit sphere",
        max_over(reps, [](const CircularSet::Point& p) { return std::fabs(std::hypot(p.alpha, p.beta) - 1.0); }),
        1e-8));
  }
  if (asa && un) {
    rep.checks.push_back(make_check("anti-self-adjoint-unitary-sphere",
                                    "anti-self-adjoint unitaries have the imaginary unit sphere as spectrum",
                                    hausdorff(reps, {{0.0, 1.0}}), 1e-8));
  }
  if (nor) {
    rep.checks.push_back(make_check("normal-radius-equals-norm", "spectral radius of a normal operator is its norm",
                                    std::fabs(sp.radius - nt), 1e-9 * std::max(nt, 1e-300)));
  }
  const SphericalSpectrum sp_adj = spherical_spectrum(qmat_adjoint(t));
  rep.checks.push_back(make_check("adjoint-same-spectrum", "T and T* have the same spherical spectrum",
                                  hausdorff(reps, sp_adj.reps()), 1e-8 * scale));
  int total = 0;
  double min_beta = 0.0;
  for (std::size_t k = 0; k < reps.size(); ++k) {
    total += sp.multiplicity[k];
    min_beta = std::min(min_beta, reps[k].beta);
  }
  rep.checks.push_back(make_check("circular-multiplicities", "representatives lie in the closed upper half-plane "
                                  "and multiplicities add up to n",
                                  std::fabs(total - static_cast<double>(n)) + std::fabs(min_beta), 0.0));
  double worst = 0.0;
  for (const auto& p : reps) {
    const QMatrix d = delta_q(t, Quaternion(p.alpha, p.beta));
    Eigen::JacobiSVD<ComplexMatrix> svd(chi_embed(d));
    const auto& s = svd.singularValues();
    const double qs = nt + std::hypot(p.alpha, p.beta);
    const double rel = qs > 0.0 ? s(s.size() - 1) / (qs * qs) : 0.0;
    worst = std::max(worst, rel);
  }
  rep.checks.push_back(make_check("eigensphere-membership", "Delta_q(T) is singular at every representative", worst,
                                  1e-8, !nor));
  return rep;
}

}  // namespace qslice
