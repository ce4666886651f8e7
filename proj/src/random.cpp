#include "qslice/random.hpp"

#include <cmath>

namespace qslice {

namespace {

double binomial(int n, int k) {
  double r = 1.0;
  for (int s = 1; s <= k; ++s) {
    r = r * (n - k + s) / s;
  }
  return r;
}

QMatrix conjugate_diagonal(const QMatrix& v, const std::vector<Quaternion>& d) {
  return v * QMatrix::diagonal(d) * qmat_adjoint(v);
}

}  // namespace

Quaternion random_quaternion(Rng& rng) {
  std::normal_distribution<double> g;
  return {g(rng), g(rng), g(rng), g(rng)};
}

SpherePoint random_sphere_point(Rng& rng) {
  std::normal_distribution<double> g;
  while (true) {
    const Quaternion q(0.0, g(rng), g(rng), g(rng));
    if (q.imag_norm() > 1e-3) {
      return SpherePoint(q);
    }
  }
}

QVector random_qvector(std::size_t n, Rng& rng) {
  QVector u(n);
  for (std::size_t k = 0; k < n; ++k) {
    u[k] = random_quaternion(rng);
  }
  return u;
}

QMatrix random_qmatrix(std::size_t n, Rng& rng) {
  QMatrix m(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      m(r, c) = random_quaternion(rng);
    }
  }
  return m;
}

QMatrix random_unitary(std::size_t n, Rng& rng) {
  while (true) {
    std::vector<QVector> cols;
    for (std::size_t k = 0; k < n; ++k) {
      cols.push_back(random_qvector(n, rng));
    }
    auto basis = orthonormalize(cols, 1e-6);
    if (basis.size() == n) {
      return QMatrix::from_columns(basis);
    }
  }
}

NormalSample random_normal(std::size_t n, Rng& rng, const NormalOptions& opts) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  NormalSample s;
  s.v = random_unitary(n, rng);
  for (std::size_t k = 0; k < n; ++k) {
    const double alpha = opts.alpha_max * (2.0 * unit(rng) - 1.0);
    if (unit(rng) < opts.real_probability || k < opts.min_real) {
      s.diag.emplace_back(alpha);
    } else {
      const double beta = opts.beta_min + (opts.beta_max - opts.beta_min) * unit(rng);
      s.diag.push_back(random_sphere_point(rng).slice_point(alpha, beta));
    }
  }
  s.t = conjugate_diagonal(s.v, s.diag);
  return s;
}

QMatrix random_self_adjoint(std::size_t n, Rng& rng) {
  const QMatrix c = random_qmatrix(n, rng);
  return (c + qmat_adjoint(c)) * (0.5 / std::sqrt(static_cast<double>(n)));
}

QMatrix random_anti_self_adjoint(std::size_t n, Rng& rng) {
  const QMatrix c = random_qmatrix(n, rng);
  return (c - qmat_adjoint(c)) * (0.5 / std::sqrt(static_cast<double>(n)));
}

QMatrix random_anti_self_adjoint_unitary(std::size_t n, Rng& rng) {
  const QMatrix v = random_unitary(n, rng);
  std::vector<Quaternion> d;
  for (std::size_t k = 0; k < n; ++k) {
    d.push_back(random_sphere_point(rng).value());
  }
  return conjugate_diagonal(v, d);
}

StemFunction power_series_stem(const std::vector<Quaternion>& coefs) {
  // (x + i y)^m = sum_k C(m,k) x^(m-k) i^k y^k.
  PolynomialStem p;
  for (std::size_t m = 0; m < coefs.size(); ++m) {
    const int deg = static_cast<int>(m);
    for (int k = 0; k <= deg; ++k) {
      const double c = binomial(deg, k) * ((k / 2) % 2 == 0 ? 1.0 : -1.0);
      if (k % 2 == 0) {
        p.q1.push_back({deg - k, k, coefs[m] * c});
      } else {
        p.q2.push_back({deg - k, k, coefs[m] * c});
      }
    }
  }
  return StemFunction::polynomial(std::move(p));
}

StemFunction random_polynomial_stem(int degree, Rng& rng, bool real_coefficients) {
  std::normal_distribution<double> g;
  PolynomialStem p;
  for (int dx = 0; dx <= degree; ++dx) {
    for (int dy = 0; dx + dy <= degree; ++dy) {
      const Quaternion c = real_coefficients ? Quaternion(g(rng)) : random_quaternion(rng);
      if (dy % 2 == 0) {
        p.q1.push_back({dx, dy, c * 0.5});
      } else {
        p.q2.push_back({dx, dy, c * 0.5});
      }
    }
  }
  return StemFunction::polynomial(std::move(p));
}

}  // namespace qslice
