#include <cmath>

#include "qslice/error.hpp"
#include "test_util.hpp"

namespace qslice {
namespace {

using testing::oracle_matmul;
using testing::qdist;

const Quaternion I = Quaternion::i();
const Quaternion J = Quaternion::j();

QMatrix example_t() { return QMatrix::from_rows({{Quaternion(), I}, {-I, Quaternion()}}); }

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an error";
  return ErrorCode::InvalidArgument;
}

TEST(QMatrix, IdentityProduct) {
  Rng rng(41);
  const QMatrix m = random_qmatrix(4, rng);
  EXPECT_EQ(QMatrix::identity(4) * m, m);
}

TEST(QMatrix, ExampleSquaresToIdentity) {
  const QMatrix t = example_t();
  EXPECT_LT(qdist(t * t, QMatrix::identity(2)), 1e-15);
}

TEST(QMatrix, ProductMatchesOracle) {
  Rng rng(42);
  for (int s = 0; s < 10; ++s) {
    const QMatrix m = random_qmatrix(5, rng);
    const QMatrix n = random_qmatrix(5, rng);
    EXPECT_LT((m * n - oracle_matmul(m, n)).max_abs(), 1e-13);
    EXPECT_LE(op_norm(m * n), op_norm(m) * op_norm(n) * (1 + 1e-12));
  }
}

TEST(QMatrix, DimensionMismatch) {
  EXPECT_EQ(code_of([] { qmat_mul(QMatrix::identity(2), QMatrix::identity(3)); }), ErrorCode::DimensionMismatch);
  EXPECT_EQ(code_of([] { QMatrix::from_rows({{Quaternion(1), Quaternion()}, {Quaternion()}}); }),
            ErrorCode::DimensionMismatch);
}

TEST(QMatrix, RightLinearity) {
  Rng rng(43);
  const QMatrix t = random_qmatrix(4, rng);
  for (int s = 0; s < 20; ++s) {
    const QVector u = random_qvector(4, rng);
    const Quaternion q = random_quaternion(rng);
    EXPECT_LT(((t * (u * q)) - (t * u) * q).norm(), 1e-12 * (1 + u.norm() * q.norm() * op_norm(t)));
  }
}

TEST(QMatrix, AdjointPairing) {
  Rng rng(44);
  const QMatrix t = random_qmatrix(4, rng);
  const QMatrix ts = qmat_adjoint(t);
  for (int s = 0; s < 20; ++s) {
    const QVector u = random_qvector(4, rng);
    const QVector v = random_qvector(4, rng);
    EXPECT_LT(qdist(inner(ts * u, v), inner(u, t * v)), 1e-12 * (1 + op_norm(t) * u.norm() * v.norm()));
  }
}

TEST(QMatrix, AdjointExamples) {
  EXPECT_EQ(qmat_adjoint(QMatrix::identity(3)), QMatrix::identity(3));
  EXPECT_EQ(qmat_adjoint(example_t()), example_t());
  EXPECT_EQ(qmat_adjoint(QMatrix::diagonal({J})), QMatrix::diagonal({-J}));
}

TEST(QVector, InnerProductRules) {
  Rng rng(45);
  for (int s = 0; s < 20; ++s) {
    const QVector u = random_qvector(5, rng);
    const QVector v = random_qvector(5, rng);
    const Quaternion q = random_quaternion(rng);
    EXPECT_LT(qdist(inner(u, v * q), inner(u, v) * q), 1e-12 * (1 + u.norm() * v.norm() * q.norm()));
    EXPECT_LT(qdist(inner(u, v), inner(v, u).conj()), 1e-13 * (1 + u.norm() * v.norm()));
    EXPECT_NEAR((u * q).norm(), u.norm() * q.norm(), 1e-13 * u.norm() * q.norm());
  }
}

TEST(Chi, IdentityAndDiagJ) {
  EXPECT_EQ(chi_embed(QMatrix::identity(3)), ComplexMatrix::Identity(6, 6));
  const ComplexMatrix c = chi_embed(QMatrix::diagonal({J}));
  ComplexMatrix expect(2, 2);
  expect << 0, 1, -1, 0;
  EXPECT_EQ(c, expect);
}

TEST(Chi, HomomorphismAndAdjoint) {
  Rng rng(46);
  for (int s = 0; s < 100; ++s) {
    const std::size_t n = 1 + s % 16;
    const QMatrix m = random_qmatrix(n, rng);
    const QMatrix k = random_qmatrix(n, rng);
    const ComplexMatrix cm = chi_embed(m);
    const ComplexMatrix ck = chi_embed(k);
    EXPECT_LT((chi_embed(oracle_matmul(m, k)) - cm * ck).norm(), 1e-11 * cm.norm() * ck.norm());
    // Entrywise comparison of the two sides.
    const ComplexMatrix lhs = chi_embed(qmat_adjoint(m));
    const ComplexMatrix rhs = cm.adjoint();
    for (Eigen::Index r = 0; r < lhs.rows(); ++r) {
      for (Eigen::Index c = 0; c < lhs.cols(); ++c) {
        EXPECT_EQ(lhs(r, c), rhs(r, c));
      }
    }
  }
}

TEST(Chi, VectorMapIntertwines) {
  Rng rng(47);
  const QMatrix m = random_qmatrix(5, rng);
  const QVector u = random_qvector(5, rng);
  EXPECT_LT((chi_embed(m) * chi_vector(u) - chi_vector(m * u)).norm(), 1e-12 * (1 + op_norm(m) * u.norm()));
  EXPECT_LT((chi_vector_extract(chi_vector(u)) - u).norm(), 1e-15);
}

TEST(Chi, ExtractRejectsNonSymplectic) {
  ComplexMatrix c = ComplexMatrix::Identity(2, 2);
  c(1, 1) = 2.0;
  EXPECT_EQ(code_of([&] { chi_extract(c); }), ErrorCode::NotSymplectic);
}

TEST(OpNorm, Examples) {
  EXPECT_NEAR(op_norm(QMatrix::identity(4)), 1.0, 1e-15);
  const Quaternion q(1, -2, 2, 4);
  EXPECT_NEAR(op_norm(QMatrix::diagonal({q})), 5.0, 1e-14);
  EXPECT_NEAR(op_norm(example_t()), 1.0, 1e-15);
}

// Oracle: sampled sup of |Tu| / |u| never exceeds the norm and gets close.
TEST(OpNorm, MatchesSampledSup) {
  Rng rng(48);
  const QMatrix t = random_qmatrix(3, rng);
  double best = 0.0;
  for (int s = 0; s < 20000; ++s) {
    const QVector u = random_qvector(3, rng);
    best = std::max(best, (t * u).norm() / u.norm());
  }
  const double nt = op_norm(t);
  EXPECT_LE(best, nt * (1 + 1e-12));
  EXPECT_GE(best, nt * 0.97);
}

TEST(Classes, Predicates) {
  Rng rng(49);
  EXPECT_TRUE(is_self_adjoint(random_self_adjoint(4, rng)));
  EXPECT_TRUE(is_anti_self_adjoint(random_anti_self_adjoint(4, rng)));
  EXPECT_TRUE(is_unitary(random_unitary(4, rng)));
  EXPECT_TRUE(is_normal(random_normal(4, rng).t));
  EXPECT_FALSE(is_normal(QMatrix::from_rows({{Quaternion(), Quaternion(1)}, {Quaternion(), Quaternion()}})));
}

TEST(SqrtPositive, Examples) {
  EXPECT_LT(qdist(sqrt_positive(QMatrix::identity(3)), QMatrix::identity(3)), 1e-15);
  EXPECT_LT(qdist(sqrt_positive(QMatrix::diagonal({Quaternion(4)})), QMatrix::diagonal({Quaternion(2)})), 1e-15);
  Rng rng(50);
  for (int s = 0; s < 10; ++s) {
    const QMatrix c = random_qmatrix(5, rng);
    const QMatrix m = qmat_adjoint(c) * c;
    const QMatrix r = sqrt_positive(m);
    EXPECT_TRUE(is_self_adjoint(r, 1e-10));
    EXPECT_LT(qdist(r * r, m), 1e-10 * op_norm(m));
  }
}

TEST(SqrtPositive, Errors) {
  EXPECT_EQ(code_of([] { sqrt_positive(QMatrix::diagonal({Quaternion(-1)})); }), ErrorCode::NotPositive);
  EXPECT_EQ(code_of([] { sqrt_positive(QMatrix::diagonal({I})); }), ErrorCode::NotSelfAdjoint);
}

TEST(Polar, Examples) {
  Rng rng(51);
  const QMatrix u = random_unitary(4, rng);
  const auto pu = polar_decompose(u);
  EXPECT_LT(qdist(pu.w, u), 1e-12);
  EXPECT_LT(qdist(pu.p, QMatrix::identity(4)), 1e-12);
  const auto pz = polar_decompose(QMatrix::zero(3));
  EXPECT_EQ(pz.w.max_abs(), 0.0);
  EXPECT_EQ(pz.p.max_abs(), 0.0);
  const auto pd = polar_decompose(QMatrix::diagonal({I * 2.0}));
  EXPECT_LT(qdist(pd.w, QMatrix::diagonal({I})), 1e-15);
  EXPECT_LT(qdist(pd.p, QMatrix::diagonal({Quaternion(2)})), 1e-15);
  EXPECT_LT(qdist(qmat_adjoint(pd.w), -pd.w), 1e-15);
}

TEST(Polar, ReconstructsRankDeficient) {
  Rng rng(52);
  for (int s = 0; s < 10; ++s) {
    NormalOptions opts;
    opts.min_real = 2;
    const QMatrix t = random_normal(5, rng, opts).t;
    const QMatrix m = t - qmat_adjoint(t);
    const auto pd = polar_decompose(m);
    EXPECT_LT(qdist(pd.w * pd.p, m), 1e-9 * std::max(1.0, op_norm(m)));
    EXPECT_TRUE(is_self_adjoint(pd.p, 1e-10));
    // W vanishes on Ker(P).
    const QMatrix wstar_w = qmat_adjoint(pd.w) * pd.w;
    EXPECT_LT(qdist(wstar_w * wstar_w, wstar_w), 1e-9);
    EXPECT_LT(qdist(qmat_adjoint(pd.w), -pd.w), 1e-9);
  }
}

TEST(Polar, NormalKernelsAgree) {
  Rng rng(53);
  NormalOptions opts;
  opts.min_real = 2;
  auto sample = random_normal(4, rng, opts);
  sample.diag[0] = Quaternion(0);
  const QMatrix t = testing::conjugate_diag(sample.v, sample.diag);
  auto kernel_dim = [](const QMatrix& m) {
    Eigen::JacobiSVD<ComplexMatrix> svd(chi_embed(m));
    int k = 0;
    for (Eigen::Index r = 0; r < svd.singularValues().size(); ++r) {
      k += svd.singularValues()(r) < 1e-8 ? 1 : 0;
    }
    return k;
  };
  const QMatrix p = polar_decompose(t).p;
  EXPECT_EQ(kernel_dim(t), 2);
  EXPECT_EQ(kernel_dim(qmat_adjoint(t)), 2);
  EXPECT_EQ(kernel_dim(p), 2);
}

TEST(Orthonormalize, ProducesOrthonormalBasis) {
  Rng rng(54);
  std::vector<QVector> vs;
  for (int s = 0; s < 6; ++s) {
    vs.push_back(random_qvector(6, rng));
  }
  vs.push_back(vs[0] * random_quaternion(rng) + vs[1]);
  const auto basis = orthonormalize(vs);
  EXPECT_EQ(basis.size(), 6u);
  EXPECT_LT(gram_deviation(basis), 1e-13);
}

TEST(SplitPlusMinus, Examples) {
  const QMatrix jd = QMatrix::diagonal({I});
  const auto s = split_plus_minus(QVector{J}, jd, SpherePoint::i());
  EXPECT_LT(s.plus.norm(), 1e-15);
  EXPECT_LT((s.minus - QVector{J}).norm(), 1e-15);
  const auto p = split_plus_minus(QVector{Quaternion(1)}, jd, SpherePoint::i());
  EXPECT_LT((p.plus - QVector{Quaternion(1)}).norm(), 1e-15);
  EXPECT_LT(p.minus.norm(), 1e-15);
}

TEST(SplitPlusMinus, OrthogonalSplit) {
  Rng rng(55);
  const QMatrix jop = random_anti_self_adjoint_unitary(5, rng);
  for (int s = 0; s < 20; ++s) {
    const SpherePoint iota = random_sphere_point(rng);
    const QVector u = random_qvector(5, rng);
    const auto sp = split_plus_minus(u, jop, iota);
    EXPECT_NEAR(u.norm() * u.norm(), sp.plus.norm() * sp.plus.norm() + sp.minus.norm() * sp.minus.norm(), 1e-12);
    EXPECT_LT((jop * sp.plus - sp.plus * iota.value()).norm(), 1e-12);
    EXPECT_LT((jop * sp.minus + sp.minus * iota.value()).norm(), 1e-12);
  }
}

TEST(SplitPlusMinus, RejectsInvalidJ) {
  EXPECT_EQ(code_of([] { split_plus_minus(QVector{Quaternion(1)}, QMatrix::identity(1), SpherePoint::i()); }),
            ErrorCode::InvalidJ);
}

TEST(Extension, Examples) {
  Rng rng(56);
  const QMatrix jop = random_anti_self_adjoint_unitary(4, rng);
  for (const SpherePoint& iota : {SpherePoint::i(), random_sphere_point(rng)}) {
    const PlusBasis pb = plus_basis(jop, iota);
    ASSERT_EQ(pb.vectors.size(), 4u);
    const ComplexMatrix id = ComplexMatrix::Identity(4, 4);
    EXPECT_LT(qdist(extend_complex_operator(id, pb), QMatrix::identity(4)), 1e-12);
    EXPECT_LT(qdist(extend_complex_operator(id * std::complex<double>(0, 1), pb), jop), 1e-12);
    const ComplexMatrix s = ComplexMatrix::Random(4, 4);
    const QMatrix ext = extend_complex_operator(s, pb);
    Eigen::JacobiSVD<ComplexMatrix> svd(s);
    EXPECT_NEAR(op_norm(ext), svd.singularValues()(0), 1e-12);
    EXPECT_LT(qdist(ext * jop, jop * ext), 1e-12);
  }
}

TEST(LeftMultiplication, Examples) {
  Rng rng(57);
  const QMatrix v = random_unitary(4, rng);
  std::vector<QVector> cols;
  for (std::size_t c = 0; c < 4; ++c) {
    cols.push_back(v.column(c));
  }
  const LeftMultiplication lm(cols);
  EXPECT_LT(qdist(left_mult_from_basis(lm, Quaternion(1)), QMatrix::identity(4)), 1e-13);
  const QMatrix l3 = left_mult_from_basis(lm, Quaternion(3));
  const QVector u = random_qvector(4, rng);
  EXPECT_LT((l3 * u - u * 3.0).norm(), 1e-12);
  const QMatrix li = left_mult_from_basis(lm, I);
  const QMatrix lj = left_mult_from_basis(lm, J);
  EXPECT_LT(qdist(li * lj, left_mult_from_basis(lm, Quaternion::k())), 1e-11);
  for (int s = 0; s < 10; ++s) {
    const Quaternion q = random_quaternion(rng);
    const QMatrix lq = left_mult_from_basis(lm, q);
    EXPECT_NEAR(op_norm(lq), q.norm(), 1e-11 * q.norm());
    EXPECT_LT(qdist(qmat_adjoint(lq), left_mult_from_basis(lm, q.conj())), 1e-12 * q.norm());
  }
}

TEST(LeftMultiplication, RejectsNonOrthonormal) {
  EXPECT_EQ(code_of([] { LeftMultiplication({QVector{Quaternion(1), Quaternion()}, QVector{Quaternion(1), Quaternion(1)}}); }),
            ErrorCode::BasisNotOrthonormal);
}

}  // namespace
}  // namespace qslice
