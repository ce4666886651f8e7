#include <cmath>

#include "qslice/complexified.hpp"
#include "qslice/error.hpp"
#include "test_util.hpp"

namespace qslice {
namespace {

using testing::oracle_mul;
using testing::qdist;

TEST(Quaternion, UnitProducts) {
  const Quaternion i = Quaternion::i();
  const Quaternion j = Quaternion::j();
  const Quaternion k = Quaternion::k();
  EXPECT_EQ(i * j, k);
  EXPECT_EQ(j * i, -k);
  EXPECT_EQ(j * k, i);
  EXPECT_EQ(k * i, j);
  EXPECT_EQ(i * i, Quaternion(-1));
  EXPECT_EQ(i * j * k, Quaternion(-1));
}

TEST(Quaternion, OneIsUnity) {
  const Quaternion q(0.3, -1.2, 2.5, 0.7);
  EXPECT_EQ(Quaternion(1) * q, q);
  EXPECT_EQ(q * Quaternion(1), q);
}

TEST(Quaternion, ExpandedProduct) {
  EXPECT_EQ(Quaternion(1, 1, 0, 0) * Quaternion(1, 0, 1, 0), Quaternion(1, 1, 1, 1));
}

TEST(Quaternion, ProductMatchesRegularRepresentation) {
  Rng rng(11);
  for (int s = 0; s < 500; ++s) {
    const Quaternion p = random_quaternion(rng);
    const Quaternion q = random_quaternion(rng);
    EXPECT_LT(qdist(p * q, oracle_mul(p, q)), 1e-13 * (1 + p.norm() * q.norm()));
  }
}

TEST(Quaternion, NormIsMultiplicative) {
  Rng rng(12);
  for (int s = 0; s < 1000; ++s) {
    const Quaternion p = random_quaternion(rng);
    const Quaternion q = random_quaternion(rng);
    EXPECT_NEAR((p * q).norm(), p.norm() * q.norm(), 1e-13 * p.norm() * q.norm());
  }
}

TEST(Quaternion, ConjugateReversesProducts) {
  Rng rng(13);
  for (int s = 0; s < 200; ++s) {
    const Quaternion p = random_quaternion(rng);
    const Quaternion q = random_quaternion(rng);
    EXPECT_LT(qdist((p * q).conj(), q.conj() * p.conj()), 1e-13 * (1 + p.norm() * q.norm()));
    EXPECT_LT(qdist(p * p.inverse(), Quaternion(1)), 1e-14);
  }
}

TEST(Quaternion, IsRealUsesRelativeFloor) {
  EXPECT_TRUE(Quaternion(3).is_real());
  EXPECT_TRUE(Quaternion(1e6, 1e-7).is_real());
  EXPECT_FALSE(Quaternion(1, 1e-9).is_real());
}

TEST(SphereDecompose, RealHasNoAxis) {
  const auto d = sphere_decompose(Quaternion(3));
  EXPECT_EQ(d.alpha, 3.0);
  EXPECT_EQ(d.beta, 0.0);
  EXPECT_FALSE(d.iota.has_value());
}

TEST(SphereDecompose, UnitImaginary) {
  const auto d = sphere_decompose(Quaternion::i());
  EXPECT_EQ(d.alpha, 0.0);
  EXPECT_EQ(d.beta, 1.0);
  ASSERT_TRUE(d.iota.has_value());
  EXPECT_EQ(d.iota->value(), Quaternion::i());
}

TEST(SphereDecompose, MixedImaginaryPart) {
  const auto d = sphere_decompose(Quaternion(1, 2, 2, 0));
  EXPECT_DOUBLE_EQ(d.alpha, 1.0);
  EXPECT_NEAR(d.beta, 2.0 * std::sqrt(2.0), 1e-15);
  ASSERT_TRUE(d.iota.has_value());
  EXPECT_LT(qdist(d.iota->value(), Quaternion(0, 1, 1, 0) / std::sqrt(2.0)), 1e-15);
}

TEST(SphereDecompose, Reconstructs) {
  Rng rng(14);
  for (int s = 0; s < 200; ++s) {
    const Quaternion q = random_quaternion(rng);
    const auto d = sphere_decompose(q);
    ASSERT_TRUE(d.iota.has_value());
    EXPECT_LT(qdist(d.iota->slice_point(d.alpha, d.beta), q), 1e-14 * q.norm());
    EXPECT_LT(qdist(d.iota->value() * d.iota->value(), Quaternion(-1)), 1e-15);
  }
}

TEST(SpherePoint, RejectsReal) {
  try {
    SpherePoint p(Quaternion(2));
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidArgument);
  }
}

TEST(SpherePoint, RotationConjugatesIToAxis) {
  Rng rng(15);
  for (int s = 0; s < 200; ++s) {
    const SpherePoint iota = random_sphere_point(rng);
    const Quaternion r = rotation_to(iota);
    EXPECT_NEAR(r.norm(), 1.0, 1e-14);
    EXPECT_LT(qdist(r * Quaternion::i() * r.conj(), iota.value()), 1e-14);
  }
  const Quaternion r = rotation_to(-SpherePoint::i());
  EXPECT_LT(qdist(r * Quaternion::i() * r.conj(), -Quaternion::i()), 1e-15);
}

TEST(Complexified, UnityAndComplexUnit) {
  const ComplexifiedQuaternion one{Quaternion(1), Quaternion()};
  const ComplexifiedQuaternion w{Quaternion(0.5, 1, -2, 3), Quaternion(-1, 0.25, 0, 4)};
  EXPECT_EQ(one * w, w);
  const ComplexifiedQuaternion ci{Quaternion(), Quaternion(1)};
  EXPECT_EQ(ci * ci, (ComplexifiedQuaternion{Quaternion(-1), Quaternion()}));
}

TEST(Complexified, MixedProduct) {
  const ComplexifiedQuaternion w{Quaternion::i(), Quaternion::j()};
  const ComplexifiedQuaternion y{Quaternion::j(), Quaternion::k()};
  const ComplexifiedQuaternion expected{Quaternion::k() - Quaternion::i(), -Quaternion::j() - Quaternion(1)};
  EXPECT_EQ(w * y, expected);
}

TEST(Complexified, Star) {
  EXPECT_EQ(hc_star({Quaternion(1), Quaternion()}), (ComplexifiedQuaternion{Quaternion(1), Quaternion()}));
  EXPECT_EQ(hc_star({Quaternion::i(), Quaternion::j()}), (ComplexifiedQuaternion{-Quaternion::i(), Quaternion::j()}));
}

TEST(Complexified, StarReversesProducts) {
  Rng rng(16);
  for (int s = 0; s < 200; ++s) {
    const ComplexifiedQuaternion w{random_quaternion(rng), random_quaternion(rng)};
    const ComplexifiedQuaternion y{random_quaternion(rng), random_quaternion(rng)};
    const auto lhs = hc_star(w * y);
    const auto rhs = hc_star(y) * hc_star(w);
    EXPECT_LT(qdist(lhs.q, rhs.q) + qdist(lhs.p, rhs.p), 1e-13 * (1 + hc_norm(w) * hc_norm(y)));
  }
}

TEST(Complexified, NormExamples) {
  const Quaternion q(0.3, -1, 2, 0.5);
  EXPECT_DOUBLE_EQ(hc_norm({q, Quaternion()}), q.norm());
  EXPECT_NEAR(hc_norm({Quaternion(1), Quaternion::j()}), 2.0, 1e-15);
  EXPECT_NEAR(hc_norm({Quaternion::i(), Quaternion::i()}), std::sqrt(2.0), 1e-15);
}

// Oracle: fine grid over the sphere in spherical coordinates.
TEST(Complexified, NormIsSupOverSphere) {
  Rng rng(17);
  for (int s = 0; s < 20; ++s) {
    const ComplexifiedQuaternion w{random_quaternion(rng), random_quaternion(rng)};
    double best = 0.0;
    const int m = 400;
    for (int a = 0; a <= m; ++a) {
      const double th = M_PI * a / m;
      for (int b = 0; b < 2 * m; ++b) {
        const double ph = M_PI * b / m;
        const Quaternion iota(0, std::sin(th) * std::cos(ph), std::sin(th) * std::sin(ph), std::cos(th));
        best = std::max(best, (w.q + iota * w.p).norm());
      }
    }
    const double nw = hc_norm(w);
    EXPECT_LE(best, nw * (1 + 1e-12));
    EXPECT_GE(best, nw * (1 - 1e-4));
  }
}

TEST(Complexified, CStarIdentityAndSubmultiplicative) {
  Rng rng(18);
  for (int s = 0; s < 10000; ++s) {
    const ComplexifiedQuaternion w{random_quaternion(rng), random_quaternion(rng)};
    const ComplexifiedQuaternion y{random_quaternion(rng), random_quaternion(rng)};
    const double nw = hc_norm(w);
    EXPECT_NEAR(hc_norm(hc_star(w) * w), nw * nw, 1e-12 * nw * nw);
    EXPECT_LE(hc_norm(w * y), nw * hc_norm(y) * (1 + 1e-10));
  }
}

TEST(ErrorCode, MessageCarriesCode) {
  const Error e(ErrorCode::InvalidJ, "bad");
  EXPECT_EQ(e.code(), ErrorCode::InvalidJ);
  EXPECT_NE(std::string(e.what()).find("bad"), std::string::npos);
}

}  // namespace
}  // namespace qslice
