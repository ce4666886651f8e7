#include "qslice/error.hpp"
#include "qslice/json_io.hpp"
#include "test_util.hpp"

namespace qslice {
namespace {

using json_io::json;
using json_io::ParseError;
using testing::qdist;

TEST(Json, QuaternionRoundTrip) {
  const Quaternion q(0.1, -2.5e-17, 3.0, 1.0 / 3.0);
  EXPECT_EQ(json_io::quaternion_from_json(json_io::parse(json_io::dump(json_io::to_json(q)))), q);
}

TEST(Json, ComplexifiedRoundTrip) {
  const ComplexifiedQuaternion w{Quaternion(1, 2, 3, 4), Quaternion(-1, 0.5, 0, 2)};
  EXPECT_EQ(json_io::complexified_from_json(json_io::to_json(w)), w);
}

TEST(Json, QMatrixRoundTripIsBitIdentical) {
  Rng rng(101);
  for (int s = 0; s < 20; ++s) {
    const QMatrix m = random_qmatrix(1 + s % 6, rng);
    const std::string once = json_io::dump(json_io::to_json(m));
    const QMatrix back = json_io::qmatrix_from_json(json_io::parse(once));
    EXPECT_EQ(back, m);
    EXPECT_EQ(json_io::dump(json_io::to_json(back)), once);
  }
}

TEST(Json, QVectorRoundTrip) {
  Rng rng(102);
  const QVector v = random_qvector(4, rng);
  const QVector back = json_io::qvector_from_json(json_io::to_json(v));
  EXPECT_EQ(back.data(), v.data());
}

TEST(Json, MatrixSchemaErrors) {
  EXPECT_THROW(json_io::qmatrix_from_json(json_io::parse(R"({"n":2,"rows":[[[0,0,0,0]]]})")), ParseError);
  EXPECT_THROW(json_io::qmatrix_from_json(json_io::parse(R"({"rows":[]})")), ParseError);
  EXPECT_THROW(json_io::qmatrix_from_json(json_io::parse(R"({"n":1,"rows":[[[0,0,"x",0]]]})")), ParseError);
  EXPECT_THROW(json_io::parse("{\"n\":"), ParseError);
  EXPECT_THROW(json_io::read_file("/nonexistent/file.json"), ParseError);
}

TEST(Json, CircularSet) {
  const CircularSet k = json_io::circular_set_from_json(json_io::parse(R"({"reps":[[1,-2],[0,0]]})"));
  ASSERT_EQ(k.size(), 2u);
  EXPECT_EQ(k.reps()[1].beta, 2.0);
  EXPECT_EQ(json_io::to_json(k)["reps"].size(), 2u);
}

TEST(Json, Stems) {
  const StemFunction sq = json_io::stem_from_json(
      json_io::parse(R"({"kind":"poly","Q1":[[2,0,1],[0,2,-1]],"Q2":[[1,1,2]]})"));
  const Quaternion q(0.3, 0.4, -1, 0.2);
  EXPECT_LT(qdist(slice_eval(SliceFunction(sq), q), q * q), 1e-14);
  const StemFunction e = json_io::stem_from_json(json_io::parse(R"({"kind":"builtin","name":"exp"})"));
  EXPECT_EQ(e.label(), "exp");
  const StemFunction c =
      json_io::stem_from_json(json_io::parse(R"({"kind":"builtin","name":"const","value":[0,0,1,0]})"));
  EXPECT_EQ(slice_eval(SliceFunction(c), q), Quaternion::j());
  const StemFunction t = json_io::stem_from_json(
      json_io::parse(R"({"kind":"tabulated","rows":[[1,0,[2,0,0,0],[0,0,0,0]]]})"));
  EXPECT_EQ(slice_eval(SliceFunction(t), Quaternion(1)), Quaternion(2));
  EXPECT_THROW(json_io::stem_from_json(json_io::parse(R"({"kind":"builtin","name":"nope"})")), ParseError);
  EXPECT_THROW(json_io::stem_from_json(json_io::parse(R"({"kind":"weird"})")), ParseError);
  EXPECT_THROW(json_io::stem_from_json(json_io::parse(R"({"kind":"poly","Q1":[[0,1,1]]})")), Error);
}

TEST(Json, StemRoundTrip) {
  Rng rng(103);
  const StemFunction s = random_polynomial_stem(3, rng);
  const StemFunction back = json_io::stem_from_json(json_io::to_json(s));
  const Quaternion q = random_quaternion(rng);
  EXPECT_LT(qdist(slice_eval(SliceFunction(back), q), slice_eval(SliceFunction(s), q)), 1e-14);
  EXPECT_EQ(json_io::to_json(StemFunction::builtin("square"))["name"], "square");
}

TEST(Json, SpectrumExample) {
  const QMatrix t = QMatrix::from_rows({{Quaternion(), Quaternion::i()}, {-Quaternion::i(), Quaternion()}});
  const json j = json_io::to_json(spherical_spectrum(t));
  ASSERT_EQ(j["reps"].size(), 2u);
  EXPECT_NEAR(j["reps"][0][0].get<double>(), -1.0, 1e-14);
  EXPECT_NEAR(j["reps"][1][0].get<double>(), 1.0, 1e-14);
  EXPECT_EQ(j["mult"], json::array({1, 1}));
  EXPECT_NEAR(j["radius"].get<double>(), 1.0, 1e-14);
}

TEST(Json, ContextExport) {
  Rng rng(104);
  const json j = json_io::to_json(build_context(random_normal(3, rng).t));
  for (const char* key : {"A", "B", "J", "K", "eigs"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j["eigs"].size(), 3u);
  EXPECT_EQ(j["J"]["n"], 3);
}

}  // namespace
}  // namespace qslice
