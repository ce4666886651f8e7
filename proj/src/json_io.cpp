#include "qslice/json_io.hpp"

#include <fstream>
#include <sstream>

#include "qslice/error.hpp"

namespace qslice::json_io {

namespace {

void expect(bool cond, const std::string& what) {
  if (!cond) {
    throw ParseError(what);
  }
}

double number(const json& j, const std::string& what) {
  expect(j.is_number(), what + " must be a number");
  return j.get<double>();
}

int integer(const json& j, const std::string& what) {
  expect(j.is_number_integer() || j.is_number_unsigned(), what + " must be an integer");
  return j.get<int>();
}

std::vector<Monomial> monomials_from_json(const json& j, const std::string& which) {
  std::vector<Monomial> out;
  if (j.is_null()) {
    return out;
  }
  expect(j.is_array(), which + " must be an array");
  for (const auto& t : j) {
    expect(t.is_array() && t.size() == 3, which + " terms are [degX, degY, coef]");
    const Quaternion c = t[2].is_number() ? Quaternion(t[2].get<double>()) : quaternion_from_json(t[2]);
    out.push_back({integer(t[0], "degX"), integer(t[1], "degY"), c});
  }
  return out;
}

json monomials_to_json(const std::vector<Monomial>& terms) {
  json a = json::array();
  for (const auto& m : terms) {
    a.push_back(json::array({m.dx, m.dy, to_json(m.coef)}));
  }
  return a;
}

}  // namespace

json to_json(const Quaternion& q) { return json::array({q.a, q.b, q.c, q.d}); }

Quaternion quaternion_from_json(const json& j) {
  expect(j.is_array() && j.size() == 4, "quaternion must be [a,b,c,d]");
  return {number(j[0], "a"), number(j[1], "b"), number(j[2], "c"), number(j[3], "d")};
}

json to_json(const ComplexifiedQuaternion& w) { return {{"q", to_json(w.q)}, {"p", to_json(w.p)}}; }

ComplexifiedQuaternion complexified_from_json(const json& j) {
  expect(j.is_object() && j.contains("q") && j.contains("p"), "complexified quaternion needs q and p");
  return {quaternion_from_json(j["q"]), quaternion_from_json(j["p"])};
}

json to_json(const QMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.n(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.n(); ++c) {
      row.push_back(to_json(m(r, c)));
    }
    rows.push_back(std::move(row));
  }
  return {{"n", m.n()}, {"rows", std::move(rows)}};
}

QMatrix qmatrix_from_json(const json& j) {
  expect(j.is_object() && j.contains("rows"), "matrix needs \"rows\"");
  const json& rows = j["rows"];
  expect(rows.is_array(), "\"rows\" must be an array");
  expect(j.contains("n"), "matrix needs \"n\"");
  const std::size_t n = rows.size();
  expect(integer(j["n"], "n") == static_cast<int>(n), "\"n\" does not match the number of rows");
  expect(n >= 1, "matrix must have at least one row");
  expect(n <= 128, "matrices beyond n = 128 are not supported");
  QMatrix m(n);
  for (std::size_t r = 0; r < n; ++r) {
    expect(rows[r].is_array() && rows[r].size() == n, "matrix must be square");
    for (std::size_t c = 0; c < n; ++c) {
      m(r, c) = quaternion_from_json(rows[r][c]);
    }
  }
  return m;
}

json to_json(const QVector& v) {
  json a = json::array();
  for (std::size_t k = 0; k < v.size(); ++k) {
    a.push_back(to_json(v[k]));
  }
  return {{"v", std::move(a)}};
}

QVector qvector_from_json(const json& j) {
  expect(j.is_object() && j.contains("v") && j["v"].is_array(), "vector needs \"v\"");
  QVector v(j["v"].size());
  for (std::size_t k = 0; k < v.size(); ++k) {
    v[k] = quaternion_from_json(j["v"][k]);
  }
  return v;
}

json to_json(const CircularSet& k) {
  json reps = json::array();
  for (const auto& p : k.reps()) {
    reps.push_back(json::array({p.alpha, p.beta}));
  }
  return {{"reps", std::move(reps)}};
}

CircularSet circular_set_from_json(const json& j) {
  expect(j.is_object() && j.contains("reps") && j["reps"].is_array(), "circular set needs \"reps\"");
  std::vector<CircularSet::Point> pts;
  for (const auto& p : j["reps"]) {
    expect(p.is_array() && p.size() == 2, "representatives are [alpha, beta]");
    pts.push_back({number(p[0], "alpha"), number(p[1], "beta")});
  }
  return CircularSet(pts);
}

StemFunction stem_from_json(const json& j) {
  expect(j.is_object() && j.contains("kind") && j["kind"].is_string(), "stem needs a \"kind\"");
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "poly") {
    PolynomialStem p;
    p.q1 = monomials_from_json(j.value("Q1", json()), "Q1");
    p.q2 = monomials_from_json(j.value("Q2", json()), "Q2");
    if (j.contains("domain")) {
      return StemFunction::polynomial(std::move(p), domain::Finite{circular_set_from_json(j["domain"])});
    }
    return StemFunction::polynomial(std::move(p));
  }
  if (kind == "builtin") {
    expect(j.contains("name") && j["name"].is_string(), "builtin stem needs a \"name\"");
    const std::string name = j["name"].get<std::string>();
    if (name == "const") {
      expect(j.contains("value"), "constant stem needs a \"value\"");
      return StemFunction::constant(quaternion_from_json(j["value"]));
    }
    try {
      return StemFunction::builtin(name);
    } catch (const Error& e) {
      throw ParseError(e.what());
    }
  }
  if (kind == "tabulated") {
    expect(j.contains("rows") && j["rows"].is_array(), "tabulated stem needs \"rows\"");
    TabulatedStem t;
    for (const auto& r : j["rows"]) {
      expect(r.is_array() && r.size() == 4, "tabulated rows are [alpha, beta, F1, F2]");
      t.rows.push_back({number(r[0], "alpha"), number(r[1], "beta"), quaternion_from_json(r[2]),
                        quaternion_from_json(r[3])});
    }
    return StemFunction::tabulated(std::move(t));
  }
  throw ParseError("unknown stem kind '" + kind + "'");
}

json to_json(const StemFunction& s) {
  if (s.constant_value() && s.label() == "const") {
    return {{"kind", "builtin"}, {"name", "const"}, {"value", to_json(*s.constant_value())}};
  }
  if (s.kind() == StemKind::Builtin) {
    return {{"kind", "builtin"}, {"name", s.label()}};
  }
  if (const auto& p = s.polynomial_data()) {
    return {{"kind", "poly"}, {"Q1", monomials_to_json(p->q1)}, {"Q2", monomials_to_json(p->q2)}};
  }
  throw ParseError("stem of kind '" + s.label() + "' has no JSON form");
}

json to_json(const SphericalSpectrum& s) {
  json reps = json::array();
  for (const auto& p : s.reps()) {
    reps.push_back(json::array({p.alpha, p.beta}));
  }
  return {{"reps", std::move(reps)}, {"mult", s.multiplicity}, {"radius", s.radius}};
}

json to_json(const CalculusContext& ctx) {
  json eigs = json::array();
  for (const auto& l : ctx.lambda) {
    eigs.push_back(json::array({l.real(), l.imag()}));
  }
  return {{"A", to_json(ctx.a)}, {"B", to_json(ctx.b)}, {"J", to_json(ctx.j)}, {"K", to_json(ctx.k)},
          {"eigs", std::move(eigs)}};
}

json to_json(const VerificationReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.worst.name},
                      {"property", c.worst.property},
                      {"status", to_string(c.worst.status)},
                      {"residual", c.worst.residual},
                      {"tolerance", c.worst.tolerance},
                      {"soft", c.worst.soft},
                      {"evaluations", c.evaluations},
                      {"failures", c.failures}});
  }
  return {{"checks", std::move(checks)},
          {"summary", {{"passed", r.passed}, {"failed", r.failed}, {"soft_warned", r.soft_warned}}},
          {"notes", r.notes}};
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open '" + path + "'");
  }
  std::ostringstream os;
  os << in.rdbuf();
  return parse(os.str());
}

std::string dump(const json& j, int indent) { return j.dump(indent); }

}  // namespace qslice::json_io
