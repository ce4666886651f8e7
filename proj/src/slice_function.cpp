#include "qslice/slice_function.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <random>
#include <sstream>

#include "qslice/error.hpp"

namespace qslice {

namespace {

double point_distance(const CircularSet::Point& p, double alpha, double beta) {
  return std::hypot(p.alpha - alpha, p.beta - beta);
}

bool finite_sets_equal(const CircularSet& a, const CircularSet& b) {
  if (a.size() != b.size()) {
    return false;
  }
  const double tol = std::max(a.tolerance(), b.tolerance());
  for (const auto& p : a.reps()) {
    if (!b.contains(p.alpha, p.beta, tol)) {
      return false;
    }
  }
  return true;
}

Domain combine_domains(const Domain& a, const Domain& b) {
  if (std::holds_alternative<domain::Plane>(a)) {
    return b;
  }
  if (std::holds_alternative<domain::Plane>(b)) {
    return a;
  }
  if (!domain_equal(a, b)) {
    throw Error(ErrorCode::DomainMismatch, "slice functions are defined on different sets");
  }
  return a;
}

double value_scale(const StemValue& v) { return std::max(v.f1.norm(), v.f2.norm()); }

std::vector<Monomial> poly_mul(const std::vector<Monomial>& p, const std::vector<Monomial>& r) {
  std::vector<Monomial> out;
  out.reserve(p.size() * r.size());
  for (const auto& a : p) {
    for (const auto& b : r) {
      out.push_back({a.dx + b.dx, a.dy + b.dy, a.coef * b.coef});
    }
  }
  return out;
}

std::vector<Monomial> poly_scaled(std::vector<Monomial> p, double s) {
  for (auto& m : p) {
    m.coef *= s;
  }
  return p;
}

std::vector<Monomial> concat(std::vector<Monomial> a, const std::vector<Monomial>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::vector<Monomial> merge_terms(const std::vector<Monomial>& terms) {
  std::map<std::pair<int, int>, Quaternion> acc;
  for (const auto& m : terms) {
    acc[{m.dx, m.dy}] += m.coef;
  }
  std::vector<Monomial> out;
  for (const auto& [deg, coef] : acc) {
    if (coef.norm2() > 0.0) {
      out.push_back({deg.first, deg.second, coef});
    }
  }
  return out;
}

}  // namespace

CircularSet::CircularSet(const std::vector<Point>& points, double tol) : tol_(tol) {
  std::vector<Point> sorted;
  sorted.reserve(points.size());
  for (const auto& p : points) {
    sorted.push_back({p.alpha, std::fabs(p.beta)});
  }
  std::sort(sorted.begin(), sorted.end(), [](const Point& x, const Point& y) {
    return x.alpha < y.alpha || (x.alpha == y.alpha && x.beta < y.beta);
  });
  for (const auto& p : sorted) {
    if (!contains(p.alpha, p.beta, tol_)) {
      reps_.push_back(p);
    }
  }
}

bool CircularSet::contains(double alpha, double beta, double tol) const {
  const double b = std::fabs(beta);
  return std::any_of(reps_.begin(), reps_.end(), [&](const Point& p) { return point_distance(p, alpha, b) <= tol; });
}

bool domain_contains(const Domain& d, double alpha, double beta, double tol) {
  const double b = std::fabs(beta);
  return std::visit(
      [&](const auto& dom) -> bool {
        using D = std::decay_t<decltype(dom)>;
        if constexpr (std::is_same_v<D, domain::Plane>) {
          return std::isfinite(alpha) && std::isfinite(beta);
        } else if constexpr (std::is_same_v<D, domain::Rectangle>) {
          return alpha >= dom.alpha_min - tol && alpha <= dom.alpha_max + tol && b <= dom.beta_max + tol;
        } else if constexpr (std::is_same_v<D, domain::RealInterval>) {
          return b <= tol && alpha >= dom.lo - tol && alpha <= dom.hi + tol;
        } else {
          return dom.set.contains(alpha, b, std::max(tol, dom.set.tolerance()));
        }
      },
      d);
}

bool domain_equal(const Domain& a, const Domain& b) {
  if (a.index() != b.index()) {
    return false;
  }
  return std::visit(
      [&](const auto& x) -> bool {
        using D = std::decay_t<decltype(x)>;
        const auto& y = std::get<D>(b);
        if constexpr (std::is_same_v<D, domain::Plane>) {
          return true;
        } else if constexpr (std::is_same_v<D, domain::Rectangle>) {
          return x.alpha_min == y.alpha_min && x.alpha_max == y.alpha_max && x.beta_max == y.beta_max;
        } else if constexpr (std::is_same_v<D, domain::RealInterval>) {
          return x.lo == y.lo && x.hi == y.hi;
        } else {
          return finite_sets_equal(x.set, y.set);
        }
      },
      a);
}

PolynomialStem normalize_polynomial(PolynomialStem p, double tol) {
  auto filter = [tol](const std::vector<Monomial>& terms, int parity, const char* which) {
    std::vector<Monomial> kept;
    for (const auto& m : merge_terms(terms)) {
      if (m.dx < 0 || m.dy < 0) {
        throw Error(ErrorCode::InvalidArgument, "negative monomial degree");
      }
      if (m.dy % 2 == parity) {
        kept.push_back(m);
      } else if (m.coef.norm() > tol) {
        throw Error(ErrorCode::SymmetryViolation, std::string(which) + " has a term of the wrong parity in Y");
      }
    }
    return kept;
  };
  PolynomialStem out;
  out.q1 = filter(p.q1, 0, "Q1");
  out.q2 = filter(p.q2, 1, "Q2");
  return out;
}

Quaternion eval_polynomial(const std::vector<Monomial>& q, double x, double y) {
  Quaternion s;
  for (const auto& m : q) {
    s += m.coef * (std::pow(x, m.dx) * std::pow(y, m.dy));
  }
  return s;
}

StemFunction::StemFunction(Evaluator eval, Domain dom, std::string label)
    : eval_(std::move(eval)), domain_(std::move(dom)), kind_(StemKind::Custom), label_(std::move(label)) {
  validate_stem_symmetry(eval_, domain_);
}

StemFunction StemFunction::polynomial(PolynomialStem p, Domain dom) {
  StemFunction s;
  auto poly = normalize_polynomial(std::move(p));
  s.eval_ = [poly](double x, double y) {
    return StemValue{eval_polynomial(poly.q1, x, y), eval_polynomial(poly.q2, x, y)};
  };
  s.domain_ = std::move(dom);
  s.kind_ = StemKind::Polynomial;
  s.label_ = "poly";
  s.poly_ = std::move(poly);
  return s;
}

StemFunction StemFunction::constant(const Quaternion& value, Domain dom) {
  StemFunction s = polynomial({{{0, 0, value}}, {}}, std::move(dom));
  s.label_ = "const";
  s.const_ = value;
  return s;
}

StemFunction StemFunction::builtin(const std::string& name) {
  auto make = [&](Evaluator e, Domain dom) {
    StemFunction s;
    s.eval_ = std::move(e);
    s.domain_ = std::move(dom);
    s.kind_ = StemKind::Builtin;
    s.label_ = name;
    return s;
  };
  auto poly_builtin = [&](PolynomialStem p) {
    StemFunction s = polynomial(std::move(p));
    s.kind_ = StemKind::Builtin;
    s.label_ = name;
    return s;
  };
  if (name == "id") {
    return poly_builtin({{{1, 0, 1.0}}, {{0, 1, 1.0}}});
  }
  if (name == "conj") {
    return poly_builtin({{{1, 0, 1.0}}, {{0, 1, -1.0}}});
  }
  if (name == "re") {
    return poly_builtin({{{1, 0, 1.0}}, {}});
  }
  if (name == "square") {
    return poly_builtin({{{2, 0, 1.0}, {0, 2, -1.0}}, {{1, 1, 2.0}}});
  }
  if (name == "one") {
    StemFunction s = poly_builtin({{{0, 0, 1.0}}, {}});
    s.const_ = Quaternion(1.0);
    return s;
  }
  if (name == "immod") {
    return make([](double, double y) { return StemValue{Quaternion(std::fabs(y)), Quaternion()}; }, domain::Plane{});
  }
  if (name == "exp") {
    return make(
        [](double x, double y) {
          const double e = std::exp(x);
          return StemValue{Quaternion(e * std::cos(y)), Quaternion(e * std::sin(y))};
        },
        domain::Plane{});
  }
  if (name == "sqrt") {
    return make([](double x, double) { return StemValue{Quaternion(std::sqrt(std::max(x, 0.0))), Quaternion()}; },
                domain::RealInterval{0.0, std::numeric_limits<double>::infinity()});
  }
  throw Error(ErrorCode::InvalidArgument, "unknown builtin stem '" + name + "'");
}

StemFunction StemFunction::tabulated(TabulatedStem table, double tol) {
  std::vector<CircularSet::Point> pts;
  for (const auto& r : table.rows) {
    if (r.beta < 0.0) {
      throw Error(ErrorCode::InvalidArgument, "tabulated rows need beta >= 0");
    }
    pts.push_back({r.alpha, r.beta});
  }
  CircularSet set(pts, tol);
  if (set.size() != table.rows.size()) {
    throw Error(ErrorCode::InvalidArgument, "tabulated rows closer than the merge tolerance");
  }
  StemFunction s;
  s.eval_ = [rows = std::move(table.rows), tol](double x, double y) {
    const double b = std::fabs(y);
    for (const auto& r : rows) {
      if (std::hypot(r.alpha - x, r.beta - b) <= tol) {
        return StemValue{r.f1, y < 0.0 ? -r.f2 : r.f2};
      }
    }
    throw Error(ErrorCode::PointOutsideDomain, "point not in table");
  };
  s.domain_ = domain::Finite{set};
  s.kind_ = StemKind::Tabulated;
  s.label_ = "tabulated";
  validate_stem_symmetry(s.eval_, s.domain_);
  return s;
}

StemValue StemFunction::operator()(double alpha, double beta) const {
  if (!domain_contains(domain_, alpha, beta)) {
    std::ostringstream os;
    os << "(" << alpha << ", " << beta << ") is outside the domain of stem '" << label_ << "'";
    throw Error(ErrorCode::PointOutsideDomain, os.str());
  }
  return eval_(alpha, beta);
}

StemFunction StemFunction::with_domain(Domain dom) const {
  StemFunction s = *this;
  s.domain_ = std::move(dom);
  return s;
}

std::vector<CircularSet::Point> domain_samples(const Domain& d, std::size_t count) {
  std::mt19937_64 rng(0x5eed);
  std::vector<CircularSet::Point> out;
  auto uniform = [&](double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); };
  std::visit(
      [&](const auto& dom) {
        using D = std::decay_t<decltype(dom)>;
        if constexpr (std::is_same_v<D, domain::Plane>) {
          for (std::size_t s = 0; s < count; ++s) {
            const bool real_axis = s % 8 == 7;
            out.push_back({uniform(-2.0, 2.0), real_axis ? 0.0 : uniform(0.05, 2.0)});
          }
        } else if constexpr (std::is_same_v<D, domain::Rectangle>) {
          for (std::size_t s = 0; s < count; ++s) {
            const bool real_axis = s % 8 == 7 || dom.beta_max <= 0.0;
            out.push_back({uniform(dom.alpha_min, std::max(dom.alpha_min, dom.alpha_max) + 1e-300),
                           real_axis ? 0.0 : uniform(0.0, dom.beta_max)});
          }
        } else if constexpr (std::is_same_v<D, domain::RealInterval>) {
          const double hi = std::isfinite(dom.hi) ? dom.hi : dom.lo + 10.0;
          for (std::size_t s = 0; s < count; ++s) {
            out.push_back({uniform(dom.lo, std::max(dom.lo, hi) + 1e-300), 0.0});
          }
        } else {
          out = dom.set.reps();
        }
      },
      d);
  return out;
}

void validate_stem_symmetry(const StemFunction::Evaluator& eval, const Domain& d, double tol) {
  for (const auto& p : domain_samples(d)) {
    const StemValue up = eval(p.alpha, p.beta);
    const double scale = std::max(1.0, value_scale(up));
    if (p.beta == 0.0) {
      if (up.f2.norm() > tol * scale) {
        throw Error(ErrorCode::SymmetryViolation, "F2 does not vanish on the real axis");
      }
      continue;
    }
    const StemValue down = eval(p.alpha, -p.beta);
    if ((up.f1 - down.f1).norm() > tol * scale || (up.f2 + down.f2).norm() > tol * scale) {
      throw Error(ErrorCode::SymmetryViolation, "stem is not an even-odd pair");
    }
  }
}

bool SliceClass::is_cslice(const Quaternion& iota, double tol) const {
  if (kind == Kind::Intrinsic) {
    return true;
  }
  if (!axis) {
    return false;
  }
  const Quaternion u = iota.imag() / iota.imag_norm();
  return std::fabs(std::fabs(dot(*axis, u)) - 1.0) <= tol;
}

std::string to_string(const SliceClass& c) {
  switch (c.kind) {
    case SliceClass::Kind::Intrinsic: return "intrinsic";
    case SliceClass::Kind::Circular: return c.axis ? "circular+cslice" : "circular";
    case SliceClass::Kind::CSlice: return "cslice";
    case SliceClass::Kind::General: return "general";
  }
  return "general";
}

SliceClass classify_slice(const SliceFunction& f) {
  constexpr double tol = 1e-10;
  std::vector<StemValue> vals;
  double scale = 1.0;
  for (const auto& p : domain_samples(f.domain())) {
    vals.push_back(f.stem().eval_unchecked(p.alpha, p.beta));
    scale = std::max(scale, value_scale(vals.back()));
  }
  bool real_valued = true;
  bool f2_zero = true;
  Quaternion widest;
  for (const auto& v : vals) {
    for (const Quaternion* q : {&v.f1, &v.f2}) {
      if (q->imag_norm() > tol * scale) {
        real_valued = false;
      }
      if (q->imag_norm() > widest.norm()) {
        widest = q->imag();
      }
    }
    if (v.f2.norm() > tol * scale) {
      f2_zero = false;
    }
  }
  SliceClass out;
  if (real_valued) {
    out.kind = SliceClass::Kind::Intrinsic;
    return out;
  }
  const Quaternion axis = widest / widest.norm();
  bool single_slice = true;
  for (const auto& v : vals) {
    for (const Quaternion* q : {&v.f1, &v.f2}) {
      const Quaternion w = q->imag();
      if ((w - axis * dot(w, axis)).norm() > tol * scale) {
        single_slice = false;
      }
    }
  }
  if (single_slice) {
    out.axis = axis;
  }
  if (f2_zero) {
    out.kind = SliceClass::Kind::Circular;
  } else if (single_slice) {
    out.kind = SliceClass::Kind::CSlice;
  } else {
    out.kind = SliceClass::Kind::General;
  }
  return out;
}

SliceFunction::SliceFunction(StemFunction stem) : stem_(std::move(stem)) { class_ = classify_slice(*this); }

Quaternion slice_eval(const SliceFunction& f, const Quaternion& q) {
  const SphereDecomposition d = sphere_decompose(q);
  const StemValue v = f.stem()(d.alpha, d.beta);
  if (!d.iota) {
    return v.f1;
  }
  return v.f1 + d.iota->value() * v.f2;
}

SliceFunction slice_product(const SliceFunction& f, const SliceFunction& g) {
  const Domain dom = combine_domains(f.domain(), g.domain());
  const auto& pf = f.stem().polynomial_data();
  const auto& pg = g.stem().polynomial_data();
  if (pf && pg) {
    PolynomialStem p;
    p.q1 = concat(poly_mul(pf->q1, pg->q1), poly_scaled(poly_mul(pf->q2, pg->q2), -1.0));
    p.q2 = concat(poly_mul(pf->q1, pg->q2), poly_mul(pf->q2, pg->q1));
    return SliceFunction(StemFunction::polynomial(std::move(p), dom));
  }
  StemFunction fs = f.stem();
  StemFunction gs = g.stem();
  auto eval = [fs, gs](double x, double y) {
    const StemValue a = fs.eval_unchecked(x, y);
    const StemValue b = gs.eval_unchecked(x, y);
    const ComplexifiedQuaternion p = hc_mul(a.as_complexified(), b.as_complexified());
    return StemValue{p.q, p.p};
  };
  return SliceFunction(StemFunction(eval, dom, "(" + fs.label() + ")*(" + gs.label() + ")"));
}

SliceFunction slice_sum(const SliceFunction& f, const SliceFunction& g) {
  const Domain dom = combine_domains(f.domain(), g.domain());
  const auto& pf = f.stem().polynomial_data();
  const auto& pg = g.stem().polynomial_data();
  if (pf && pg) {
    return SliceFunction(StemFunction::polynomial({concat(pf->q1, pg->q1), concat(pf->q2, pg->q2)}, dom));
  }
  StemFunction fs = f.stem();
  StemFunction gs = g.stem();
  auto eval = [fs, gs](double x, double y) {
    const StemValue a = fs.eval_unchecked(x, y);
    const StemValue b = gs.eval_unchecked(x, y);
    return StemValue{a.f1 + b.f1, a.f2 + b.f2};
  };
  return SliceFunction(StemFunction(eval, dom, "(" + fs.label() + ")+(" + gs.label() + ")"));
}

SliceFunction slice_right_scale(const SliceFunction& f, const Quaternion& q) {
  return slice_product(f, SliceFunction(StemFunction::constant(q)));
}

SliceFunction slice_left_scale(const Quaternion& q, const SliceFunction& f) {
  return slice_product(SliceFunction(StemFunction::constant(q)), f);
}

SliceFunction slice_star(const SliceFunction& f) {
  if (const auto& p = f.stem().polynomial_data()) {
    PolynomialStem s = *p;
    for (auto& m : s.q1) {
      m.coef = m.coef.conj();
    }
    for (auto& m : s.q2) {
      m.coef = -m.coef.conj();
    }
    return SliceFunction(StemFunction::polynomial(std::move(s), f.domain()));
  }
  StemFunction fs = f.stem();
  auto eval = [fs](double x, double y) {
    const StemValue a = fs.eval_unchecked(x, y);
    return StemValue{a.f1.conj(), -a.f2.conj()};
  };
  return SliceFunction(StemFunction(eval, f.domain(), "(" + fs.label() + ")*"));
}

Components decompose_components(const SliceFunction& f, const SpherePoint& iota, const SpherePoint& kappa) {
  const Quaternion& u = iota.value();
  const Quaternion& v = kappa.value();
  if (std::fabs(dot(u, v)) > 1e-12) {
    throw Error(ErrorCode::BasisDegenerate, "iota and kappa must be orthogonal");
  }
  const std::array<Quaternion, 4> basis = {Quaternion(1.0), u, v, u * v};
  auto component = [&](std::size_t l) {
    const Quaternion e = basis[l];
    if (const auto& p = f.stem().polynomial_data()) {
      PolynomialStem c = *p;
      for (auto* terms : {&c.q1, &c.q2}) {
        for (auto& m : *terms) {
          m.coef = Quaternion(dot(e, m.coef));
        }
      }
      return SliceFunction(StemFunction::polynomial(std::move(c), f.domain()));
    }
    StemFunction fs = f.stem();
    auto eval = [fs, e](double x, double y) {
      const StemValue a = fs.eval_unchecked(x, y);
      return StemValue{Quaternion(dot(e, a.f1)), Quaternion(dot(e, a.f2))};
    };
    return SliceFunction(StemFunction(eval, f.domain(), fs.label() + "[" + std::to_string(l) + "]"));
  };
  return {component(0), component(1), component(2), component(3)};
}

double sup_norm(const SliceFunction& f, const CircularSet& k) {
  if (k.empty()) {
    throw Error(ErrorCode::EmptySet, "sup norm over an empty set");
  }
  double m = 0.0;
  for (const auto& p : k.reps()) {
    m = std::max(m, hc_norm(f.stem()(p.alpha, p.beta).as_complexified()));
  }
  return m;
}

}  // namespace qslice
