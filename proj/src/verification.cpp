#include "qslice/verification.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <map>
#include <sstream>

#include "qslice/calculus.hpp"
#include "qslice/complexified.hpp"
#include "qslice/error.hpp"
#include "qslice/spectral.hpp"

namespace qslice {

namespace {

using Points = std::vector<CircularSet::Point>;

double cnorm(const ComplexMatrix& c) {
  if (c.size() == 0) {
    return 0.0;
  }
  Eigen::JacobiSVD<ComplexMatrix> svd(c);
  return svd.singularValues()(0);
}

Points image_points(const SliceFunction& f, const Points& reps) {
  Points out;
  for (const auto& p : reps) {
    out.push_back(fold(slice_eval(f, Quaternion(p.alpha, p.beta))));
  }
  return out;
}

ComplexifiedQuaternion random_hc(Rng& rng) { return {random_quaternion(rng), random_quaternion(rng)}; }

SliceFunction cslice_polynomial(Rng& rng, int degree) {
  std::normal_distribution<double> g;
  PolynomialStem p;
  for (int dx = 0; dx <= degree; ++dx) {
    for (int dy = 0; dx + dy <= degree; ++dy) {
      const Quaternion c(0.5 * g(rng), 0.5 * g(rng), 0.0, 0.0);
      (dy % 2 == 0 ? p.q1 : p.q2).push_back({dx, dy, c});
    }
  }
  return SliceFunction(StemFunction::polynomial(std::move(p)));
}

SliceFunction circular_polynomial(Rng& rng, int degree) {
  PolynomialStem p;
  for (int dx = 0; dx <= degree; ++dx) {
    for (int dy = 0; dx + dy <= degree; dy += 2) {
      p.q1.push_back({dx, dy, random_quaternion(rng) * 0.5});
    }
  }
  return SliceFunction(StemFunction::polynomial(std::move(p)));
}

// F1 = -i |beta| w, F2 = beta w with w = 1 + alpha^2: zero on the upper half of C_i only.
SliceFunction upper_half_vanishing() {
  auto eval = [](double x, double y) {
    const double w = 1.0 + x * x;
    return StemValue{Quaternion(0.0, -std::fabs(y) * w), Quaternion(y * w)};
  };
  return SliceFunction(StemFunction(eval, domain::Plane{}, "upper-half-vanishing"));
}

SliceFunction intrinsic_star(const SliceFunction& f) { return slice_star(f); }

SliceFunction tilde_function(const Components& c, const Quaternion& iota, const Quaternion& kappa) {
  SliceFunction s = slice_sum(c.f0, slice_right_scale(c.f1, iota));
  s = slice_sum(s, slice_right_scale(intrinsic_star(c.f2), kappa));
  return slice_sum(s, slice_right_scale(intrinsic_star(c.f3), iota * kappa));
}

}  // namespace

std::set<Suite> parse_suites(const std::string& name) {
  if (name == "all") {
    return {Suite::Algebra, Suite::Spectral, Suite::Calculus};
  }
  if (name == "algebra") {
    return {Suite::Algebra};
  }
  if (name == "spectral") {
    return {Suite::Spectral};
  }
  if (name == "calculus") {
    return {Suite::Calculus};
  }
  throw Error(ErrorCode::InvalidArgument, "unknown suite '" + name + "'");
}

VerificationReport summarize(const std::vector<CheckRecord>& records, std::vector<std::string> notes) {
  VerificationReport r;
  r.notes = std::move(notes);
  std::map<std::string, std::size_t> index;
  for (const auto& rec : records) {
    auto it = index.find(rec.name);
    if (it == index.end()) {
      it = index.emplace(rec.name, r.checks.size()).first;
      r.checks.push_back({rec, 0, 0, 0});
    }
    CheckSummary& s = r.checks[it->second];
    ++s.evaluations;
    if (rec.status == CheckStatus::Fail) {
      ++s.failures;
    } else if (rec.status == CheckStatus::SoftWarn) {
      ++s.warnings;
    }
    const double cur = s.worst.tolerance > 0.0 ? s.worst.residual / s.worst.tolerance : s.worst.residual;
    const double nxt = rec.tolerance > 0.0 ? rec.residual / rec.tolerance : rec.residual;
    if (!(nxt <= cur) || s.evaluations == 1) {
      s.worst = rec;
    }
  }
  for (auto& s : r.checks) {
    if (s.failures > 0) {
      s.worst.status = CheckStatus::Fail;
      ++r.failed;
    } else if (s.warnings > 0) {
      s.worst.status = CheckStatus::SoftWarn;
      ++r.soft_warned;
    } else {
      s.worst.status = CheckStatus::Pass;
      ++r.passed;
    }
  }
  return r;
}

void algebra_checks(const QMatrix& m, Rng& rng, std::vector<CheckRecord>& out) {
  double cstar = 0.0;
  double submul = 0.0;
  for (int s = 0; s < 200; ++s) {
    const ComplexifiedQuaternion w = random_hc(rng);
    const ComplexifiedQuaternion y = random_hc(rng);
    const double nw = hc_norm(w);
    cstar = std::max(cstar, std::fabs(hc_norm(hc_mul(hc_star(w), w)) - nw * nw) / (nw * nw));
    submul = std::max(submul, (hc_norm(hc_mul(w, y)) - nw * hc_norm(y)) / (nw * hc_norm(y)));
  }
  out.push_back(make_check("hc-cstar-identity", "||w* w|| = ||w||^2 in H_C", cstar, 1e-12));
  out.push_back(make_check("hc-submultiplicative", "||w y|| <= ||w|| ||y|| in H_C", std::max(submul, 0.0), 1e-10));

  const ComplexifiedQuaternion w = random_hc(rng);
  double sampled = 0.0;
  for (int s = 0; s < 10000; ++s) {
    sampled = std::max(sampled, hc_slice_abs(w, random_sphere_point(rng).value()));
  }
  const double nw = hc_norm(w);
  out.push_back(make_check("hc-sup-overshoot", "sampled |q + iota p| never exceeds ||w||",
                           std::max(0.0, sampled - nw) / nw, 1e-12));
  out.push_back(make_check("hc-sup-undershoot", "sampled sup of |q + iota p| approaches ||w||",
                           std::max(0.0, nw - sampled) / nw, 1e-3));

  const std::size_t n = std::max<std::size_t>(m.n(), 1);
  const QMatrix a = m.n() > 0 ? m : random_qmatrix(n, rng);
  const QMatrix b = random_qmatrix(n, rng);
  const ComplexMatrix ca = chi_embed(a);
  const ComplexMatrix cb = chi_embed(b);
  out.push_back(make_check("chi-homomorphism", "chi(MN) = chi(M) chi(N)",
                           cnorm(chi_embed(a * b) - ca * cb) / std::max(1e-300, cnorm(ca) * cnorm(cb)), 1e-11));
  out.push_back(make_check("chi-adjoint", "chi(M*) = chi(M)^H",
                           cnorm(chi_embed(qmat_adjoint(a)) - ca.adjoint()) / std::max(1.0, cnorm(ca)), 1e-15));
  out.push_back(make_check("chi-roundtrip", "chi_extract inverts chi_embed", (chi_extract(ca) - a).max_abs(), 0.0));
}

void spectral_checks(const QMatrix& t, Rng& rng, std::vector<CheckRecord>& out) {
  const SpectralClassReport rep = verify_spectral_classes(t);
  out.insert(out.end(), rep.checks.begin(), rep.checks.end());
  const double nt = op_norm(t);
  if (is_normal(t) && nt > 0.0) {
    const std::vector<double> g = gelfand_check(t, 6);
    double dev = 0.0;
    for (double v : g) {
      dev = std::max(dev, std::fabs(v - nt));
    }
    out.push_back(make_check("gelfand-constant", "||T^(2^k)||^(1/2^k) = ||T|| for normal T", dev / nt, 1e-8));
  }
  const double qn = 2.0 * std::max(nt, 0.5);
  const Quaternion dir = random_quaternion(rng);
  const Quaternion q = dir * (qn / dir.norm());
  const QMatrix r = resolvent_series(t, q, 1e-14);
  const QMatrix d = delta_q(t, q);
  const QMatrix id = QMatrix::identity(t.n());
  out.push_back(make_check("resolvent-left-inverse", "Delta_q(T) R = I for the resolvent series",
                           op_norm(d * r - id), 1e-8));
  out.push_back(make_check("resolvent-right-inverse", "R Delta_q(T) = I for the resolvent series",
                           op_norm(r * d - id), 1e-8));
  out.push_back(make_check("resolvent-vs-direct", "series agrees with the direct inverse of Delta_q(T)",
                           op_norm(r - qmat_inverse(d)) * d.max_abs(), 1e-8));
}

void calculus_checks(const QMatrix& t, Rng& rng, std::vector<CheckRecord>& out) {
  const std::size_t n = t.n();
  const JConstruction jc = construct_j_detailed(t);
  const CalculusContext ctx = build_context(t);
  const double nt = ctx.norm_t;
  const double s = std::max(1.0, nt);
  const QMatrix id = QMatrix::identity(n);
  const QMatrix ts = qmat_adjoint(t);

  // Decomposition T = A + J B and the structures J, K.
  out.push_back(make_check("decomposition", "T = A + J B", op_norm(t - (ctx.a + ctx.j * ctx.b)),
                           1e-10 * std::max(nt, 1e-300)));
  const QMatrix ja = qmat_adjoint(ctx.j);
  const QMatrix ka = qmat_adjoint(ctx.k);
  out.push_back(make_check("j-anti-self-adjoint-unitary", "J* = -J and J* J = I",
                           std::max(op_norm(ja + ctx.j), op_norm(ja * ctx.j - id)), 1e-9));
  out.push_back(make_check("k-anti-self-adjoint-unitary", "K* = -K and K* K = I",
                           std::max(op_norm(ka + ctx.k), op_norm(ka * ctx.k - id)), 1e-9));
  out.push_back(make_check("jk-anticommute", "J K = -K J", op_norm(ctx.j * ctx.k + ctx.k * ctx.j), 1e-9));
  out.push_back(make_check("j-commutes-t", "J T = T J and J T* = T* J",
                           std::max(op_norm(ctx.j * t - t * ctx.j), op_norm(ctx.j * ts - ts * ctx.j)), 1e-9 * s));
  out.push_back(make_check("k-commutes-ab", "K A = A K and K B = B K",
                           std::max(op_norm(ctx.k * ctx.a - ctx.a * ctx.k), op_norm(ctx.k * ctx.b - ctx.b * ctx.k)),
                           1e-9 * s));
  double min_im = 0.0;
  for (const auto& l : ctx.lambda) {
    min_im = std::min(min_im, l.imag());
  }
  out.push_back(make_check("plus-spectrum-upper", "eigenvalues of T on H+ lie in the closed upper half-plane",
                           -min_im, 1e-10 * s));

  const Points reps = spherical_spectrum(t).reps();
  const CircularSet sigma(reps);

  // Intrinsic calculus.
  std::vector<SliceFunction> intrinsic = {SliceFunction(StemFunction::builtin("exp")),
                                          SliceFunction(StemFunction::builtin("square")),
                                          SliceFunction(random_polynomial_stem(3, rng, true))};
  std::vector<QMatrix> fi;
  for (const auto& f : intrinsic) {
    fi.push_back(intrinsic_calculus(ctx, f));
  }
  for (std::size_t a = 0; a < intrinsic.size(); ++a) {
    const double sup = sup_norm(intrinsic[a], sigma);
    const double sc = std::max(1.0, sup);
    out.push_back(make_check("intrinsic-isometry", "||f(T)|| = sup norm of f on the spectrum",
                             std::fabs(op_norm(fi[a]) - sup), 1e-8 * sc));
    out.push_back(make_check("intrinsic-spectral-map", "spectrum of f(T) is the image of the spectrum",
                             hausdorff(spherical_spectrum(fi[a]).reps(), image_points(intrinsic[a], reps)),
                             1e-7 * sc));
    out.push_back(make_check("intrinsic-star", "f*(T) = f(T)*",
                             op_norm(intrinsic_calculus(ctx, slice_star(intrinsic[a])) - qmat_adjoint(fi[a])),
                             1e-8 * sc));
    out.push_back(make_check("intrinsic-k-transport", "f(T) K = K f*(T)",
                             op_norm(fi[a] * ctx.k - ctx.k * intrinsic_calculus(ctx, slice_star(intrinsic[a]))),
                             1e-8 * sc));
    const std::size_t b = (a + 1) % intrinsic.size();
    const QMatrix prod = intrinsic_calculus(ctx, slice_product(intrinsic[a], intrinsic[b]));
    out.push_back(make_check("intrinsic-homomorphism", "(f g)(T) = f(T) g(T)", op_norm(prod - fi[a] * fi[b]),
                             1e-8 * std::max(1.0, op_norm(fi[a]) * op_norm(fi[b]))));
  }
  out.push_back(make_check("intrinsic-identity", "id(T) = T",
                           op_norm(intrinsic_calculus(ctx, SliceFunction(StemFunction::builtin("id"))) - t),
                           1e-10 * s));
  out.push_back(make_check("intrinsic-unit", "1(T) = I",
                           op_norm(intrinsic_calculus(ctx, SliceFunction(StemFunction::builtin("one"))) - id), 1e-10));

  // Polynomial route against the eigenvector route.
  const QMatrix sq = fi[1];
  const QMatrix poly_sq = polynomial_calculus(ctx, {{2, 0, 1.0}, {0, 2, -1.0}}, {{1, 1, 2.0}});
  out.push_back(make_check("square-vs-product", "square(T) = T T", op_norm(sq - t * t), 1e-9 * s * s));
  out.push_back(make_check("square-vs-polynomial", "square(T) = Q1(A,B) + J Q2(A,B)", op_norm(sq - poly_sq),
                           1e-9 * s * s));

  // C_i calculus.
  const SliceFunction ci = SliceFunction(StemFunction::constant(ctx.iota));
  out.push_back(make_check("cslice-constant-iota", "c_i(T) = J", op_norm(cslice_calculus(ctx, ci) - ctx.j), 1e-12));
  const SliceFunction fc = cslice_polynomial(rng, 3);
  const QMatrix fct = cslice_calculus(ctx, fc);
  Points upper_images = image_points(fc, reps);
  double sup_upper = 0.0;
  for (const auto& p : reps) {
    sup_upper = std::max(sup_upper, slice_eval(fc, Quaternion(p.alpha, p.beta)).norm());
  }
  const double scc = std::max(1.0, sup_upper);
  out.push_back(make_check("cslice-norm", "||f(T)|| = sup of |f| on the upper half of the spectrum slice",
                           std::fabs(op_norm(fct) - sup_upper), 1e-8 * scc));
  out.push_back(make_check("cslice-spectral-map", "spectrum of f(T) is swept by f on the upper half slice",
                           hausdorff(spherical_spectrum(fct).reps(), upper_images), 1e-7 * scc));
  const SliceFunction vanish = upper_half_vanishing();
  out.push_back(make_check("cslice-kernel", "f vanishing on the upper half slice gives f(T) = 0",
                           op_norm(cslice_calculus(ctx, vanish)), 1e-8 * s));
  const SliceFunction gc = cslice_polynomial(rng, 2);
  out.push_back(make_check("cslice-homomorphism", "(f g)(T) = f(T) g(T) on C_i functions",
                           op_norm(cslice_calculus(ctx, slice_product(fc, gc)) - fct * cslice_calculus(ctx, gc)),
                           1e-8 * std::max(1.0, op_norm(fct) * op_norm(cslice_calculus(ctx, gc)))));

  // Circular calculus.
  const SliceFunction ck = SliceFunction(StemFunction::constant(ctx.kappa));
  out.push_back(make_check("circular-constant-kappa", "c_j(T) = K", op_norm(circular_calculus(ctx, ck) - ctx.k),
                           1e-10));
  const SliceFunction f1 = circular_polynomial(rng, 2);
  const SliceFunction g1 = circular_polynomial(rng, 2);
  const QMatrix f1t = circular_calculus(ctx, f1);
  const QMatrix g1t = circular_calculus(ctx, g1);
  const double scf = std::max(1.0, op_norm(f1t) * op_norm(g1t));
  out.push_back(make_check("circular-homomorphism", "(f g)(T) = f(T) g(T) on circular functions",
                           op_norm(circular_calculus(ctx, slice_product(f1, g1)) - f1t * g1t), 1e-8 * scf));
  out.push_back(make_check("circular-star", "f*(T) = f(T)* on circular functions",
                           op_norm(circular_calculus(ctx, slice_star(f1)) - qmat_adjoint(f1t)),
                           1e-8 * std::max(1.0, op_norm(f1t))));
  const double sup_c = sup_norm(f1, sigma);
  out.push_back(make_check("circular-spectral-containment", "spectrum of f(T) lies in the circularized image",
                           one_sided_hausdorff(spherical_spectrum(f1t).reps(), image_points(f1, reps)),
                           1e-7 * std::max(1.0, sup_c)));
  out.push_back(make_check("circular-norm-bound", "||f(T)|| <= sup norm", std::max(0.0, op_norm(f1t) - sup_c),
                           1e-8 * std::max(1.0, sup_c)));
  out.push_back(make_check("circular-isometry", "||f(T)|| = sup norm (soft)", std::fabs(op_norm(f1t) - sup_c),
                           1e-8 * std::max(1.0, sup_c), true));

  // General calculus.
  const SliceFunction fg = SliceFunction(random_polynomial_stem(3, rng));
  const QMatrix fgt = general_calculus(ctx, fg);
  const Quaternion q = random_quaternion(rng);
  const double scg = std::max(1.0, op_norm(fgt)) * std::max(1.0, q.norm());
  out.push_back(make_check("general-right-scalar", "(f q)(T) = f(T) q",
                           op_norm(general_calculus(ctx, slice_right_scale(fg, q)) - fgt * ctx.left(q)), 1e-9 * scg));
  const Components comp = decompose_components(fg, SpherePoint(ctx.iota), SpherePoint(ctx.kappa));
  const SliceFunction tilde = tilde_function(comp, ctx.iota, ctx.kappa);
  out.push_back(make_check("general-adjoint-rule", "f(T)* = (f~)*(T)",
                           op_norm(qmat_adjoint(fgt) - general_calculus(ctx, slice_star(tilde))),
                           1e-9 * std::max(1.0, op_norm(fgt))));

  // Contour calculus for slice regular polynomials.
  const double radius = default_contour_radius(ctx);
  std::normal_distribution<double> gauss;
  const std::vector<std::pair<std::string, SliceFunction>> regular = {
      {"one", SliceFunction(StemFunction::builtin("one"))},
      {"id", SliceFunction(StemFunction::builtin("id"))},
      {"square", SliceFunction(StemFunction::builtin("square"))},
      {"cubic", SliceFunction(power_series_stem({Quaternion(gauss(rng)), Quaternion(gauss(rng)),
                                                  Quaternion(gauss(rng)), Quaternion(gauss(rng))}))}};
  for (const auto& [name, f] : regular) {
    const QMatrix c = slice_regular_contour(ctx, f, radius);
    out.push_back(make_check("contour-" + name, "contour integral agrees with the algebraic calculus",
                             op_norm(c - general_calculus(ctx, f)), 1e-7 * s * s * s));
  }

  // Adjoint similarity.
  const QMatrix u = adjoint_similarity(ctx);
  out.push_back(make_check("adjoint-similarity", "L_j T L_j* = T*", op_norm(u * t * qmat_adjoint(u) - ts),
                           1e-9 * std::max(nt, 1e-300)));

  // Spectral measure of the self-adjoint part.
  const QVector v = random_qvector(n, rng);
  const auto weights = spectral_measure_weights(ctx.a, v);
  double total = 0.0;
  for (const auto& w : weights) {
    total += w.weight;
  }
  const double v2 = v.norm() * v.norm();
  out.push_back(make_check("measure-total-mass", "sum of weights = ||u||^2", std::fabs(total - v2), 1e-9 * v2));
  const CalculusContext actx = build_context(ctx.a);
  for (const std::string name : {"square", "exp"}) {
    const SliceFunction f(StemFunction::builtin(name));
    const double lhs = std::pow((intrinsic_calculus(actx, f) * v).norm(), 2);
    double rhs = 0.0;
    for (const auto& w : weights) {
      rhs += std::pow(slice_eval(f, Quaternion(w.lambda)).real(), 2) * w.weight;
    }
    out.push_back(make_check("measure-" + name, "||f(A)u||^2 = sum f(lambda)^2 weight", std::fabs(lhs - rhs),
                             1e-9 * std::max(1.0, rhs)));
  }

  // Choice independence on Ker(T - T*).
  if (const auto alt = alternative_j(jc)) {
    const CalculusContext actx2 = build_context_with_j(t, *alt);
    const RealPolynomial q1 = {{0, 0, gauss(rng)}, {1, 0, gauss(rng)}, {0, 2, gauss(rng)}, {2, 2, gauss(rng)}};
    const RealPolynomial q2 = {{0, 1, gauss(rng)}, {1, 1, gauss(rng)}, {0, 3, gauss(rng)}};
    out.push_back(make_check("choice-independence", "polynomial calculus does not depend on J on the kernel",
                             op_norm(polynomial_calculus(ctx, q1, q2) - polynomial_calculus(actx2, q1, q2)),
                             1e-9 * std::pow(s, 4)));
  }
}

VerificationReport verify_matrix(const QMatrix& t, const std::set<Suite>& suites, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<CheckRecord> records;
  std::vector<std::string> notes;
  if (suites.count(Suite::Algebra) != 0) {
    algebra_checks(t, rng, records);
  }
  if (suites.count(Suite::Spectral) != 0) {
    spectral_checks(t, rng, records);
    notes.push_back("residual and continuous spherical spectra are empty in finite dimension");
  }
  if (suites.count(Suite::Calculus) != 0) {
    if (is_normal(t)) {
      calculus_checks(t, rng, records);
    } else {
      notes.push_back("calculus suite skipped: operator is not normal");
    }
  }
  return summarize(records, std::move(notes));
}

VerificationReport verify_random(std::size_t n, int count, std::uint64_t seed, const std::set<Suite>& suites) {
  if (n == 0 || count <= 0) {
    throw Error(ErrorCode::InvalidArgument, "need n >= 1 and count >= 1");
  }
  Rng rng(seed);
  std::vector<CheckRecord> records;
  for (int trial = 0; trial < count; ++trial) {
    NormalOptions opts;
    opts.min_real = trial % 2 == 0 ? 1 : 0;
    const QMatrix t = random_normal(n, rng, opts).t;
    if (suites.count(Suite::Algebra) != 0) {
      algebra_checks(random_qmatrix(n, rng), rng, records);
    }
    if (suites.count(Suite::Spectral) != 0) {
      spectral_checks(t, rng, records);
      for (const QMatrix& m : {random_self_adjoint(n, rng), random_anti_self_adjoint(n, rng),
                               random_unitary(n, rng), random_anti_self_adjoint_unitary(n, rng)}) {
        spectral_checks(m, rng, records);
      }
    }
    if (suites.count(Suite::Calculus) != 0) {
      calculus_checks(t, rng, records);
    }
  }
  std::vector<std::string> notes;
  if (suites.count(Suite::Spectral) != 0) {
    notes.push_back("residual and continuous spherical spectra are empty in finite dimension");
  }
  return summarize(records, std::move(notes));
}

std::string format_table(const VerificationReport& r) {
  std::ostringstream os;
  std::size_t width = 5;
  for (const auto& c : r.checks) {
    width = std::max(width, c.worst.name.size());
  }
  os << std::left << std::setw(static_cast<int>(width)) << "check" << "  " << std::setw(9) << "status" << "  "
     << std::setw(12) << "residual" << "  " << std::setw(12) << "tolerance" << "  runs\n";
  for (const auto& c : r.checks) {
    os << std::left << std::setw(static_cast<int>(width)) << c.worst.name << "  " << std::setw(9)
       << to_string(c.worst.status) << "  " << std::setw(12) << std::setprecision(3) << std::scientific
       << c.worst.residual << "  " << std::setw(12) << c.worst.tolerance << "  " << c.evaluations << "\n";
    os << std::defaultfloat;
  }
  for (const auto& n : r.notes) {
    os << "note: " << n << "\n";
  }
  os << r.passed << " passed, " << r.failed << " failed, " << r.soft_warned << " soft warnings\n";
  return os.str();
}

}  // namespace qslice
