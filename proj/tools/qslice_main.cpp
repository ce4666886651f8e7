#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qslice/calculus.hpp"
#include "qslice/error.hpp"
#include "qslice/json_io.hpp"
#include "qslice/spectral.hpp"
#include "qslice/verification.hpp"
#include "svg_plot.hpp"

namespace {

using namespace qslice;
using json_io::json;
using json_io::ParseError;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;

std::vector<double> split_numbers(const std::string& text, std::size_t count, const std::string& what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) {
        throw std::invalid_argument(item);
      }
    } catch (const std::exception&) {
      throw ParseError(what + ": '" + item + "' is not a number");
    }
  }
  if (out.size() != count) {
    throw ParseError(what + ": expected " + std::to_string(count) + " comma-separated values");
  }
  return out;
}

QMatrix load_matrix(const std::string& path) { return json_io::qmatrix_from_json(json_io::read_file(path)); }

SliceFunction load_function(const std::string& arg) {
  const std::string prefix = "builtin:";
  if (arg.rfind(prefix, 0) == 0) {
    return SliceFunction(StemFunction::builtin(arg.substr(prefix.size())));
  }
  return SliceFunction(json_io::stem_from_json(json_io::read_file(arg)));
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) {
    throw Error(ErrorCode::InvalidArgument, "cannot write '" + path + "'");
  }
  out << text;
}

struct Options {
  std::string input;
  std::string plot;
  std::string out;
  std::string fn;
  std::string mode = "intrinsic";
  double radius = 0.0;
  int nodes = kDefaultContourNodes;
  std::string q;
  double tol = 1e-14;
  std::string random;
  std::string suite = "all";
  std::uint64_t seed = 42;
};

int run_spectrum(const Options& o) {
  const SphericalSpectrum s = spherical_spectrum(load_matrix(o.input));
  std::cout << json_io::dump(json_io::to_json(s)) << "\n";
  if (!o.plot.empty()) {
    write_text(o.plot, tools::spectrum_svg(s.reps(), s.multiplicity));
  }
  return 0;
}

int run_decompose(const Options& o) {
  const json ctx = json_io::to_json(build_context(load_matrix(o.input)));
  if (o.out.empty()) {
    std::cout << json_io::dump(ctx) << "\n";
  } else {
    write_text(o.out, json_io::dump(ctx) + "\n");
  }
  return 0;
}

int run_apply(const Options& o) {
  const CalculusContext ctx = build_context(load_matrix(o.input));
  const SliceFunction f = load_function(o.fn);
  QMatrix r;
  if (o.mode == "intrinsic") {
    r = intrinsic_calculus(ctx, f);
  } else if (o.mode == "cslice") {
    r = cslice_calculus(ctx, f);
  } else if (o.mode == "circular") {
    r = circular_calculus(ctx, f);
  } else if (o.mode == "general") {
    r = general_calculus(ctx, f);
  } else if (o.mode == "contour") {
    const double radius = o.radius > 0.0 ? o.radius : default_contour_radius(ctx);
    r = slice_regular_contour(ctx, f, radius, o.nodes);
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown mode '" + o.mode + "'");
  }
  std::cout << json_io::dump(json_io::to_json(r)) << "\n";
  return 0;
}

int run_resolvent(const Options& o) {
  const auto c = split_numbers(o.q, 4, "--q");
  const QMatrix r = resolvent_series(load_matrix(o.input), Quaternion(c[0], c[1], c[2], c[3]), o.tol);
  std::cout << json_io::dump(json_io::to_json(r)) << "\n";
  return 0;
}

int run_verify(const Options& o) {
  const auto suites = parse_suites(o.suite);
  VerificationReport report;
  if (!o.random.empty()) {
    const auto c = split_numbers(o.random, 3, "--random");
    if (c[0] < 1 || c[1] < 1 || c[2] < 0) {
      throw Error(ErrorCode::InvalidArgument, "--random needs n >= 1, count >= 1, seed >= 0");
    }
    report = verify_random(static_cast<std::size_t>(c[0]), static_cast<int>(c[1]), static_cast<std::uint64_t>(c[2]),
                           suites);
  } else if (!o.input.empty()) {
    report = verify_matrix(load_matrix(o.input), suites, o.seed);
  } else {
    throw Error(ErrorCode::InvalidArgument, "verify needs --input or --random");
  }
  std::cout << json_io::dump(json_io::to_json(report), 2) << "\n";
  std::cerr << format_table(report);
  return report.ok() ? 0 : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spherical spectra and slice functional calculus for quaternionic matrices"};
  app.require_subcommand(1);
  Options o;

  auto* spectrum = app.add_subcommand("spectrum", "spherical spectrum representatives and multiplicities");
  spectrum->add_option("--input", o.input, "matrix JSON")->required();
  spectrum->add_option("--emit-plot", o.plot, "write an SVG scatter of the representatives");

  auto* decompose = app.add_subcommand("decompose", "export A, B, J, K and the eigenvalues on H+");
  decompose->add_option("--input", o.input, "matrix JSON")->required();
  decompose->add_option("--out", o.out, "output file (stdout if omitted)");

  auto* apply = app.add_subcommand("apply", "evaluate f(T)");
  apply->add_option("--input", o.input, "matrix JSON")->required();
  apply->add_option("--fn", o.fn, "stem JSON file or builtin:<name>")->required();
  apply->add_option("--mode", o.mode, "intrinsic|cslice|circular|general|contour")
      ->check(CLI::IsMember({"intrinsic", "cslice", "circular", "general", "contour"}));
  apply->add_option("--radius", o.radius, "contour radius (default 1.25 ||T|| + 1)");
  apply->add_option("--nodes", o.nodes, "contour nodes");

  auto* resolvent = app.add_subcommand("resolvent", "Delta_q(T)^-1 via the power series");
  resolvent->add_option("--input", o.input, "matrix JSON")->required();
  resolvent->add_option("--q", o.q, "a,b,c,d")->required();
  resolvent->add_option("--tol", o.tol, "tail bound tolerance");

  auto* verify = app.add_subcommand("verify", "property report");
  auto* vin = verify->add_option("--input", o.input, "matrix JSON");
  auto* vrand = verify->add_option("--random", o.random, "n,count,seed");
  vin->excludes(vrand);
  verify->add_option("--suite", o.suite, "all|algebra|spectral|calculus");
  verify->add_option("--seed", o.seed, "seed for --input checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*spectrum) {
      return run_spectrum(o);
    }
    if (*decompose) {
      return run_decompose(o);
    }
    if (*apply) {
      return run_apply(o);
    }
    if (*resolvent) {
      return run_resolvent(o);
    }
    return run_verify(o);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  }
}
