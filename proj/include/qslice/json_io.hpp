#pragma once

#include <json.hpp>
#include <string>

#include "qslice/calculus.hpp"
#include "qslice/complexified.hpp"
#include "qslice/qmatrix.hpp"
#include "qslice/slice_function.hpp"
#include "qslice/spectral.hpp"
#include "qslice/verification.hpp"

namespace qslice::json_io {

using nlohmann::json;

/// Raised for documents that do not match a schema.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json to_json(const Quaternion& q);
Quaternion quaternion_from_json(const json& j);

json to_json(const ComplexifiedQuaternion& w);
ComplexifiedQuaternion complexified_from_json(const json& j);

/// {"n":N,"rows":[[[a,b,c,d],...],...]}
json to_json(const QMatrix& m);
QMatrix qmatrix_from_json(const json& j);

/// {"v":[[a,b,c,d],...]}
json to_json(const QVector& v);
QVector qvector_from_json(const json& j);

/// {"reps":[[alpha,beta],...]}
json to_json(const CircularSet& k);
CircularSet circular_set_from_json(const json& j);

/// {"kind":"poly","Q1":[[dx,dy,coef],...],"Q2":[...]} or {"kind":"builtin","name":...}.
/// Builtin "const" takes "value":[a,b,c,d]; "tabulated" takes "rows":[[alpha,beta,F1,F2],...].
StemFunction stem_from_json(const json& j);
/// Polynomial and builtin stems only; throws ParseError for opaque callables.
json to_json(const StemFunction& s);

/// {"reps":[[alpha,beta],...],"mult":[...],"radius":r}
json to_json(const SphericalSpectrum& s);

/// {"A":...,"B":...,"J":...,"K":...,"eigs":[[re,im],...]}
json to_json(const CalculusContext& ctx);

/// {"checks":[{name, property, status, residual, tolerance, evaluations}],"summary":{...},"notes":[...]}
json to_json(const VerificationReport& r);

/// Parses text; throws ParseError on malformed JSON.
json parse(const std::string& text);
json read_file(const std::string& path);

/// Serialized text; numbers use the shortest round-trip form.
std::string dump(const json& j, int indent = -1);

}  // namespace qslice::json_io
