#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "qslice/check.hpp"
#include "qslice/qmatrix.hpp"
#include "qslice/random.hpp"

namespace qslice {

enum class Suite { Algebra, Spectral, Calculus };

/// Parses "all", "algebra", "spectral" or "calculus". Throws Error(InvalidArgument).
std::set<Suite> parse_suites(const std::string& name);

/// Worst residual of every check name over all evaluations.
struct CheckSummary {
  CheckRecord worst;
  int evaluations = 0;
  int failures = 0;
  int warnings = 0;
};

struct VerificationReport {
  std::vector<CheckSummary> checks;
  std::vector<std::string> notes;
  int passed = 0;
  int failed = 0;
  int soft_warned = 0;

  bool ok() const { return failed == 0; }
};

/// Folds records into per-name summaries, keeping first-seen order.
VerificationReport summarize(const std::vector<CheckRecord>& records, std::vector<std::string> notes = {});

void algebra_checks(const QMatrix& m, Rng& rng, std::vector<CheckRecord>& out);
void spectral_checks(const QMatrix& t, Rng& rng, std::vector<CheckRecord>& out);
/// Requires a normal T.
void calculus_checks(const QMatrix& t, Rng& rng, std::vector<CheckRecord>& out);

/// Runs the selected suites on one matrix; calculus is skipped with a note for non-normal input.
VerificationReport verify_matrix(const QMatrix& t, const std::set<Suite>& suites, std::uint64_t seed = 42);

/// count random trials of size n: normal operators plus the self-adjoint, anti-self-adjoint,
/// unitary and anti-self-adjoint unitary classes for the spectral suite.
VerificationReport verify_random(std::size_t n, int count, std::uint64_t seed, const std::set<Suite>& suites);

/// Aligned plain-text table.
std::string format_table(const VerificationReport& r);

}  // namespace qslice
