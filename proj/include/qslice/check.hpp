#pragma once

#include <string>

namespace qslice {

enum class CheckStatus { Pass, Fail, SoftWarn };

struct CheckRecord {
  std::string name;
  std::string property;
  CheckStatus status = CheckStatus::Pass;
  double residual = 0.0;
  double tolerance = 0.0;
  /// Soft checks only warn on failure.
  bool soft = false;
};

/// Pass if residual <= tolerance (non-finite residuals fail).
CheckRecord make_check(std::string name, std::string property, double residual, double tolerance, bool soft = false);

std::string to_string(CheckStatus s);

}  // namespace qslice
