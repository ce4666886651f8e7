#pragma once

#include <string>
#include <vector>

#include "qslice/slice_function.hpp"

namespace qslice::tools {

/// Standalone SVG scatter of (alpha, beta) spectrum representatives.
std::string spectrum_svg(const std::vector<CircularSet::Point>& reps, const std::vector<int>& mult);

}  // namespace qslice::tools
