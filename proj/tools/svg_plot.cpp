#include "svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qslice::tools {

std::string spectrum_svg(const std::vector<CircularSet::Point>& reps, const std::vector<int>& mult) {
  constexpr double kWidth = 480.0;
  constexpr double kHeight = 300.0;
  constexpr double kMargin = 40.0;
  double xmin = -1.0;
  double xmax = 1.0;
  double ymax = 1.0;
  for (const auto& p : reps) {
    xmin = std::min(xmin, p.alpha);
    xmax = std::max(xmax, p.alpha);
    ymax = std::max(ymax, p.beta);
  }
  const double pad = 0.1 * std::max(xmax - xmin, ymax);
  xmin -= pad;
  xmax += pad;
  ymax += pad;
  auto sx = [&](double x) { return kMargin + (x - xmin) / (xmax - xmin) * (kWidth - 2 * kMargin); };
  auto sy = [&](double y) { return kHeight - kMargin - y / ymax * (kHeight - 2 * kMargin); };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
     << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  // Real axis and beta axis.
  os << "<line x1=\"" << kMargin << "\" y1=\"" << sy(0) << "\" x2=\"" << kWidth - kMargin << "\" y2=\"" << sy(0)
     << "\" stroke=\"black\"/>\n";
  if (xmin < 0 && xmax > 0) {
    os << "<line x1=\"" << sx(0) << "\" y1=\"" << sy(0) << "\" x2=\"" << sx(0) << "\" y2=\"" << kMargin
       << "\" stroke=\"gray\" stroke-dasharray=\"4 3\"/>\n";
  }
  os << "<text x=\"" << kWidth - kMargin << "\" y=\"" << sy(0) + 16 << "\" font-size=\"12\" text-anchor=\"end\">"
     << "alpha</text>\n";
  os << "<text x=\"" << kMargin - 6 << "\" y=\"" << kMargin << "\" font-size=\"12\" text-anchor=\"end\">beta</text>\n";
  for (std::size_t k = 0; k < reps.size(); ++k) {
    const int m = k < mult.size() ? mult[k] : 1;
    os << "<circle cx=\"" << sx(reps[k].alpha) << "\" cy=\"" << sy(reps[k].beta) << "\" r=\"" << 3 + 2 * (m - 1)
       << "\" fill=\"steelblue\"><title>(" << reps[k].alpha << ", " << reps[k].beta << ") x" << m
       << "</title></circle>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace qslice::tools
