#pragma once

#include <string>
#include <vector>

namespace ptmm {

struct Series {
  std::string name;
  std::vector<double> x;
  std::vector<double> y;
};

// Self-contained SVG 1.1 line plot: one polyline per series, linear axes
// with tick labels, legend. Output is a pure function of the input, so
// repeated calls are byte-identical. Throws on empty input, series with
// fewer than 2 points, or mismatched x/y lengths.
std::string render_svg(const std::vector<Series>& series,
                       const std::string& x_label, const std::string& y_label);

}  // namespace ptmm
