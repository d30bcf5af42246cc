#include "ptmm/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace ptmm {

namespace {

constexpr int kWidth = 800;
constexpr int kHeight = 500;
constexpr double kMarginLeft = 72.0;
constexpr double kMarginRight = 24.0;
constexpr double kMarginTop = 24.0;
constexpr double kMarginBottom = 52.0;

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c",
                                "#ff7f0e", "#9467bd", "#8c564b"};

std::string fmt(const char* format, double a) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), format, a);
  return buffer;
}

// largest "nice" step (1, 2, 5 times a power of ten) giving <= 6 intervals
double nice_step(double range) {
  const double raw = range / 6.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  for (const double mult : {1.0, 2.0, 5.0, 10.0}) {
    if (mult * mag >= raw) {
      return mult * mag;
    }
  }
  return 10.0 * mag;
}

struct Axis {
  double lo;
  double hi;
  double step;
};

Axis make_axis(double lo, double hi) {
  if (lo == hi) {
    lo -= 1.0;
    hi += 1.0;
  }
  return {lo, hi, nice_step(hi - lo)};
}

}  // namespace

std::string render_svg(const std::vector<Series>& series,
                       const std::string& x_label,
                       const std::string& y_label) {
  if (series.empty()) {
    throw std::invalid_argument("render_svg needs at least one series");
  }
  double x_lo = std::numeric_limits<double>::infinity();
  double x_hi = -x_lo;
  double y_lo = x_lo;
  double y_hi = -x_lo;
  for (const Series& s : series) {
    if (s.x.size() < 2 || s.x.size() != s.y.size()) {
      throw std::invalid_argument("series '" + s.name +
                                  "' needs >= 2 points with matching x/y");
    }
    for (double v : s.x) {
      x_lo = std::min(x_lo, v);
      x_hi = std::max(x_hi, v);
    }
    for (double v : s.y) {
      y_lo = std::min(y_lo, v);
      y_hi = std::max(y_hi, v);
    }
  }
  const Axis ax = make_axis(x_lo, x_hi);
  const Axis ay = make_axis(y_lo, y_hi);

  const double plot_w = kWidth - kMarginLeft - kMarginRight;
  const double plot_h = kHeight - kMarginTop - kMarginBottom;
  const auto px = [&](double x) {
    return kMarginLeft + plot_w * (x - ax.lo) / (ax.hi - ax.lo);
  };
  const auto py = [&](double y) {
    return kMarginTop + plot_h * (1.0 - (y - ay.lo) / (ay.hi - ay.lo));
  };

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
         "width=\"800\" height=\"500\" viewBox=\"0 0 800 500\">\n";
  out += "<rect x=\"0\" y=\"0\" width=\"800\" height=\"500\" fill=\"white\"/>\n";

  // frame
  out += "<rect x=\"" + fmt("%.2f", kMarginLeft) + "\" y=\"" +
         fmt("%.2f", kMarginTop) + "\" width=\"" + fmt("%.2f", plot_w) +
         "\" height=\"" + fmt("%.2f", plot_h) +
         "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";

  // ticks and grid
  for (double tick = std::ceil(ax.lo / ax.step) * ax.step; tick <= ax.hi + 1e-9 * ax.step;
       tick += ax.step) {
    const double x = px(tick);
    out += "<line x1=\"" + fmt("%.2f", x) + "\" y1=\"" +
           fmt("%.2f", kMarginTop + plot_h) + "\" x2=\"" + fmt("%.2f", x) +
           "\" y2=\"" + fmt("%.2f", kMarginTop + plot_h + 5) +
           "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    out += "<text x=\"" + fmt("%.2f", x) + "\" y=\"" +
           fmt("%.2f", kMarginTop + plot_h + 18) +
           "\" font-family=\"sans-serif\" font-size=\"11\" "
           "text-anchor=\"middle\">" +
           fmt("%.6g", tick + 0.0) + "</text>\n";
  }
  for (double tick = std::ceil(ay.lo / ay.step) * ay.step; tick <= ay.hi + 1e-9 * ay.step;
       tick += ay.step) {
    const double y = py(tick);
    out += "<line x1=\"" + fmt("%.2f", kMarginLeft - 5) + "\" y1=\"" +
           fmt("%.2f", y) + "\" x2=\"" + fmt("%.2f", kMarginLeft) +
           "\" y2=\"" + fmt("%.2f", y) +
           "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    out += "<text x=\"" + fmt("%.2f", kMarginLeft - 8) + "\" y=\"" +
           fmt("%.2f", y + 4) +
           "\" font-family=\"sans-serif\" font-size=\"11\" "
           "text-anchor=\"end\">" +
           fmt("%.6g", tick + 0.0) + "</text>\n";
  }

  // axis labels
  out += "<text x=\"" + fmt("%.2f", kMarginLeft + plot_w / 2) + "\" y=\"" +
         fmt("%.2f", kHeight - 12.0) +
         "\" font-family=\"sans-serif\" font-size=\"13\" "
         "text-anchor=\"middle\">" +
         x_label + "</text>\n";
  out += "<text x=\"18\" y=\"" + fmt("%.2f", kMarginTop + plot_h / 2) +
         "\" font-family=\"sans-serif\" font-size=\"13\" "
         "text-anchor=\"middle\" transform=\"rotate(-90 18 " +
         fmt("%.2f", kMarginTop + plot_h / 2) + ")\">" + y_label +
         "</text>\n";

  // series
  for (std::size_t s = 0; s < series.size(); ++s) {
    const char* color = kPalette[s % (sizeof(kPalette) / sizeof(kPalette[0]))];
    out += "<polyline fill=\"none\" stroke=\"";
    out += color;
    out += "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < series[s].x.size(); ++i) {
      if (i != 0) {
        out += ' ';
      }
      out += fmt("%.2f", px(series[s].x[i])) + "," +
             fmt("%.2f", py(series[s].y[i]));
    }
    out += "\"/>\n";
  }

  // legend, top right corner of the frame
  for (std::size_t s = 0; s < series.size(); ++s) {
    const char* color = kPalette[s % (sizeof(kPalette) / sizeof(kPalette[0]))];
    const double ly = kMarginTop + 16.0 + 16.0 * static_cast<double>(s);
    const double lx = kMarginLeft + plot_w - 150.0;
    out += "<line x1=\"" + fmt("%.2f", lx) + "\" y1=\"" + fmt("%.2f", ly - 4) +
           "\" x2=\"" + fmt("%.2f", lx + 22) + "\" y2=\"" +
           fmt("%.2f", ly - 4) + "\" stroke=\"";
    out += color;
    out += "\" stroke-width=\"2\"/>\n";
    out += "<text x=\"" + fmt("%.2f", lx + 28) + "\" y=\"" + fmt("%.2f", ly) +
           "\" font-family=\"sans-serif\" font-size=\"12\">" +
           series[s].name + "</text>\n";
  }

  out += "</svg>\n";
  return out;
}

}  // namespace ptmm
