#include "dol/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace dol {
namespace svg {

namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 600.0;
constexpr double kMarginLeft = 70.0;
constexpr double kMarginRight = 30.0;
constexpr double kMarginTop = 50.0;
constexpr double kMarginBottom = 60.0;

const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728"};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return std::string(buf);
}

}  // namespace

std::string line_chart(const std::vector<Series>& series, const std::string& title,
                       const std::string& x_label) {
  size_t npts = 0;
  double ymin = 0.0;
  double ymax = 0.0;
  for (const auto& s : series) {
    npts = std::max(npts, s.y.size());
    for (double v : s.y) {
      ymin = std::min(ymin, v);
      ymax = std::max(ymax, v);
    }
  }
  if (ymax == ymin) ymax = ymin + 1.0;
  const double xmax = npts > 1 ? double(npts - 1) : 1.0;

  const double plot_w = kWidth - kMarginLeft - kMarginRight;
  const double plot_h = kHeight - kMarginTop - kMarginBottom;
  auto px = [&](double x) { return kMarginLeft + x / xmax * plot_w; };
  auto py = [&](double y) { return kMarginTop + (ymax - y) / (ymax - ymin) * plot_h; };

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 600\">\n";
  out += "<rect width=\"800\" height=\"600\" fill=\"white\"/>\n";
  out += "<text x=\"400\" y=\"28\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"18\">" + title + "</text>\n";

  // axes
  out += "<line x1=\"" + fmt(kMarginLeft) + "\" y1=\"" + fmt(kMarginTop) + "\" x2=\"" +
         fmt(kMarginLeft) + "\" y2=\"" + fmt(kHeight - kMarginBottom) +
         "\" stroke=\"black\"/>\n";
  out += "<line x1=\"" + fmt(kMarginLeft) + "\" y1=\"" + fmt(kHeight - kMarginBottom) +
         "\" x2=\"" + fmt(kWidth - kMarginRight) + "\" y2=\"" + fmt(kHeight - kMarginBottom) +
         "\" stroke=\"black\"/>\n";

  const int nticks = 5;
  for (int t = 0; t <= nticks; ++t) {
    const double yv = ymin + (ymax - ymin) * t / nticks;
    const double yy = py(yv);
    out += "<line x1=\"" + fmt(kMarginLeft - 5) + "\" y1=\"" + fmt(yy) + "\" x2=\"" +
           fmt(kMarginLeft) + "\" y2=\"" + fmt(yy) + "\" stroke=\"black\"/>\n";
    out += "<text x=\"" + fmt(kMarginLeft - 9) + "\" y=\"" + fmt(yy + 4) +
           "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">" + fmt(yv) +
           "</text>\n";
    const double xv = xmax * t / nticks;
    const double xx = px(xv);
    out += "<line x1=\"" + fmt(xx) + "\" y1=\"" + fmt(kHeight - kMarginBottom) + "\" x2=\"" +
           fmt(xx) + "\" y2=\"" + fmt(kHeight - kMarginBottom + 5) + "\" stroke=\"black\"/>\n";
    out += "<text x=\"" + fmt(xx) + "\" y=\"" + fmt(kHeight - kMarginBottom + 20) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" + fmt(xv) +
           "</text>\n";
  }
  out += "<text x=\"" + fmt(kMarginLeft + plot_w / 2) + "\" y=\"" + fmt(kHeight - 15) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">" + x_label +
         "</text>\n";

  for (size_t si = 0; si < series.size(); ++si) {
    const auto& s = series[si];
    std::string pts;
    for (size_t i = 0; i < s.y.size(); ++i) {
      if (i) pts += ' ';
      pts += fmt(px(double(i))) + "," + fmt(py(s.y[i]));
    }
    out += "<polyline fill=\"none\" stroke=\"" + std::string(kPalette[si % 4]) +
           "\" stroke-width=\"2\" points=\"" + pts + "\"/>\n";
  }

  // legend
  const double lx = kWidth - kMarginRight - 170.0;
  double ly = kMarginTop + 10.0;
  for (size_t si = 0; si < series.size(); ++si) {
    out += "<line x1=\"" + fmt(lx) + "\" y1=\"" + fmt(ly) + "\" x2=\"" + fmt(lx + 28) +
           "\" y2=\"" + fmt(ly) + "\" stroke=\"" + std::string(kPalette[si % 4]) +
           "\" stroke-width=\"2\"/>\n";
    out += "<text x=\"" + fmt(lx + 34) + "\" y=\"" + fmt(ly + 4) +
           "\" font-family=\"sans-serif\" font-size=\"13\">" + series[si].label + "</text>\n";
    ly += 20.0;
  }

  out += "</svg>\n";
  return out;
}

}  // namespace svg
}  // namespace dol
