#include "ginpp/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <vector>

namespace ginpp {

namespace {

constexpr int kMarginLeft = 62;
constexpr int kMarginRight = 18;
constexpr int kMarginTop = 18;
constexpr int kMarginBottom = 46;

std::string fmt(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

std::string fmt_tick(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

}  // namespace

std::string render_j_plot_svg(const SummaryEstimate& s, const PlotOptions& options) {
  const auto& r = s.grid.r_values;
  const double r_max = r.back();

  std::vector<double> theory;
  if (options.theory) {
    theory.reserve(r.size());
    for (double ri : r) theory.push_back(theoretical_J(ri, *options.theory));
  }

  double y_lo = 1.0, y_hi = 1.0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (is_defined(s.j_hat[i]) && std::isfinite(s.j_hat[i])) {
      y_lo = std::min(y_lo, s.j_hat[i]);
      y_hi = std::max(y_hi, s.j_hat[i]);
    }
    if (!theory.empty() && std::isfinite(theory[i])) {
      y_lo = std::min(y_lo, theory[i]);
      y_hi = std::max(y_hi, theory[i]);
    }
  }
  y_lo = std::min(0.9, y_lo);
  y_hi = std::max(1.1, y_hi + 0.05 * (y_hi - y_lo));

  const double plot_w = options.width - kMarginLeft - kMarginRight;
  const double plot_h = options.height - kMarginTop - kMarginBottom;
  auto sx = [&](double rv) { return kMarginLeft + plot_w * rv / r_max; };
  auto sy = [&](double jv) {
    return kMarginTop + plot_h * (y_hi - jv) / (y_hi - y_lo);
  };

  auto path_for = [&](const std::vector<double>& values) {
    std::string d;
    bool open = false;
    for (std::size_t i = 0; i < r.size(); ++i) {
      const double v = values[i];
      if (!is_defined(v) || !std::isfinite(v)) {
        open = false;  // undefined values break the curve, never interpolated
        continue;
      }
      d += open ? " L " : (d.empty() ? "M " : " M ");
      d += fmt(sx(r[i])) + "," + fmt(sy(v));
      open = true;
    }
    return d;
  };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         std::to_string(options.width) + "\" height=\"" +
         std::to_string(options.height) + "\" viewBox=\"0 0 " +
         std::to_string(options.width) + " " + std::to_string(options.height) +
         "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // Axes and ticks.
  const std::string axis_color = "#333333";
  svg += "<g stroke=\"" + axis_color + "\" stroke-width=\"1\" fill=\"none\">\n";
  svg += "<line x1=\"" + fmt(sx(0)) + "\" y1=\"" + fmt(sy(y_lo)) + "\" x2=\"" +
         fmt(sx(r_max)) + "\" y2=\"" + fmt(sy(y_lo)) + "\"/>\n";
  svg += "<line x1=\"" + fmt(sx(0)) + "\" y1=\"" + fmt(sy(y_lo)) + "\" x2=\"" +
         fmt(sx(0)) + "\" y2=\"" + fmt(sy(y_hi)) + "\"/>\n";
  svg += "</g>\n";
  svg += "<g font-family=\"sans-serif\" font-size=\"12\" fill=\"" + axis_color +
         "\">\n";
  for (int t = 0; t <= 4; ++t) {
    const double rv = r_max * t / 4.0;
    svg += "<text x=\"" + fmt(sx(rv)) + "\" y=\"" + fmt(sy(y_lo) + 16.0) +
           "\" text-anchor=\"middle\">" + fmt_tick(rv) + "</text>\n";
    const double jv = y_lo + (y_hi - y_lo) * t / 4.0;
    svg += "<text x=\"" + fmt(sx(0) - 8.0) + "\" y=\"" + fmt(sy(jv) + 4.0) +
           "\" text-anchor=\"end\">" + fmt_tick(std::round(jv * 1000.0) / 1000.0) +
           "</text>\n";
  }
  svg += "<text x=\"" + fmt(kMarginLeft + plot_w / 2.0) + "\" y=\"" +
         fmt(static_cast<double>(options.height) - 10.0) +
         "\" text-anchor=\"middle\">r [m]</text>\n";
  svg += "<text x=\"14\" y=\"" + fmt(kMarginTop + plot_h / 2.0) +
         "\" text-anchor=\"middle\" transform=\"rotate(-90 14 " +
         fmt(kMarginTop + plot_h / 2.0) + ")\">J(r)</text>\n";
  svg += "</g>\n";

  // Reference line J = 1 across the full radial range.
  svg += "<line class=\"ref\" x1=\"" + fmt(sx(0)) + "\" y1=\"" + fmt(sy(1.0)) +
         "\" x2=\"" + fmt(sx(r_max)) + "\" y2=\"" + fmt(sy(1.0)) +
         "\" stroke=\"#888888\" stroke-width=\"1\" stroke-dasharray=\"5,4\"/>\n";

  svg += "<path class=\"curve jhat\" d=\"" + path_for(s.j_hat) +
         "\" fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\"/>\n";
  if (!theory.empty()) {
    svg += "<path class=\"curve theory\" d=\"" + path_for(theory) +
           "\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"1.5\" "
           "stroke-dasharray=\"7,3\"/>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace ginpp
