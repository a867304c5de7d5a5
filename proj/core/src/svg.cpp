#include "iondecay/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "iondecay/csv.hpp"
#include "iondecay/errors.hpp"

namespace iondecay {

namespace {

constexpr int margin_left = 70;
constexpr int margin_right = 24;
constexpr int margin_top = 42;
constexpr int margin_bottom = 54;

std::string px(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

struct Range {
  double lo = 0.0, hi = 1.0;
  void widen(double v) {
    if (!std::isfinite(v)) return;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
};

Range data_range(const std::vector<PlotSeries>& series, bool horizontal) {
  Range r{std::numeric_limits<double>::infinity(),
          -std::numeric_limits<double>::infinity()};
  for (const PlotSeries& s : series) {
    for (double v : horizontal ? s.x : s.y) r.widen(v);
  }
  if (!(r.lo < r.hi)) {  // flat or single-point data
    r.lo -= 0.5;
    r.hi += 0.5;
  }
  const double pad = 0.04 * (r.hi - r.lo);
  return {r.lo - pad, r.hi + pad};
}

void draw_frame_and_ticks(std::ostringstream& out, const PlotStyle& style,
                          const Range& xr, const Range& yr, int width, int height) {
  const double x0 = margin_left, x1 = width - margin_right;
  const double y0 = height - margin_bottom, y1 = margin_top;
  out << "<rect x=\"" << px(x0) << "\" y=\"" << px(y1) << "\" width=\""
      << px(x1 - x0) << "\" height=\"" << px(y0 - y1)
      << "\" fill=\"none\" stroke=\"#333\" stroke-width=\"1\"/>\n";
  const int n_ticks = 5;
  for (int i = 0; i <= n_ticks; ++i) {
    const double fx = static_cast<double>(i) / n_ticks;
    const double vx = xr.lo + fx * (xr.hi - xr.lo);
    const double sx = x0 + fx * (x1 - x0);
    out << "<line x1=\"" << px(sx) << "\" y1=\"" << px(y0) << "\" x2=\"" << px(sx)
        << "\" y2=\"" << px(y0 + 5) << "\" stroke=\"#333\"/>\n";
    out << "<text x=\"" << px(sx) << "\" y=\"" << px(y0 + 18)
        << "\" font-size=\"11\" text-anchor=\"middle\" font-family=\"sans-serif\">"
        << format_g9(std::round(vx * 1e6) / 1e6) << "</text>\n";

    const double vy = yr.lo + fx * (yr.hi - yr.lo);
    const double sy = y0 - fx * (y0 - y1);
    out << "<line x1=\"" << px(x0 - 5) << "\" y1=\"" << px(sy) << "\" x2=\"" << px(x0)
        << "\" y2=\"" << px(sy) << "\" stroke=\"#333\"/>\n";
    out << "<text x=\"" << px(x0 - 8) << "\" y=\"" << px(sy + 4)
        << "\" font-size=\"11\" text-anchor=\"end\" font-family=\"sans-serif\">"
        << format_g9(std::round(vy * 1e6) / 1e6) << "</text>\n";
  }
  out << "<text x=\"" << px(0.5 * (x0 + x1)) << "\" y=\"" << px(height - 12)
      << "\" font-size=\"13\" text-anchor=\"middle\" font-family=\"sans-serif\">"
      << style.x_label << "</text>\n";
  out << "<text x=\"16\" y=\"" << px(0.5 * (y0 + y1))
      << "\" font-size=\"13\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "transform=\"rotate(-90 16 "
      << px(0.5 * (y0 + y1)) << ")\">" << style.y_label << "</text>\n";
  if (!style.title.empty()) {
    out << "<text x=\"" << px(0.5 * (x0 + x1)) << "\" y=\"24\" font-size=\"15\" "
           "text-anchor=\"middle\" font-family=\"sans-serif\">"
        << style.title << "</text>\n";
  }
}

}  // namespace

std::string svg_line_plot(const std::vector<PlotSeries>& series,
                          const PlotStyle& style) {
  if (series.empty()) throw DomainError("svg_line_plot: no series");
  for (const PlotSeries& s : series) {
    if (s.x.empty() || s.x.size() != s.y.size()) {
      throw DomainError("svg_line_plot: empty or mismatched series");
    }
  }

  const int width = style.width, height = style.height;
  const Range xr = data_range(series, true);
  const Range yr = data_range(series, false);
  const double x0 = margin_left, x1 = width - margin_right;
  const double y0 = height - margin_bottom, y1 = margin_top;

  auto to_sx = [&](double v) { return x0 + (v - xr.lo) / (xr.hi - xr.lo) * (x1 - x0); };
  auto to_sy = [&](double v) { return y0 - (v - yr.lo) / (yr.hi - yr.lo) * (y0 - y1); };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' ' << height
      << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  draw_frame_and_ticks(out, style, xr, yr, width, height);

  for (const PlotSeries& s : series) {
    out << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.4\"";
    if (s.dashed) out << " stroke-dasharray=\"6 4\"";
    out << " points=\"";
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (i) out << ' ';
      out << px(to_sx(s.x[i])) << ',' << px(to_sy(s.y[i]));
    }
    out << "\"/>\n";
  }

  double legend_y = y1 + 16;
  for (const PlotSeries& s : series) {
    if (s.label.empty()) continue;
    out << "<line x1=\"" << px(x1 - 150) << "\" y1=\"" << px(legend_y - 4)
        << "\" x2=\"" << px(x1 - 124) << "\" y2=\"" << px(legend_y - 4)
        << "\" stroke=\"" << s.color << "\" stroke-width=\"2\"";
    if (s.dashed) out << " stroke-dasharray=\"6 4\"";
    out << "/>\n<text x=\"" << px(x1 - 118) << "\" y=\"" << px(legend_y)
        << "\" font-size=\"12\" font-family=\"sans-serif\">" << s.label << "</text>\n";
    legend_y += 16;
  }
  out << "</svg>\n";
  return out.str();
}

std::string svg_heatmap(const PGrid& grid, const PlotStyle& style) {
  if (grid.spec.n_re < 2 || grid.spec.n_im < 2) {
    throw DomainError("svg_heatmap: grid too small");
  }
  const int width = style.width, height = style.height;
  const double x0 = margin_left, x1 = width - margin_right;
  const double y0 = height - margin_bottom, y1 = margin_top;
  const double vmax = std::max(grid.values.maxCoeff(), 1e-300);

  const Range xr{grid.spec.re_min, grid.spec.re_max};
  const Range yr{grid.spec.im_min, grid.spec.im_max};
  const double cell_w = (x1 - x0) / grid.spec.n_re;
  const double cell_h = (y0 - y1) / grid.spec.n_im;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' ' << height
      << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  for (int i = 0; i < grid.spec.n_re; ++i) {
    for (int j = 0; j < grid.spec.n_im; ++j) {
      const int gray =
          255 - static_cast<int>(std::lround(215.0 * grid.values(i, j) / vmax));
      if (gray >= 255) continue;  // skip near-white cells, keeps files lean
      out << "<rect x=\"" << px(x0 + i * cell_w) << "\" y=\""
          << px(y0 - (j + 1) * cell_h) << "\" width=\"" << px(cell_w + 0.5)
          << "\" height=\"" << px(cell_h + 0.5) << "\" fill=\"rgb(" << gray << ','
          << gray << ',' << gray << ")\"/>\n";
    }
  }
  draw_frame_and_ticks(out, style, xr, yr, width, height);
  out << "</svg>\n";
  return out.str();
}

}  // namespace iondecay
