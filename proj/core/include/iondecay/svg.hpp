// svg.hpp — standalone SVG emitters (no external resources)

#pragma once

#include <string>
#include <vector>

#include "iondecay/carrier.hpp"

namespace iondecay {

struct PlotSeries {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
  std::string color = "#1f6fb2";
  bool dashed = false;
};

struct PlotStyle {
  std::string title;
  std::string x_label;
  std::string y_label;
  int width = 880;
  int height = 540;
};

// Line plot with axes, tick labels, and a legend; one polyline per series.
std::string svg_line_plot(const std::vector<PlotSeries>& series,
                          const PlotStyle& style);

// Grayscale cell grid of a phase-space distribution.
std::string svg_heatmap(const PGrid& grid, const PlotStyle& style);

}  // namespace iondecay
