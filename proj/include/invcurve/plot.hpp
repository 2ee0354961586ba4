#pragma once

#include <optional>
#include <string>
#include <vector>

#include "invcurve/poly.hpp"

namespace invcurve {

struct PlotOptions {
  double window = 2.0;  // plot [-window, window]^2
  int grid = 200;       // cells per side
  std::optional<double> embedding;
};

struct Point {
  double x, y;
};

/// Polyline in plot coordinates; `closed` when the last point joins the first.
struct Contour {
  std::vector<Point> points;
  bool closed = false;
};

/// Zero set of f on the grid by marching squares, segments chained into
/// polylines. Throws DegenerateWindow, MissingEmbedding, ZeroInput.
std::vector<Contour> trace_zero_set(const Polynomial& f, const PlotOptions& opts);

/// SVG document of the traced contours with a light frame and axes.
std::string render_svg(const Polynomial& f, const PlotOptions& opts);

}  // namespace invcurve
