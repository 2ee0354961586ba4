#include "invcurve/plot.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "invcurve/errors.hpp"

namespace invcurve {

namespace {

// Edge ids: horizontal edge from vertex (i,j) to (i+1,j) is 2*(j*(n+1)+i),
// vertical edge from (i,j) to (i,j+1) is that plus one.
struct Grid {
  int n;
  double lo, step;
  std::vector<double> v;  // (n+1)^2 values, row j major

  double at(int i, int j) const { return v[static_cast<std::size_t>(j) * (n + 1) + i]; }
  double coord(int k) const { return lo + step * k; }
  long hedge(int i, int j) const { return 2L * (static_cast<long>(j) * (n + 1) + i); }
  long vedge(int i, int j) const { return hedge(i, j) + 1; }
};

Point crossing(const Grid& g, long edge) {
  long base = edge / 2;
  int i = static_cast<int>(base % (g.n + 1)), j = static_cast<int>(base / (g.n + 1));
  double a = g.at(i, j);
  bool vertical = edge % 2 == 1;
  double b = vertical ? g.at(i, j + 1) : g.at(i + 1, j);
  double t = a == b ? 0.5 : a / (a - b);
  if (vertical) return {g.coord(i), g.coord(j) + t * g.step};
  return {g.coord(i) + t * g.step, g.coord(j)};
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

}  // namespace

std::vector<Contour> trace_zero_set(const Polynomial& f, const PlotOptions& opts) {
  if (!(opts.window > 0) || !std::isfinite(opts.window) || opts.grid < 2)
    throw DegenerateWindow("window must be positive and the grid at least 2 cells");
  if (f.is_zero()) throw ZeroInput("the zero polynomial has no curve to plot");
  Grid g{opts.grid, -opts.window, 2 * opts.window / opts.grid, {}};
  g.v.reserve(static_cast<std::size_t>(g.n + 1) * (g.n + 1));
  for (int j = 0; j <= g.n; ++j)
    for (int i = 0; i <= g.n; ++i) g.v.push_back(f.evaluate_float(g.coord(i), g.coord(j), opts.embedding));

  std::vector<std::pair<long, long>> segments;
  for (int j = 0; j < g.n; ++j) {
    for (int i = 0; i < g.n; ++i) {
      double c[4] = {g.at(i, j), g.at(i + 1, j), g.at(i + 1, j + 1), g.at(i, j + 1)};
      int mask = 0;
      for (int k = 0; k < 4; ++k)
        if (c[k] > 0) mask |= 1 << k;
      if (mask == 0 || mask == 15) continue;
      long bottom = g.hedge(i, j), right = g.vedge(i + 1, j), top = g.hedge(i, j + 1), left = g.vedge(i, j);
      switch (mask) {
        case 1: case 14: segments.emplace_back(left, bottom); break;
        case 2: case 13: segments.emplace_back(bottom, right); break;
        case 3: case 12: segments.emplace_back(left, right); break;
        case 4: case 11: segments.emplace_back(right, top); break;
        case 6: case 9: segments.emplace_back(bottom, top); break;
        case 7: case 8: segments.emplace_back(left, top); break;
        case 5: case 10: {
          // saddle: decide by the value at the cell centre
          double centre = f.evaluate_float(g.coord(i) + g.step / 2, g.coord(j) + g.step / 2, opts.embedding);
          bool joined = (centre > 0) == (mask == 5);
          if (joined) {
            segments.emplace_back(left, top);
            segments.emplace_back(bottom, right);
          } else {
            segments.emplace_back(left, bottom);
            segments.emplace_back(right, top);
          }
          break;
        }
      }
    }
  }

  std::map<long, std::vector<std::size_t>> by_edge;
  for (std::size_t s = 0; s < segments.size(); ++s) {
    by_edge[segments[s].first].push_back(s);
    by_edge[segments[s].second].push_back(s);
  }
  std::vector<bool> used(segments.size(), false);
  auto next_segment = [&](long edge, std::size_t from) -> std::optional<std::size_t> {
    for (auto s : by_edge[edge])
      if (s != from && !used[s]) return s;
    return std::nullopt;
  };
  auto other_end = [&](std::size_t s, long edge) { return segments[s].first == edge ? segments[s].second : segments[s].first; };

  std::vector<Contour> out;
  // open chains start at edges with a single segment, then what remains are loops
  std::vector<std::size_t> order;
  for (std::size_t s = 0; s < segments.size(); ++s)
    if (by_edge[segments[s].first].size() == 1 || by_edge[segments[s].second].size() == 1) order.push_back(s);
  for (std::size_t s = 0; s < segments.size(); ++s) order.push_back(s);
  for (auto start : order) {
    if (used[start]) continue;
    used[start] = true;
    long head = segments[start].first, tail = segments[start].second;
    if (by_edge[tail].size() == 1) std::swap(head, tail);
    std::vector<long> edges = {head, tail};
    std::size_t cur = start;
    while (auto nx = next_segment(tail, cur)) {
      used[*nx] = true;
      tail = other_end(*nx, tail);
      cur = *nx;
      edges.push_back(tail);
    }
    Contour c;
    c.closed = edges.size() > 2 && edges.front() == edges.back();
    if (c.closed) edges.pop_back();
    for (long e : edges) c.points.push_back(crossing(g, e));
    out.push_back(std::move(c));
  }
  return out;
}

std::string render_svg(const Polynomial& f, const PlotOptions& opts) {
  auto contours = trace_zero_set(f, opts);
  const double size = 512, r = opts.window;
  auto px = [&](double x) { return fmt((x + r) / (2 * r) * size); };
  auto py = [&](double y) { return fmt((r - y) / (2 * r) * size); };
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size << "\" viewBox=\"0 0 "
      << size << " " << size << "\">\n";
  out << "<title>" << f.to_string() << " = 0</title>\n";
  out << "<rect x=\"0\" y=\"0\" width=\"" << size << "\" height=\"" << size << "\" fill=\"white\" stroke=\"#999\"/>\n";
  out << "<line x1=\"0\" y1=\"" << py(0) << "\" x2=\"" << size << "\" y2=\"" << py(0) << "\" stroke=\"#ddd\"/>\n";
  out << "<line x1=\"" << px(0) << "\" y1=\"0\" x2=\"" << px(0) << "\" y2=\"" << size << "\" stroke=\"#ddd\"/>\n";
  for (const auto& c : contours) {
    out << "<path fill=\"none\" stroke=\"black\" stroke-width=\"1.2\" d=\"";
    for (std::size_t k = 0; k < c.points.size(); ++k)
      out << (k == 0 ? "M" : " L") << px(c.points[k].x) << " " << py(c.points[k].y);
    if (c.closed) out << " Z";
    out << "\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace invcurve
