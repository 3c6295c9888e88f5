#include "islands/render.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <sstream>

#include "islands/errors.hpp"

namespace islands::render {

namespace {

const std::array<const char*, 8> kPalette{"#d62728", "#1f77b4", "#2ca02c", "#9467bd",
                                          "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};

using P2 = std::array<Rational, 2>;

Rational cross(const P2& o, const P2& a, const P2& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// Monotone chain; drops collinear and repeated points.
std::vector<P2> hull2(std::vector<P2> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<P2> h(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && sgn(cross(h[k - 2], h[k - 1], pts[i])) <= 0) --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && sgn(cross(h[k - 2], h[k - 1], pts[i])) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

struct Panel {
  int axis_x;
  int axis_y;
  double offset_x;
};

}  // namespace

std::string render_svg(const ColoredPointSet& set, const IslandPartition& partition, const SvgOptions& options) {
  if (set.dim() < 2 || set.dim() > 3) {
    throw PreconditionError("render supports dim 2 and 3, got " + std::to_string(set.dim()));
  }
  std::vector<Panel> panels;
  const double side = options.panel_size;
  if (set.dim() == 2) {
    panels.push_back({0, 1, 0});
  } else {
    panels = {{0, 1, 0}, {0, 2, side}, {1, 2, 2 * side}};
  }

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << fmt(side * panels.size()) << " " << fmt(side)
      << "\" width=\"" << fmt(side * panels.size()) << "\" height=\"" << fmt(side) << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  for (const Panel& panel : panels) {
    // Bounding box in exact arithmetic, then one uniform scale.
    Rational lo_x, hi_x, lo_y, hi_y;
    for (PointId id = 0; id < set.size(); ++id) {
      const Rational& x = set.point(id)[panel.axis_x];
      const Rational& y = set.point(id)[panel.axis_y];
      if (id == 0 || x < lo_x) lo_x = x;
      if (id == 0 || x > hi_x) hi_x = x;
      if (id == 0 || y < lo_y) lo_y = y;
      if (id == 0 || y > hi_y) hi_y = y;
    }
    Rational span = std::max(hi_x - lo_x, hi_y - lo_y);
    if (sgn(span) == 0) span = 1;
    const double inner = side - 2.0 * options.margin;
    auto map_x = [&](const Rational& x) {
      return panel.offset_x + options.margin + Rational((x - lo_x) / span).get_d() * inner;
    };
    auto map_y = [&](const Rational& y) { return side - options.margin - Rational((y - lo_y) / span).get_d() * inner; };

    out << "<g class=\"panel\" data-axes=\"" << "xyz"[panel.axis_x] << "xyz"[panel.axis_y] << "\">\n";
    for (std::size_t i = 0; i < partition.parts.size(); ++i) {
      std::vector<P2> pts;
      for (PointId id : partition.parts[i]) {
        if (id >= set.size()) continue;
        pts.push_back({set.point(id)[panel.axis_x], set.point(id)[panel.axis_y]});
      }
      const std::vector<P2> h = hull2(std::move(pts));
      if (h.empty()) continue;
      out << "<polygon class=\"island\" data-part=\"" << i << "\" points=\"";
      for (std::size_t v = 0; v < h.size(); ++v) out << (v ? " " : "") << fmt(map_x(h[v][0])) << "," << fmt(map_y(h[v][1]));
      out << "\" fill=\"gray\" fill-opacity=\"0.34\" stroke=\"gray\" stroke-width=\"1\"/>\n";
    }
    for (PointId id = 0; id < set.size(); ++id) {
      const char* color = kPalette[static_cast<std::size_t>(set.color(id)) % kPalette.size()];
      out << "<circle class=\"point\" data-id=\"" << id << "\" data-color=\"" << set.color(id) << "\" cx=\""
          << fmt(map_x(set.point(id)[panel.axis_x])) << "\" cy=\"" << fmt(map_y(set.point(id)[panel.axis_y]))
          << "\" r=\"3\" fill=\"" << color << "\"/>\n";
    }
    out << "</g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace islands::render
