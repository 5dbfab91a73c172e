#include "projconvex/svgout.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace projconvex {

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

}  // namespace

std::string render_svg_polygons(const std::vector<SvgPolygon>& polys, int size_px) {
  double min_x = 1e300, min_y = 1e300, max_x = -1e300, max_y = -1e300;
  for (const auto& p : polys)
    for (const auto& pt : p.points) {
      min_x = std::min(min_x, pt.x());
      max_x = std::max(max_x, pt.x());
      min_y = std::min(min_y, pt.y());
      max_y = std::max(max_y, pt.y());
    }
  if (min_x > max_x) { min_x = -1; max_x = 1; min_y = -1; max_y = 1; }
  double w = max_x - min_x, h = max_y - min_y;
  double pad = 0.05 * std::max(w, h);
  if (pad == 0) pad = 0.05;
  min_x -= pad; min_y -= pad; max_x += pad; max_y += pad;
  w = max_x - min_x; h = max_y - min_y;
  double scale = size_px / std::max(w, h);

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size_px
     << "\" height=\"" << size_px << "\" viewBox=\"0 0 " << size_px << ' '
     << size_px << "\">\n";
  for (const auto& p : polys) {
    double sw = p.stroke_width > 0 ? p.stroke_width : std::max(w, h) / 600.0;
    os << "<polygon points=\"";
    for (size_t i = 0; i < p.points.size(); ++i) {
      double sx = (p.points[i].x() - min_x) * scale;
      double sy = (max_y - p.points[i].y()) * scale;  // y up
      if (i) os << ' ';
      os << fmt(sx) << ',' << fmt(sy);
    }
    os << "\" fill=\"" << p.fill << "\" stroke=\"" << p.stroke
       << "\" stroke-width=\"" << fmt(sw * scale) << "\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string render_svg_line_plot(const std::vector<double>& xs,
                                 const std::vector<std::vector<double>>& series,
                                 const std::vector<std::string>& labels,
                                 int size_px) {
  static const char* colors[] = {"#2a6f97", "#d1495b", "#3a7d44", "#8d6a9f"};
  double min_x = 1e300, max_x = -1e300, min_y = 1e300, max_y = -1e300;
  for (double x : xs) { min_x = std::min(min_x, x); max_x = std::max(max_x, x); }
  for (const auto& s : series)
    for (double y : s) { min_y = std::min(min_y, y); max_y = std::max(max_y, y); }
  if (min_x > max_x) { min_x = 0; max_x = 1; }
  if (min_y > max_y) { min_y = 0; max_y = 1; }
  if (max_y == min_y) { max_y += 1; min_y -= 1; }
  if (max_x == min_x) { max_x += 1; min_x -= 1; }
  const int margin = 50;
  double sx = (size_px - 2 * margin) / (max_x - min_x);
  double sy = (size_px - 2 * margin) / (max_y - min_y);

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size_px
     << "\" height=\"" << size_px << "\">\n";
  os << "<rect x=\"" << margin << "\" y=\"" << margin << "\" width=\""
     << size_px - 2 * margin << "\" height=\"" << size_px - 2 * margin
     << "\" fill=\"none\" stroke=\"#777777\"/>\n";
  for (size_t s = 0; s < series.size(); ++s) {
    os << "<polyline fill=\"none\" stroke=\"" << colors[s % 4]
       << "\" stroke-width=\"1.5\" points=\"";
    for (size_t i = 0; i < xs.size() && i < series[s].size(); ++i) {
      double px = margin + (xs[i] - min_x) * sx;
      double py = size_px - margin - (series[s][i] - min_y) * sy;
      if (i) os << ' ';
      os << fmt(px) << ',' << fmt(py);
    }
    os << "\"/>\n";
    if (s < labels.size())
      os << "<text x=\"" << margin + 8 << "\" y=\"" << margin + 18 + 16 * s
         << "\" fill=\"" << colors[s % 4] << "\" font-size=\"13\">" << labels[s]
         << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace projconvex
