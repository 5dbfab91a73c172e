#ifndef PROJCONVEX_SVGOUT_HPP
#define PROJCONVEX_SVGOUT_HPP

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace projconvex {

struct SvgPolygon {
  std::vector<Eigen::Vector2d> points;
  std::string stroke = "#2a6f97";
  std::string fill = "none";
  double stroke_width = 0.0;  // 0: auto from view box
};

// Deterministic byte output for identical inputs (fixed float formatting).
std::string render_svg_polygons(const std::vector<SvgPolygon>& polys,
                                int size_px = 800);

// Simple line plot (sweep residuals etc.).
std::string render_svg_line_plot(const std::vector<double>& xs,
                                 const std::vector<std::vector<double>>& series,
                                 const std::vector<std::string>& labels,
                                 int size_px = 800);

}  // namespace projconvex

#endif
