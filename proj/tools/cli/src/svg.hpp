#pragma once

#include <string>
#include <vector>

#include "opaque/geometry.hpp"

namespace opaque::cli {

/// Minimal static SVG chart: data coordinates are mapped linearly onto a
/// fixed canvas with margins for tick labels.
class SvgPlot {
 public:
  SvgPlot(double x0, double x1, double y0, double y1, bool equal_aspect = false);

  void polyline(const std::vector<Point>& pts, const std::string& color, double width = 1.5,
                bool dashed = false);
  void hline(double y, const std::string& color, const std::string& label = "");
  void vline(double x, const std::string& color, const std::string& label = "");
  void text(Point at, const std::string& s);
  void title(const std::string& s);
  void axes(const std::string& xlabel, const std::string& ylabel, int xticks = 6, int yticks = 5);

  std::string str() const;

 private:
  double sx(double x) const;
  double sy(double y) const;

  double x0_, x1_, y0_, y1_;
  double width_ = 720.0;
  double height_ = 440.0;
  static constexpr double kMargin = 56.0;
  std::string body_;
};

void write_text_file(const std::string& path, const std::string& content);

}  // namespace opaque::cli
