#include "svg.hpp"

#include <cstdio>
#include <fstream>

#include "opaque/error.hpp"

namespace opaque::cli {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string tick(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else if (c == '&') out += "&amp;";
    else out += c;
  }
  return out;
}

}  // namespace

SvgPlot::SvgPlot(double x0, double x1, double y0, double y1, bool equal_aspect)
    : x0_(x0), x1_(x1), y0_(y0), y1_(y1) {
  if (!(x1 > x0) || !(y1 > y0)) throw DomainError("plot: empty data range");
  if (equal_aspect) {
    const double inner_w = width_ - 2 * kMargin;
    height_ = inner_w * (y1 - y0) / (x1 - x0) + 2 * kMargin;
  }
}

double SvgPlot::sx(double x) const { return kMargin + (x - x0_) / (x1_ - x0_) * (width_ - 2 * kMargin); }
double SvgPlot::sy(double y) const { return height_ - kMargin - (y - y0_) / (y1_ - y0_) * (height_ - 2 * kMargin); }

void SvgPlot::polyline(const std::vector<Point>& pts, const std::string& color, double width, bool dashed) {
  body_ += "<polyline fill=\"none\" stroke=\"" + color + "\" stroke-width=\"" + num(width) + "\"";
  if (dashed) body_ += " stroke-dasharray=\"5,4\"";
  body_ += " points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    body_ += (i ? " " : "") + num(sx(pts[i].x)) + "," + num(sy(pts[i].y));
  }
  body_ += "\"/>\n";
}

void SvgPlot::hline(double y, const std::string& color, const std::string& label) {
  body_ += "<line x1=\"" + num(sx(x0_)) + "\" y1=\"" + num(sy(y)) + "\" x2=\"" + num(sx(x1_)) +
           "\" y2=\"" + num(sy(y)) + "\" stroke=\"" + color + "\" stroke-dasharray=\"6,4\"/>\n";
  if (!label.empty()) text({x1_, y}, label);
}

void SvgPlot::vline(double x, const std::string& color, const std::string& label) {
  body_ += "<line x1=\"" + num(sx(x)) + "\" y1=\"" + num(sy(y0_)) + "\" x2=\"" + num(sx(x)) +
           "\" y2=\"" + num(sy(y1_)) + "\" stroke=\"" + color + "\" stroke-dasharray=\"3,3\"/>\n";
  if (!label.empty()) text({x, y1_}, label);
}

void SvgPlot::text(Point at, const std::string& s) {
  body_ += "<text x=\"" + num(sx(at.x) + 3) + "\" y=\"" + num(sy(at.y) - 3) +
           "\" font-size=\"11\" font-family=\"sans-serif\">" + escape(s) + "</text>\n";
}

void SvgPlot::title(const std::string& s) {
  body_ += "<text x=\"" + num(width_ / 2) + "\" y=\"24\" text-anchor=\"middle\" font-size=\"14\" "
           "font-family=\"sans-serif\">" + escape(s) + "</text>\n";
}

void SvgPlot::axes(const std::string& xlabel, const std::string& ylabel, int xticks, int yticks) {
  body_ += "<rect x=\"" + num(kMargin) + "\" y=\"" + num(kMargin) + "\" width=\"" +
           num(width_ - 2 * kMargin) + "\" height=\"" + num(height_ - 2 * kMargin) +
           "\" fill=\"none\" stroke=\"#444\"/>\n";
  for (int i = 0; i <= xticks; ++i) {
    const double x = x0_ + (x1_ - x0_) * i / xticks;
    body_ += "<text x=\"" + num(sx(x)) + "\" y=\"" + num(height_ - kMargin + 16) +
             "\" text-anchor=\"middle\" font-size=\"10\" font-family=\"sans-serif\">" + tick(x) + "</text>\n";
  }
  for (int i = 0; i <= yticks; ++i) {
    const double y = y0_ + (y1_ - y0_) * i / yticks;
    body_ += "<text x=\"" + num(kMargin - 6) + "\" y=\"" + num(sy(y) + 4) +
             "\" text-anchor=\"end\" font-size=\"10\" font-family=\"sans-serif\">" + tick(y) + "</text>\n";
  }
  body_ += "<text x=\"" + num(width_ / 2) + "\" y=\"" + num(height_ - 14) +
           "\" text-anchor=\"middle\" font-size=\"12\" font-family=\"sans-serif\">" + escape(xlabel) + "</text>\n";
  body_ += "<text x=\"14\" y=\"" + num(height_ / 2) + "\" transform=\"rotate(-90 14 " + num(height_ / 2) +
           ")\" text-anchor=\"middle\" font-size=\"12\" font-family=\"sans-serif\">" + escape(ylabel) + "</text>\n";
}

std::string SvgPlot::str() const {
  return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         num(width_) + "\" height=\"" + num(height_) + "\" viewBox=\"0 0 " + num(width_) + " " +
         num(height_) + "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n" + body_ + "</svg>\n";
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw ParseError(path, "cannot open file for writing");
  out << content;
}

}  // namespace opaque::cli
