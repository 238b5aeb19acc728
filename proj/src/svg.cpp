// svg.cpp -- deterministic SVG line chart.
#include "subwin/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace subwin {

namespace {

constexpr double kWidth = 640, kHeight = 400;
constexpr double kLeft = 56, kRight = 16, kTop = 32, kBottom = 40;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

}  // namespace

std::string curve_svg(const LocationCurve& curve, const std::string& title) {
  double max_rate = 0.0;
  for (const CurvePoint& pt : curve.points) max_rate = std::max(max_rate, pt.rate);
  // Round the axis up to a tidy bound; an all-zero curve still gets a scale.
  double y_max = max_rate <= 0.0 ? 1.0 : std::ceil(max_rate * 1.1);

  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto sx = [&](double x) { return kLeft + x * plot_w; };
  auto sy = [&](double rate) { return kTop + (1.0 - rate / y_max) * plot_h; };

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(kWidth) + "\" height=\"" +
         fmt(kHeight) + "\" viewBox=\"0 0 " + fmt(kWidth) + " " + fmt(kHeight) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out += "<text x=\"" + fmt(kWidth / 2) + "\" y=\"20\" text-anchor=\"middle\" "
         "font-family=\"sans-serif\" font-size=\"14\">" + escape(title) + "</text>\n";

  // Axes.
  out += "<line x1=\"" + fmt(kLeft) + "\" y1=\"" + fmt(kTop) + "\" x2=\"" + fmt(kLeft) +
         "\" y2=\"" + fmt(kHeight - kBottom) + "\" stroke=\"black\"/>\n";
  out += "<line x1=\"" + fmt(kLeft) + "\" y1=\"" + fmt(kHeight - kBottom) + "\" x2=\"" +
         fmt(kWidth - kRight) + "\" y2=\"" + fmt(kHeight - kBottom) + "\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 5; ++i) {
    const double x = double(i) / 5.0;
    out += "<text x=\"" + fmt(sx(x)) + "\" y=\"" + fmt(kHeight - kBottom + 18) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" + fmt(x) +
           "</text>\n";
    const double y = y_max * double(i) / 5.0;
    out += "<text x=\"" + fmt(kLeft - 6) + "\" y=\"" + fmt(sy(y) + 4) +
           "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" + fmt(y) +
           "</text>\n";
  }
  out += "<text x=\"" + fmt(kWidth / 2) + "\" y=\"" + fmt(kHeight - 6) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">relative "
         "position</text>\n";
  out += "<text x=\"14\" y=\"" + fmt(kHeight / 2) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" "
         "transform=\"rotate(-90 14 " + fmt(kHeight / 2) + ")\">SWs per 100 windows</text>\n";

  // Polyline segments between consecutive present bins; markers at every
  // present bin.
  std::string path;
  bool open = false;
  double prev_pos = -1.0;
  const double spacing = 1.0 / double(curve.n_points - 1);
  for (const CurvePoint& pt : curve.points) {
    const bool contiguous = open && pt.position - prev_pos <= spacing * 1.5;
    path += contiguous ? " L " : " M ";
    path += fmt(sx(pt.position)) + " " + fmt(sy(pt.rate));
    open = true;
    prev_pos = pt.position;
  }
  if (!path.empty())
    out += "<path d=\"" + path.substr(1) + "\" fill=\"none\" stroke=\"#3366cc\" "
           "stroke-width=\"1.5\"/>\n";
  for (const CurvePoint& pt : curve.points)
    out += "<circle cx=\"" + fmt(sx(pt.position)) + "\" cy=\"" + fmt(sy(pt.rate)) +
           "\" r=\"2.5\" fill=\"#3366cc\"/>\n";

  out += "</svg>\n";
  return out;
}

}  // namespace subwin
