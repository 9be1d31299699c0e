#include "lamcf/render.hpp"

#include <cstdio>

#include "lamcf/error.hpp"
#include "lamcf/gl2.hpp"

namespace lamcf {
namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  std::string s(buf);
  if (s == "-0.000000") s = "0.000000";
  return s;
}

double endpoint_value(const BoundaryPoint& p) {
  if (auto* r = std::get_if<Rational>(&p)) return static_cast<double>(r->to_long_double());
  if (auto* s = std::get_if<QuadSurd>(&p)) return static_cast<double>(s->to_long_double());
  throw Error(ErrorCode::FixedPointAtInfinity, "axis ends at infinity");
}

void check_viewport(const RenderSpec& spec) {
  if (!(spec.x_min < spec.x_max) || !(spec.height > 0.0) || spec.pixel_width < 1 ||
      spec.translate_depth < 0 || !(spec.stroke_width > 0.0)) {
    throw Error(ErrorCode::InvalidViewport, "need x_min < x_max, height > 0, stroke > 0");
  }
}

}  // namespace

std::vector<HalfCircle> axis_circles(const RenderSpec& spec) {
  check_viewport(spec);
  std::vector<HalfCircle> out;
  for (const IntMat2& m : spec.matrices) {
    for (int j = -spec.translate_depth; j <= spec.translate_depth; ++j) {
      IntMat2 shift = IntMat2::translation(j);
      Axis axis = axis_of(shift * m * shift.inverse());
      const double lo = endpoint_value(axis.lo);
      const double hi = endpoint_value(axis.hi);
      out.push_back({(lo + hi) / 2.0, (hi - lo) / 2.0});
    }
  }
  return out;
}

std::string render_axes(const RenderSpec& spec) {
  const std::vector<HalfCircle> circles = axis_circles(spec);
  const double scale = spec.pixel_width / (spec.x_max - spec.x_min);
  const double width_px = spec.pixel_width;
  const double height_px = spec.height * scale;
  const auto px = [&](double x) { return (x - spec.x_min) * scale; };

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + fmt(width_px) +
         "\" height=\"" + fmt(height_px) + "\" viewBox=\"0 0 " + fmt(width_px) + " " +
         fmt(height_px) + "\">\n";
  svg += "<defs><clipPath id=\"view\"><rect x=\"0\" y=\"0\" width=\"" + fmt(width_px) +
         "\" height=\"" + fmt(height_px) + "\"/></clipPath></defs>\n";
  svg += "<rect x=\"0\" y=\"0\" width=\"" + fmt(width_px) + "\" height=\"" + fmt(height_px) +
         "\" fill=\"white\"/>\n";
  svg += "<line x1=\"0\" y1=\"" + fmt(height_px) + "\" x2=\"" + fmt(width_px) + "\" y2=\"" +
         fmt(height_px) + "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  svg += "<g clip-path=\"url(#view)\" fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"" +
         fmt(spec.stroke_width) + "\">\n";
  for (const HalfCircle& c : circles) {
    const double r = c.radius * scale;
    svg += "<path d=\"M " + fmt(px(c.center - c.radius)) + " " + fmt(height_px) + " A " + fmt(r) +
           " " + fmt(r) + " 0 0 1 " + fmt(px(c.center + c.radius)) + " " + fmt(height_px) +
           "\"/>\n";
  }
  svg += "</g>\n</svg>\n";
  return svg;
}

}  // namespace lamcf
