#pragma once

#include <string>
#include <vector>

#include "lamcf/int_mat2.hpp"

namespace lamcf {

/// What to draw: the axes of hyperbolic matrices as half-circles in the
/// upper half-plane, seen through the window [x_min, x_max] x [0, height].
struct RenderSpec {
  double x_min = -3.0;
  double x_max = 3.0;
  double height = 3.0;
  double stroke_width = 1.5;
  std::vector<IntMat2> matrices;
  /// Also draw the conjugates T^j m T^-j, |j| <= depth, T = (1 1; 0 1).
  int translate_depth = 0;
  int pixel_width = 800;
};

/// One geodesic as drawn, in world coordinates.
struct HalfCircle {
  double center;
  double radius;
};

/// The half-circles render_axes would draw, in drawing order.
std::vector<HalfCircle> axis_circles(const RenderSpec& spec);

/// SVG 1.1 document; byte-identical for identical specs.
/// Throws InvalidViewport, NotHyperbolic.
std::string render_axes(const RenderSpec& spec);

}  // namespace lamcf
