#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "harmconv/convolution.hpp"

namespace harmconv {

struct FigureSpec {
  int rings = 10;
  int rays = 24;
  int samples_per_curve = 512;
  double max_radius = 0.99;
  int width_px = 600;
  int height_px = 600;
  // Optional fixed window {x_min, x_max, y_min, y_max} of the image plane.
  // The images are unbounded near the singular points, so the auto-fitted
  // view is dominated by a few far samples; a window clips to the region of interest.
  std::optional<std::array<double, 4>> view;
};

struct StrokeStyle {
  std::string ring_color = "#1f4e9c";
  std::string ray_color = "#b03a2e";
  double width = 0.8;
};

// Throws ParameterError unless rings >= 1, rays >= 2, samples >= 64,
// 0 < max_radius <= 0.999 and positive pixel sizes.
void validate(const FigureSpec& fig);

struct SampledCurve {
  enum class Kind { Ring, Ray } kind;
  double parameter;                    // ring radius or ray angle
  std::vector<Cx> preimages;           // sample points in the disk
  std::vector<std::optional<Cx>> images;  // conv_value, nullopt where dropped
};

struct Webbing {
  std::vector<SampledCurve> curves;  // rings (inner to outer), then rays by angle
  std::size_t dropped = 0;
};

// Images of |z| = r_j (r_j = max_radius * j / rings) and of arg z = 2 pi k / rays.
Webbing sample_webbing(const ConvolutionSpec& spec, const FigureSpec& fig);

// Affine map from the image plane to SVG pixels: uniform scale, y flipped.
// Auto-fit leaves a 5% margin around the samples; a fixed window has none.
struct Viewport {
  double scale = 1.0;
  double center_x = 0.0, center_y = 0.0;
  int width_px = 600, height_px = 600;
  double px(Cx w) const { return width_px / 2.0 + scale * (w.real() - center_x); }
  double py(Cx w) const { return height_px / 2.0 - scale * (w.imag() - center_y); }
};

Viewport fit_viewport(const Webbing& webbing, const FigureSpec& fig);

// SVG 1.1 document: one <polyline> per unbroken run of each curve.
std::string render_webbing(const ConvolutionSpec& spec, const FigureSpec& fig,
                           const StrokeStyle& style = {});
std::string render_svg(const Webbing& webbing, const ConvolutionSpec& spec,
                       const FigureSpec& fig, const StrokeStyle& style = {});

}  // namespace harmconv
