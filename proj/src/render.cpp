#include "harmconv/render.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <fmt/format.h>

#include "harmconv/parallel.hpp"

namespace harmconv {

void validate(const FigureSpec& fig) {
  if (fig.rings < 1) throw ParameterError("FigureSpec: rings must be >= 1");
  if (fig.rays < 2) throw ParameterError("FigureSpec: rays must be >= 2");
  if (fig.samples_per_curve < 64) throw ParameterError("FigureSpec: samples_per_curve must be >= 64");
  if (!(fig.max_radius > 0.0 && fig.max_radius <= 0.999))
    throw ParameterError("FigureSpec: max_radius must lie in (0, 0.999]");
  if (fig.width_px < 1 || fig.height_px < 1)
    throw ParameterError("FigureSpec: width and height must be positive");
  if (fig.view) {
    const auto& v = *fig.view;
    if (!(v[0] < v[1] && v[2] < v[3]) || !std::isfinite(v[1] - v[0]) || !std::isfinite(v[3] - v[2]))
      throw ParameterError("FigureSpec: view must satisfy x_min < x_max and y_min < y_max");
  }
}

Webbing sample_webbing(const ConvolutionSpec& spec, const FigureSpec& fig) {
  validate(fig);
  Webbing web;
  const int samples = fig.samples_per_curve;
  for (int j = 1; j <= fig.rings; ++j) {
    SampledCurve c{SampledCurve::Kind::Ring, fig.max_radius * j / fig.rings, {}, {}};
    // Closed curve: the last sample repeats the first angle.
    for (int k = 0; k <= samples; ++k)
      c.preimages.push_back(std::polar(c.parameter, 2.0 * std::numbers::pi * (k % samples) / samples));
    web.curves.push_back(std::move(c));
  }
  for (int k = 0; k < fig.rays; ++k) {
    SampledCurve c{SampledCurve::Kind::Ray, 2.0 * std::numbers::pi * k / fig.rays, {}, {}};
    for (int s = 0; s < samples; ++s)
      c.preimages.push_back(std::polar(fig.max_radius * s / (samples - 1), c.parameter));
    web.curves.push_back(std::move(c));
  }

  parallel_for(web.curves.size(), 1, [&](std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) {
      SampledCurve& c = web.curves[i];
      c.images.resize(c.preimages.size());
      for (std::size_t s = 0; s < c.preimages.size(); ++s) {
        try {
          c.images[s] = conv_value(spec, c.preimages[s]);
        } catch (const Error&) {
          c.images[s] = std::nullopt;
        }
      }
    }
  });
  for (const auto& c : web.curves)
    web.dropped += std::size_t(std::count(c.images.begin(), c.images.end(), std::nullopt));
  return web;
}

Viewport fit_viewport(const Webbing& webbing, const FigureSpec& fig) {
  if (fig.view) {
    const auto& v = *fig.view;
    Viewport vp;
    vp.width_px = fig.width_px;
    vp.height_px = fig.height_px;
    vp.scale = std::min(fig.width_px / (v[1] - v[0]), fig.height_px / (v[3] - v[2]));
    vp.center_x = 0.5 * (v[0] + v[1]);
    vp.center_y = 0.5 * (v[2] + v[3]);
    return vp;
  }
  double min_x = std::numeric_limits<double>::infinity(), max_x = -min_x;
  double min_y = min_x, max_y = -min_x;
  for (const auto& c : webbing.curves)
    for (const auto& w : c.images) {
      if (!w) continue;
      min_x = std::min(min_x, w->real());
      max_x = std::max(max_x, w->real());
      min_y = std::min(min_y, w->imag());
      max_y = std::max(max_y, w->imag());
    }
  Viewport vp;
  vp.width_px = fig.width_px;
  vp.height_px = fig.height_px;
  if (!(min_x <= max_x)) return vp;
  const double span_x = std::max(max_x - min_x, 1e-12);
  const double span_y = std::max(max_y - min_y, 1e-12);
  vp.scale = std::min(fig.width_px / (1.1 * span_x), fig.height_px / (1.1 * span_y));
  vp.center_x = 0.5 * (min_x + max_x);
  vp.center_y = 0.5 * (min_y + max_y);
  return vp;
}

std::string render_svg(const Webbing& webbing, const ConvolutionSpec& spec,
                       const FigureSpec& fig, const StrokeStyle& style) {
  const Viewport vp = fit_viewport(webbing, fig);
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
  out += fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{0}\" height=\"{1}\" "
      "viewBox=\"0 0 {0} {1}\">\n",
      fig.width_px, fig.height_px);
  out += fmt::format("<!-- image of the disk under {}; rings={} rays={} samples={} max_radius={} -->\n",
                     spec.describe(), fig.rings, fig.rays, fig.samples_per_curve, fig.max_radius);
  out += fmt::format("<!-- dropped samples: {} -->\n", webbing.dropped);
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (fig.view) {
    out += fmt::format(
        "<defs><clipPath id=\"window\"><rect width=\"{}\" height=\"{}\"/></clipPath></defs>\n",
        fig.width_px, fig.height_px);
    out += "<g clip-path=\"url(#window)\">\n";
  }

  auto emit_group = [&](SampledCurve::Kind kind, const std::string& cls, const std::string& color) {
    out += fmt::format("<g class=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"{}\">\n", cls,
                       color, style.width);
    for (const auto& c : webbing.curves) {
      if (c.kind != kind) continue;
      std::string points;
      std::size_t run = 0;
      auto flush = [&] {
        if (run >= 2) out += fmt::format("<polyline points=\"{}\"/>\n", points);
        points.clear();
        run = 0;
      };
      for (const auto& w : c.images) {
        if (!w) {
          flush();
          continue;
        }
        if (run > 0) points += ' ';
        points += fmt::format("{:.3f},{:.3f}", vp.px(*w), vp.py(*w));
        ++run;
      }
      flush();
    }
    out += "</g>\n";
  };
  emit_group(SampledCurve::Kind::Ring, "rings", style.ring_color);
  emit_group(SampledCurve::Kind::Ray, "rays", style.ray_color);
  if (fig.view) out += "</g>\n";
  out += "</svg>\n";
  return out;
}

std::string render_webbing(const ConvolutionSpec& spec, const FigureSpec& fig,
                           const StrokeStyle& style) {
  return render_svg(sample_webbing(spec, fig), spec, fig, style);
}

}  // namespace harmconv
