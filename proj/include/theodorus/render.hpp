#pragma once

// Deterministic SVG figures of the spiral, highlighted multiples and arm
// systems. Vertices are written in spiral units with 4 decimals, so a parsed
// coordinate pair is the spiral_core vertex to within the formatting quantum.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "theodorus/discovery.hpp"
#include "theodorus/error.hpp"
#include "theodorus/spiral.hpp"

namespace theodorus {

struct Rgb {
  std::uint8_t r = 0, g = 0, b = 0;

  std::string hex() const {
    char buf[8];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", r, g, b);
    return buf;
  }
  friend bool operator==(const Rgb&, const Rgb&) = default;
};

struct Palette {
  Rgb background{255, 255, 255};
  Rgb spiral{96, 96, 96};
  Rgb highlight{255, 215, 0};   // yellow multiples
  Rgb square{34, 139, 34};      // green square-number reference arms
  Rgb muted{176, 176, 176};     // light grey systems
  std::vector<Rgb> systems{{255, 105, 180},   // pink
                           {255, 140, 0},     // orange
                           {30, 144, 255},    // blue
                           {218, 165, 32},    // yellow (darker than highlights)
                           {148, 0, 211},     // violet
                           {0, 139, 139},     // teal
                           {220, 20, 60},     // red
                           {139, 69, 19}};    // brown
};

struct ArmLayer {
  ArmSystem system;
  Rgb color;
  bool exemplary_only = true;
};

struct Scene {
  Index n_max = 300;
  std::optional<std::int64_t> highlight_divisor;
  std::vector<ArmLayer> arm_layers;
  bool show_square_reference = true;
  bool mirror = false;
  double width = 800.0;
  double height = 800.0;
  double stroke_px = 0.8;
  double arm_stroke_px = 2.0;
  double point_px = 2.5;
  double label_px = 12.0;
  bool labels = true;
  Palette palette;
};

namespace detail {

inline void append_fixed(std::string& out, double v) {
  char buf[48];
  if (std::fabs(v) < 0.00005) v = 0.0;  // no "-0.0000"
  std::snprintf(buf, sizeof buf, "%.4f", v);
  out += buf;
}

inline void append_xy(std::string& out, Point2 p) {
  append_fixed(out, p.x);
  out += ',';
  append_fixed(out, p.y);
}

// Points along the arm curve between consecutive members, radius and angle
// interpolated linearly in the frame that turns once per member.
inline std::vector<Point2> arm_curve(const Arm& arm, Index n_max, int subdivisions = 8) {
  std::vector<Point2> pts;
  const auto& ms = arm.members;
  for (std::size_t x = 0; x < ms.size() && ms[x].n <= n_max; ++x) {
    if (x > 0) {
      const SpiralPoint& a = ms[x - 1];
      const SpiralPoint& b = ms[x];
      for (int k = 1; k < subdivisions; ++k) {
        const double tau = static_cast<double>(k) / subdivisions;
        const double r = a.radius + tau * (b.radius - a.radius);
        const double t = a.theta + tau * (b.theta - a.theta - kTwoPi);
        pts.push_back({r * std::cos(t), r * std::sin(t)});
      }
    }
    pts.push_back(ms[x].vertex);
  }
  return pts;
}

inline void append_polyline(std::string& out, const std::vector<Point2>& pts, const Rgb& color,
                            double stroke) {
  out += "<polyline fill=\"none\" stroke=\"" + color.hex() + "\" stroke-width=\"";
  append_fixed(out, stroke);
  out += "\" stroke-linejoin=\"round\" points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) out += ' ';
    append_xy(out, pts[i]);
  }
  out += "\"/>\n";
}

}  // namespace detail

/// Standalone SVG 1.1 document; a pure function of the scene.
inline std::string render_svg(const Spiral& spiral, const Scene& scene) {
  if (scene.n_max < 2) throw Error("scene needs n_max >= 2");
  if (scene.n_max > spiral.max_n()) throw RangeExhausted("scene n_max beyond spiral table");
  const double extent = std::sqrt(static_cast<double>(scene.n_max)) + 1.0;
  const double unit = 2.0 * extent / std::min(scene.width, scene.height);  // spiral units per px
  const double flip = scene.mirror ? 1.0 : -1.0;  // SVG y points down

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"";
  detail::append_fixed(out, scene.width);
  out += "\" height=\"";
  detail::append_fixed(out, scene.height);
  out += "\" viewBox=\"";
  detail::append_fixed(out, -extent);
  out += ' ';
  detail::append_fixed(out, -extent);
  out += ' ';
  detail::append_fixed(out, 2.0 * extent);
  out += ' ';
  detail::append_fixed(out, 2.0 * extent);
  out += "\">\n";
  out += "<rect x=\"";
  detail::append_fixed(out, -extent);
  out += "\" y=\"";
  detail::append_fixed(out, -extent);
  out += "\" width=\"";
  detail::append_fixed(out, 2.0 * extent);
  out += "\" height=\"";
  detail::append_fixed(out, 2.0 * extent);
  out += "\" fill=\"" + scene.palette.background.hex() + "\"/>\n";

  out += "<g id=\"plot\" transform=\"scale(1,";
  detail::append_fixed(out, flip);
  out += ")\">\n";

  // spiral polygon through vertices 1..n_max
  out += "<polyline id=\"spiral\" fill=\"none\" stroke=\"" + scene.palette.spiral.hex() +
         "\" stroke-width=\"";
  detail::append_fixed(out, scene.stroke_px * unit);
  out += "\" points=\"";
  for (Index n = 1; n <= scene.n_max; ++n) {
    if (n > 1) out += ' ';
    detail::append_xy(out, spiral.vertex(n));
  }
  out += "\"/>\n";

  if (scene.highlight_divisor) {
    const auto d = static_cast<Index>(*scene.highlight_divisor);
    if (d < 1) throw Error("highlight divisor must be positive");
    out += "<g id=\"multiples\" fill=\"" + scene.palette.highlight.hex() + "\">\n";
    for (Index n = d; n <= scene.n_max; n += d) {
      const Point2 p = spiral.vertex(n);
      out += "<circle cx=\"";
      detail::append_fixed(out, p.x);
      out += "\" cy=\"";
      detail::append_fixed(out, p.y);
      out += "\" r=\"";
      detail::append_fixed(out, scene.point_px * unit);
      out += "\"/>\n";
    }
    out += "</g>\n";
  }

  if (scene.show_square_reference) {
    out += "<g id=\"squares\">\n";
    for (const Arm& arm : square_arms(spiral, scene.n_max)) {
      const auto pts = detail::arm_curve(arm, scene.n_max);
      if (pts.size() < 2) continue;
      detail::append_polyline(out, pts, scene.palette.square, scene.arm_stroke_px * unit);
    }
    out += "</g>\n";
  }

  struct Label {
    std::string text;
    Point2 at;
    Rgb color;
  };
  std::vector<Label> labels;
  out += "<g id=\"arms\">\n";
  for (const ArmLayer& layer : scene.arm_layers) {
    if (layer.system.arms.empty()) continue;
    std::vector<const Arm*> drawn;
    if (layer.exemplary_only) {
      drawn.push_back(&exemplary_arm(layer.system));
    } else {
      for (const Arm& a : layer.system.arms) drawn.push_back(&a);
    }
    for (const Arm* a : drawn) {
      const auto pts = detail::arm_curve(*a, scene.n_max);
      if (pts.size() < 2) continue;
      detail::append_polyline(out, pts, layer.color, scene.arm_stroke_px * unit);
    }
    const auto pts = detail::arm_curve(*drawn.front(), scene.n_max);
    if (!pts.empty()) labels.push_back({layer.system.label, pts.back(), layer.color});
  }
  out += "</g>\n</g>\n";

  if (scene.labels && !labels.empty()) {
    out += "<g id=\"labels\" font-family=\"sans-serif\" font-size=\"";
    detail::append_fixed(out, scene.label_px * unit);
    out += "\">\n";
    for (const Label& l : labels) {
      out += "<text x=\"";
      detail::append_fixed(out, l.at.x);
      out += "\" y=\"";
      detail::append_fixed(out, flip * l.at.y);
      out += "\" fill=\"" + l.color.hex() + "\">" + l.text + "</text>\n";
    }
    out += "</g>\n";
  }
  out += "</svg>\n";
  return out;
}

/// Scene showing every system of a discovery, colours assigned in label order.
inline Scene discovery_scene(const Discovery& disc, Index n_max, bool mirror,
                             const Palette& palette = {}) {
  Scene s;
  s.n_max = n_max;
  s.highlight_divisor = disc.divisor;
  s.mirror = mirror;
  s.palette = palette;
  std::size_t k = 0;
  for (const ArmSystem& sys : disc.systems) {
    const Rgb c = palette.systems.empty() ? palette.muted
                                          : palette.systems[k++ % palette.systems.size()];
    s.arm_layers.push_back({sys, c, true});
  }
  return s;
}

}  // namespace theodorus
