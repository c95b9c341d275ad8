#ifndef CZCAT_RENDER_HPP_
#define CZCAT_RENDER_HPP_

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "czcat/category.hpp"
#include "czcat/cyclic.hpp"
#include "czcat/sequences.hpp"

/// Deterministic SVG disc diagrams: marked points on a circle, chords for
/// arcs, shaded annular regions for interval systems, fan snapshots.
namespace czcat {

struct ArcLayer {
  std::vector<Arc> arcs;
};
struct RegionLayer {
  IntervalSystem system;
};
struct FanLayer {
  ThreadSequence thread;
  int count = 5;
};
struct AccMark {
  int segment = 1;
  bool filled = true;
};
struct AccMarkLayer {
  std::vector<AccMark> marks;
};

struct SceneLayer {
  std::string style;  // stroke/fill color
  std::variant<ArcLayer, RegionLayer, FanLayer, AccMarkLayer> payload;
};

struct Scene {
  int n = 1;
  int window = 8;
  std::vector<SceneLayer> layers;
};

namespace detail {

inline std::string fmt(double v) {
  char buf[32];
  // normalize negative zero so output is stable
  if (v > -5e-5 && v < 5e-5) v = 0.0;
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

struct Layout {
  int n, window;
  static constexpr double kR = 100.0, kCx = 110.0, kCy = 110.0;

  /// Angle of a boundary point: segment i spans [2pi(i-1)/n, 2pi i/n),
  /// marked points compressed toward the segment ends by an odd sigmoid.
  double angle(const BoundaryPoint& p) const {
    double seg_start = 2.0 * M_PI * (p.segment - 1) / n;
    if (p.kind == PointKind::Acc) return seg_start;
    double span = 2.0 * M_PI / n;
    double u = static_cast<double>(p.index) / (window + 1);
    double sigma = (1.0 + u / (1.0 + std::fabs(u))) / 2.0;
    return seg_start + span * sigma;
  }

  double px(double ang, double r) const { return kCx + r * std::cos(ang); }
  double py(double ang, double r) const { return kCy - r * std::sin(ang); }
};

}  // namespace detail

inline std::string render_svg(const Scene& scene) {
  if (scene.window < 2) throw std::invalid_argument("render_svg: window must be >= 2");
  if (scene.n < 1) throw std::invalid_argument("render_svg: n must be >= 1");
  const detail::Layout lay{scene.n, scene.window};
  const Circle circle(scene.n);
  using detail::fmt;

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"220\" height=\"220\" "
         "viewBox=\"0 0 220 220\">\n";
  svg += "<circle cx=\"110\" cy=\"110\" r=\"100\" fill=\"none\" stroke=\"black\" "
         "stroke-width=\"1\"/>\n";

  auto point_xy = [&](const BoundaryPoint& p, double r) {
    double a = lay.angle(p);
    return std::pair(lay.px(a, r), lay.py(a, r));
  };

  auto chord = [&](const Arc& arc, const std::string& style, const std::string& extra) {
    auto [x1, y1] = point_xy(arc.a, lay.kR);
    auto [x2, y2] = point_xy(arc.b, lay.kR);
    svg += "<line x1=\"" + fmt(x1) + "\" y1=\"" + fmt(y1) + "\" x2=\"" + fmt(x2) +
           "\" y2=\"" + fmt(y2) + "\" stroke=\"" + style + "\" stroke-width=\"1.2\"" + extra +
           "/>\n";
  };

  // annular band between the two radii along the interval, walked
  // anticlockwise from lo to hi in fixed angle steps
  auto band = [&](const Interval& iv, const std::string& style) {
    if (iv.lo == iv.hi) return;  // empty or a single point: nothing to shade
    double a0 = lay.angle(iv.lo), a1 = lay.angle(iv.hi);
    while (a1 <= a0 + 1e-12) a1 += 2.0 * M_PI;
    const double r_out = lay.kR, r_in = 82.0, step = 0.05;
    std::string d = "M " + fmt(lay.px(a0, r_out)) + " " + fmt(lay.py(a0, r_out));
    for (double a = a0 + step; a < a1; a += step)
      d += " L " + fmt(lay.px(a, r_out)) + " " + fmt(lay.py(a, r_out));
    d += " L " + fmt(lay.px(a1, r_out)) + " " + fmt(lay.py(a1, r_out));
    d += " L " + fmt(lay.px(a1, r_in)) + " " + fmt(lay.py(a1, r_in));
    for (double a = a1 - step; a > a0; a -= step)
      d += " L " + fmt(lay.px(a, r_in)) + " " + fmt(lay.py(a, r_in));
    d += " L " + fmt(lay.px(a0, r_in)) + " " + fmt(lay.py(a0, r_in));
    d += " Z";
    svg += "<path d=\"" + d + "\" fill=\"" + style + "\" fill-opacity=\"0.35\" stroke=\"none\"/>\n";
  };

  for (const SceneLayer& layer : scene.layers) {
    if (const auto* rl = std::get_if<RegionLayer>(&layer.payload)) {
      for (const auto& b : rl->system.blocks)
        for (const Interval& iv : b.intervals) band(iv, layer.style);
    }
  }
  for (const SceneLayer& layer : scene.layers) {
    if (const auto* al = std::get_if<ArcLayer>(&layer.payload)) {
      for (const Arc& a : al->arcs) chord(a, layer.style, "");
    } else if (const auto* fl = std::get_if<FanLayer>(&layer.payload)) {
      for (int i = 0; i < fl->count; ++i) {
        long long n = fl->thread.offset + i;
        if (auto e = thread_entry(circle, fl->thread, n)) {
          char op[16];
          std::snprintf(op, sizeof op, "%.2f", 0.25 + 0.5 * i / std::max(1, fl->count - 1));
          chord(*e, layer.style, std::string(" stroke-opacity=\"") + op + "\"");
        }
      }
      if (auto colim = mocolim_thread(circle, fl->thread))
        chord(*colim, layer.style, " stroke-dasharray=\"4 2\" stroke-width=\"2\"");
    }
  }

  // marked points
  for (int i = 1; i <= scene.n; ++i) {
    for (long long k = -scene.window; k <= scene.window; ++k) {
      auto [x, y] = point_xy(circle.marked(i, k), lay.kR);
      svg += "<circle cx=\"" + fmt(x) + "\" cy=\"" + fmt(y) +
             "\" r=\"1.5\" fill=\"black\"/>\n";
    }
  }

  // accumulation points: filled unless a mark layer says hollow
  std::vector<bool> filled(static_cast<size_t>(scene.n) + 1, true);
  for (const SceneLayer& layer : scene.layers)
    if (const auto* ml = std::get_if<AccMarkLayer>(&layer.payload))
      for (const AccMark& m : ml->marks)
        if (m.segment >= 1 && m.segment <= scene.n) filled[static_cast<size_t>(m.segment)] = m.filled;
  for (int i = 1; i <= scene.n; ++i) {
    auto [x, y] = point_xy(circle.acc(i), lay.kR);
    svg += "<circle cx=\"" + fmt(x) + "\" cy=\"" + fmt(y) + "\" r=\"3\" fill=\"" +
           (filled[static_cast<size_t>(i)] ? std::string("black") : std::string("white")) +
           "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  }

  svg += "</svg>\n";
  return svg;
}

}  // namespace czcat

#endif  // CZCAT_RENDER_HPP_
