#pragma once

#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include "gk/analysis.hpp"
#include "gk/construction.hpp"

namespace gk {

/**
 * Radial drawing parameters. Tree A grows outward from the centre to the
 * leaf circle; tree B is mirrored outside it, with its root drawn above the
 * picture. Slot p of a level with m slots sits at angle 2*pi*(p + 0.5)/m.
 */
struct RenderSpec {
  double leafRadius = 300.0;
  double vertexRadius = 4.5;
  double treeEdgeWidth = 2.6;
  double matchingEdgeWidth = 1.0;
  double margin = 30.0;
  bool shadeSevenFaces = true;
};

namespace detail {

struct Point {
  double x;
  double y;
};

inline std::string num(double v) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.2f", v);
  std::string s = buffer;
  return s == "-0.00" ? "0.00" : s;
}

class RadialLayout {
 public:
  RadialLayout(const GkGraph& gk, const RenderSpec& spec) : gk_(gk), spec_(spec) {
    const int k = gk.k();
    step_ = spec.leafRadius / (2.0 * k - 2.0);
    outer_ = spec.leafRadius + (2.0 * k - 3.0) * step_;  // radius of tree B depth 1
    gap_ = std::max(step_, 12.0);
    rootBRadius_ = outer_ + 2.0 * gap_;
    routeRadius_ = outer_ + 3.5 * gap_;
    centre_ = routeRadius_ + spec.margin;
    positions_.reserve(gk.labels.size());
    for (Vertex v = 0; v < gk.labels.size(); ++v) positions_.push_back(place(v));
  }

  double size() const { return 2.0 * centre_; }
  Point position(Vertex v) const { return positions_[v]; }
  double radius(Vertex v) const { return radius_of(gk_.labels[v]); }

  Point polar(double r, double angle) const { return {centre_ + r * std::cos(angle), centre_ - r * std::sin(angle)}; }

  /// Path data for one edge, starting at `from`.
  std::string edge_path(Vertex from, Vertex to, bool matching) const {
    if (to == gk_.rootB) return root_b_route(from, false);
    if (from == gk_.rootB) return root_b_route(to, true);
    const Point a = position(from);
    const Point b = position(to);
    if (!matching) return "M" + num(a.x) + " " + num(a.y) + " L" + num(b.x) + " " + num(b.y);
    return "M" + num(a.x) + " " + num(a.y) + arc_to(from, to);
  }

  /// Segment continuing a path from `from` to `to`.
  std::string continue_path(Vertex from, Vertex to, bool matching) const {
    if (matching) return arc_to(from, to);
    const Point b = position(to);
    return " L" + num(b.x) + " " + num(b.y);
  }

 private:
  static constexpr double kPi = std::numbers::pi;

  static double slot_angle(int pos, std::int64_t slots) {
    return 2.0 * kPi * (static_cast<double>(pos) + 0.5) / static_cast<double>(slots);
  }

  double radius_of(const VertexLabel& label) const {
    const int d = label.distance_to_root(gk_.k());
    if (label.tree == Tree::kB) return spec_.leafRadius + (2.0 * gk_.k() - 2.0 - d) * step_;
    return d * step_;
  }

  double angle_of(const VertexLabel& label) const {
    return label.kind == VertexKind::kRoot ? 0.0 : slot_angle(label.pos, level_size(label.depth));
  }

  Point place(Vertex v) const {
    const auto& label = gk_.labels[v];
    if (v == gk_.rootA) return polar(0.0, 0.0);
    if (v == gk_.rootB) return polar(rootBRadius_, kPi / 2);
    return polar(radius_of(label), angle_of(label));
  }

  /// Arc along the level circle through the shorter way round.
  std::string arc_to(Vertex from, Vertex to) const {
    const double r = radius(from);
    double delta = angle_of(gk_.labels[to]) - angle_of(gk_.labels[from]);
    while (delta > kPi) delta -= 2 * kPi;
    while (delta <= -kPi) delta += 2 * kPi;
    const Point b = position(to);
    // counterclockwise on screen is sweep-flag 0 because y points down
    return " A" + num(r) + " " + num(r) + " 0 0 " + (delta > 0 ? "0" : "1") + " " + num(b.x) + " " + num(b.y);
  }

  /// The three edges at rootB leave the picture and come back round to the top.
  std::string root_b_route(Vertex child, bool fromRoot) const {
    const double childAngle = angle_of(gk_.labels[child]);
    const Point c = position(child);
    const Point root = position(gk_.rootB);
    const double delta = 0.08;
    std::vector<std::string> pieces;  // from the child towards rootB
    const int pos = gk_.labels[child].pos;
    if (pos == 0) {
      const Point top = polar(outer_, kPi / 2);
      pieces.push_back(" A" + num(outer_) + " " + num(outer_) + " 0 0 0 " + num(top.x) + " " + num(top.y));
    } else {
      const bool ccw = pos == 2;
      const double arrive = ccw ? 2.5 * kPi - delta : kPi / 2 + delta;
      const Point out = polar(routeRadius_, childAngle);
      const Point end = polar(routeRadius_, arrive);
      pieces.push_back(" L" + num(out.x) + " " + num(out.y));
      pieces.push_back(" A" + num(routeRadius_) + " " + num(routeRadius_) + " 0 0 " + (ccw ? "0 " : "1 ") +
                       num(end.x) + " " + num(end.y));
    }
    if (!fromRoot) {
      std::string d = "M" + num(c.x) + " " + num(c.y);
      for (const auto& p : pieces) d += p;
      return d + " L" + num(root.x) + " " + num(root.y);
    }
    // reverse route: straight back along the same geometry
    std::string d = "M" + num(root.x) + " " + num(root.y);
    if (pos == 0) {
      const Point top = polar(outer_, kPi / 2);
      d += " L" + num(top.x) + " " + num(top.y);
      d += " A" + num(outer_) + " " + num(outer_) + " 0 0 1 " + num(c.x) + " " + num(c.y);
    } else {
      const bool ccw = pos == 2;
      const double arrive = ccw ? 2.5 * kPi - delta : kPi / 2 + delta;
      const Point out = polar(routeRadius_, childAngle);
      const Point end = polar(routeRadius_, arrive);
      d += " L" + num(end.x) + " " + num(end.y);
      d += " A" + num(routeRadius_) + " " + num(routeRadius_) + " 0 0 " + (ccw ? "1 " : "0 ") + num(out.x) + " " +
           num(out.y);
      d += " L" + num(c.x) + " " + num(c.y);
    }
    return d;
  }

  const GkGraph& gk_;
  RenderSpec spec_;
  double step_ = 0;
  double outer_ = 0;
  double gap_ = 0;
  double rootBRadius_ = 0;
  double routeRadius_ = 0;
  double centre_ = 0;
  std::vector<Point> positions_;
};

}  // namespace detail

/**
 * SVG 1.1 drawing of G_k: white tree vertices, black subdivision vertices,
 * bold tree edges, thin matching arcs, and optionally gray 7-faces.
 * Illustrative only; the embedding itself is certified by its genus.
 */
inline std::string to_svg(const GkGraph& gk, const RenderSpec& spec = {}) {
  const detail::RadialLayout layout(gk, spec);
  const auto& g = gk.graph;
  const std::string size = detail::num(layout.size());
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + size + "\" height=\"" + size +
         "\" viewBox=\"0 0 " + size + " " + size + "\">\n";
  out += "<title>G_" + std::to_string(gk.k()) + "</title>\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  auto is_matching = [&](Dart d) { return gk.edgeKinds[edge_of(d)] == EdgeKind::kMatching; };

  if (spec.shadeSevenFaces) {
    out += "<g id=\"faces\" fill=\"#c0c0c0\" stroke=\"none\">\n";
    for (const auto& face : face_orbits(g)) {
      if (face.length() != 7) continue;
      std::string d;
      bool viaRootB = false;
      for (Dart dart : face.darts) viaRootB = viaRootB || g.origin(dart) == gk.rootB;
      if (viaRootB) continue;
      const auto start = layout.position(g.origin(face.darts.front()));
      d = "M" + detail::num(start.x) + " " + detail::num(start.y);
      for (Dart dart : face.darts) d += layout.continue_path(g.origin(dart), g.target(dart), is_matching(dart));
      out += "<path class=\"face7\" d=\"" + d + " Z\"/>\n";
    }
    out += "</g>\n";
  }

  out += "<g id=\"edges\" fill=\"none\" stroke=\"black\">\n";
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto [u, v] = g.edge(e);
    const bool matching = gk.edgeKinds[e] == EdgeKind::kMatching;
    out += std::string("<path class=\"edge ") + (matching ? "matching" : "tree") + "\" stroke-width=\"" +
           detail::num(matching ? spec.matchingEdgeWidth : spec.treeEdgeWidth) + "\" d=\"" +
           layout.edge_path(u, v, matching) + "\"/>\n";
  }
  out += "</g>\n";

  out += "<g id=\"vertices\" stroke=\"black\" stroke-width=\"1.00\">\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const auto p = layout.position(v);
    const bool sub = gk.labels[v].kind == VertexKind::kSubdivision;
    out += std::string("<circle class=\"vertex ") + (sub ? "subdivision" : "tree") + "\" cx=\"" + detail::num(p.x) +
           "\" cy=\"" + detail::num(p.y) + "\" r=\"" + detail::num(spec.vertexRadius) + "\" fill=\"" +
           (sub ? "black" : "white") + "\"/>\n";
  }
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace gk
