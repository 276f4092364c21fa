#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "momhist/scalar.hpp"

namespace momhist {

/// A point of the (anchor, width) parameter plane.
struct Point {
  Scalar t0;
  Scalar h;

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;
};

/// The line a*t0 + b*h = c.
struct Line {
  Scalar a;
  Scalar b;
  Scalar c;

  /// Sign of a*t0 + b*h - c.
  int side(const Point& p) const { return (a * p.t0 + b * p.h - c).sign(); }
  Scalar value(const Point& p) const { return a * p.t0 + b * p.h - c; }

  /// Rescaled so the t0 coefficient is 1, or the h coefficient is 1 when a = 0.
  Line normalized() const;

  friend bool operator==(const Line&, const Line&) = default;
};

enum class Relation { Less, LessEqual, Greater, GreaterEqual };

/// { p : line.value(p) REL 0 }.
struct HalfPlane {
  Line line;
  Relation rel;

  bool contains(const Point& p) const;
  bool is_open() const { return rel == Relation::Less || rel == Relation::Greater; }
};

std::optional<Point> intersect(const Line& l1, const Line& l2);

/// Vertices of a convex polygon, counterclockwise in the (t0 horizontal, h
/// vertical) plane, no repeated or collinear consecutive vertices.
using Polygon = std::vector<Point>;

Scalar signed_area(const Polygon& poly);
Point vertex_mean(const Polygon& poly);

/// Drops repeated and collinear vertices and rotates so the vertex with the
/// largest t0 (then smallest h) comes first. Assumes counterclockwise input.
Polygon canonicalize(Polygon poly);

/// Keeps the part of poly where hp holds, ignoring openness (closure).
Polygon clip(const Polygon& poly, const HalfPlane& hp);

/// Splits poly along the line. Returns nullopt if the line does not cross the
/// interior; otherwise {negative side, positive side}, both canonical.
std::optional<std::pair<Polygon, Polygon>> split(const Polygon& poly, const Line& line);

/// Counterclockwise convex hull (Andrew's monotone chain), canonical.
Polygon convex_hull(std::vector<Point> points);

/// Line through two distinct points, normalized.
Line line_through(const Point& p, const Point& q);

}  // namespace momhist
