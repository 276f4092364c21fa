#include "momhist/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace momhist {

namespace {

// Cross product of (b - a) and (c - a).
Scalar cross(const Point& a, const Point& b, const Point& c) {
  return (b.t0 - a.t0) * (c.h - a.h) - (b.h - a.h) * (c.t0 - a.t0);
}

}  // namespace

Line Line::normalized() const {
  if (!a.is_zero()) return {Scalar(1), b / a, c / a};
  if (!b.is_zero()) return {Scalar(0), Scalar(1), c / b};
  throw std::domain_error("degenerate line");
}

bool HalfPlane::contains(const Point& p) const {
  const int s = line.side(p);
  switch (rel) {
    case Relation::Less: return s < 0;
    case Relation::LessEqual: return s <= 0;
    case Relation::Greater: return s > 0;
    case Relation::GreaterEqual: return s >= 0;
  }
  return false;
}

std::optional<Point> intersect(const Line& l1, const Line& l2) {
  const Scalar det = l1.a * l2.b - l2.a * l1.b;
  if (det.is_zero()) return std::nullopt;
  return Point{(l1.c * l2.b - l2.c * l1.b) / det, (l1.a * l2.c - l2.a * l1.c) / det};
}

Scalar signed_area(const Polygon& poly) {
  Scalar twice;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point& p = poly[i];
    const Point& q = poly[(i + 1) % poly.size()];
    twice += p.t0 * q.h - q.t0 * p.h;
  }
  return twice / Scalar(2);
}

Point vertex_mean(const Polygon& poly) {
  if (poly.empty()) throw std::domain_error("empty polygon");
  Point sum;
  for (const auto& p : poly) {
    sum.t0 += p.t0;
    sum.h += p.h;
  }
  const Scalar n(static_cast<long>(poly.size()));
  return {sum.t0 / n, sum.h / n};
}

Polygon canonicalize(Polygon poly) {
  // repeated vertices
  Polygon dedup;
  for (auto& p : poly) {
    if (dedup.empty() || !(dedup.back() == p)) dedup.push_back(std::move(p));
  }
  while (dedup.size() > 1 && dedup.front() == dedup.back()) dedup.pop_back();

  // collinear vertices; repeat until stable since removals expose new triples
  bool changed = true;
  while (changed && dedup.size() >= 3) {
    changed = false;
    for (std::size_t i = 0; i < dedup.size() && dedup.size() >= 3; ++i) {
      const Point& prev = dedup[(i + dedup.size() - 1) % dedup.size()];
      const Point& next = dedup[(i + 1) % dedup.size()];
      if (cross(prev, dedup[i], next).is_zero()) {
        dedup.erase(dedup.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }

  if (dedup.empty()) return dedup;
  auto first = std::min_element(dedup.begin(), dedup.end(), [](const Point& x, const Point& y) {
    if (x.t0 != y.t0) return x.t0 > y.t0;
    return x.h < y.h;
  });
  std::rotate(dedup.begin(), first, dedup.end());
  return dedup;
}

Polygon clip(const Polygon& poly, const HalfPlane& hp) {
  const bool keep_negative = hp.rel == Relation::Less || hp.rel == Relation::LessEqual;
  Polygon out;
  const std::size_t m = poly.size();
  for (std::size_t i = 0; i < m; ++i) {
    const Point& p = poly[i];
    const Point& q = poly[(i + 1) % m];
    const Scalar vp = hp.line.value(p);
    const Scalar vq = hp.line.value(q);
    const int sp = keep_negative ? -vp.sign() : vp.sign();
    const int sq = keep_negative ? -vq.sign() : vq.sign();
    if (sp >= 0) out.push_back(p);
    if ((sp > 0 && sq < 0) || (sp < 0 && sq > 0)) {
      const Scalar t = vp / (vp - vq);
      out.push_back({p.t0 + t * (q.t0 - p.t0), p.h + t * (q.h - p.h)});
    }
  }
  out = canonicalize(std::move(out));
  if (out.size() < 3) out.clear();
  return out;
}

std::optional<std::pair<Polygon, Polygon>> split(const Polygon& poly, const Line& line) {
  bool any_neg = false;
  bool any_pos = false;
  std::vector<Scalar> values;
  values.reserve(poly.size());
  for (const auto& p : poly) {
    values.push_back(line.value(p));
    any_neg = any_neg || values.back().sign() < 0;
    any_pos = any_pos || values.back().sign() > 0;
  }
  if (!any_neg || !any_pos) return std::nullopt;

  Polygon neg;
  Polygon pos;
  const std::size_t m = poly.size();
  for (std::size_t i = 0; i < m; ++i) {
    const Point& p = poly[i];
    const Point& q = poly[(i + 1) % m];
    const int sp = values[i].sign();
    const int sq = values[(i + 1) % m].sign();
    if (sp <= 0) neg.push_back(p);
    if (sp >= 0) pos.push_back(p);
    if ((sp < 0 && sq > 0) || (sp > 0 && sq < 0)) {
      const Scalar t = values[i] / (values[i] - values[(i + 1) % m]);
      Point x{p.t0 + t * (q.t0 - p.t0), p.h + t * (q.h - p.h)};
      neg.push_back(x);
      pos.push_back(std::move(x));
    }
  }
  return std::make_pair(canonicalize(std::move(neg)), canonicalize(std::move(pos)));
}

Polygon convex_hull(std::vector<Point> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.size() < 3) return points;
  std::vector<Point> hull(2 * points.size());
  std::size_t k = 0;
  for (const auto& p : points) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p).sign() <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = points.size() - 1, t = k + 1; i > 0; --i) {
    while (k >= t && cross(hull[k - 2], hull[k - 1], points[i - 1]).sign() <= 0) --k;
    hull[k++] = points[i - 1];
  }
  hull.resize(k - 1);
  return canonicalize(std::move(hull));
}

Line line_through(const Point& p, const Point& q) {
  // (q.h - p.h) * t0 - (q.t0 - p.t0) * h = const
  const Scalar a = q.h - p.h;
  const Scalar b = p.t0 - q.t0;
  return Line{a, b, a * p.t0 + b * p.h}.normalized();
}

}  // namespace momhist
