#include "momhist/levelset.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace momhist {

std::vector<BoundaryLine> boundary_lines(const Dataset& d, int max_bins) {
  if (max_bins < 1) throw std::invalid_argument("max bins must be at least 1");
  std::vector<BoundaryLine> lines;
  for (const auto& x : d.distinct_values()) {
    for (int k = 0; k <= max_bins; ++k) lines.push_back({k, x});
  }
  return lines;
}

namespace {

LevelSet make_level_set(Shape shape, Polygon poly, std::size_t merged) {
  LevelSet ls;
  ls.shape = std::move(shape);
  ls.vertices = canonicalize(std::move(poly));
  ls.h_min = ls.vertices.front().h;
  ls.h_max = ls.vertices.front().h;
  for (const auto& p : ls.vertices) {
    ls.h_min = min(ls.h_min, p.h);
    ls.h_max = max(ls.h_max, p.h);
  }
  ls.centroid = vertex_mean(ls.vertices);
  ls.area = signed_area(ls.vertices);
  ls.merged_faces = merged;
  return ls;
}

}  // namespace

Catalog enumerate_level_sets(const Dataset& d, int max_bins, BinCountMode mode,
                             const DomainOptions& options) {
  Catalog cat;
  cat.domain = build_domain(d, max_bins, mode, options);
  cat.dataset_digest = d.digest();
  cat.n = d.size();
  cat.max_bins = max_bins;
  cat.mode = mode;

  // Arrangement of boundary lines inside the (convex) domain; every face is convex.
  std::vector<Polygon> faces{cat.domain.vertices};
  for (const auto& bl : boundary_lines(d, max_bins)) {
    const Line line = bl.line();
    std::vector<Polygon> next;
    next.reserve(faces.size() + 8);
    for (auto& face : faces) {
      if (auto parts = split(face, line)) {
        next.push_back(std::move(parts->first));
        next.push_back(std::move(parts->second));
      } else {
        next.push_back(std::move(face));
      }
    }
    faces = std::move(next);
  }

  std::map<Shape, std::vector<Polygon>> by_shape;
  for (auto& face : faces) {
    const Point c = vertex_mean(face);
    Shape s = bin_counts(d, BinGrid{c.t0, c.h, max_bins});
    by_shape[std::move(s)].push_back(std::move(face));
  }

  for (auto& [shape, pieces] : by_shape) {
    if (pieces.size() == 1) {
      cat.level_sets.push_back(make_level_set(shape, std::move(pieces.front()), 1));
      continue;
    }
    std::vector<Point> all;
    Scalar piece_area;
    for (const auto& p : pieces) {
      all.insert(all.end(), p.begin(), p.end());
      piece_area += signed_area(p);
    }
    Polygon hull = convex_hull(std::move(all));
    if (signed_area(hull) == piece_area) {
      cat.level_sets.push_back(make_level_set(shape, std::move(hull), pieces.size()));
    } else {
      auto largest = std::max_element(pieces.begin(), pieces.end(), [](const Polygon& a, const Polygon& b) {
        return signed_area(a) < signed_area(b);
      });
      cat.level_sets.push_back(make_level_set(shape, *largest, 1));
      cat.anomalies.push_back({shape, pieces});
    }
  }
  // std::map iteration already yields (bins, counts) order.
  return cat;
}

const LevelSet* lookup(const Catalog& c, const Shape& s) {
  auto it = std::lower_bound(c.level_sets.begin(), c.level_sets.end(), s,
                             [](const LevelSet& ls, const Shape& key) { return ls.shape < key; });
  if (it == c.level_sets.end() || it->shape != s) return nullptr;
  return &*it;
}

const LevelSet* lookup(const Catalog& c, const std::vector<int>& counts) {
  try {
    return lookup(c, Shape(counts));
  } catch (const std::invalid_argument&) {
    return nullptr;
  }
}

bool owns_point(const Dataset& d, const Catalog& c, const LevelSet& ls, const Point& p) {
  if (!c.domain.contains(p)) return false;
  return bin_counts(d, BinGrid{p.t0, p.h, c.max_bins}) == ls.shape;
}

namespace {

// Every lattice coordinate, data value and constraint of the oracle, scaled by
// a common denominator so membership and bin counting run on machine integers.
struct IntegerFrame {
  std::int64_t t_lo = 0, t_step = 0, h_lo = 0, h_step = 0;
  std::vector<std::int64_t> values;
  struct Constraint {
    std::int64_t a, b, c;
    Relation rel;
  };
  std::vector<Constraint> constraints;
};

bool fits(const mpz_class& z) {
  static const mpz_class limit = mpz_class(1) << 60;
  return abs(z) < limit;
}

std::optional<IntegerFrame> integer_frame(const Dataset& d, const Domain& dom, const Scalar& t_lo,
                                          const Scalar& t_hi, const Scalar& h_lo, const Scalar& h_hi,
                                          int resolution) {
  std::vector<Scalar> all(d.values().begin(), d.values().end());
  for (const Scalar* s : {&t_lo, &t_hi, &h_lo, &h_hi}) all.push_back(*s);
  const Scalar scale(mpq_class(denominator_lcm(all.data(), all.size()) * (resolution - 1)));
  auto scaled = [&scale](const Scalar& x) -> std::optional<std::int64_t> {
    const Scalar y = x * scale;
    if (!y.is_integer() || !fits(y.numerator())) return std::nullopt;
    return y.numerator().get_si();
  };
  IntegerFrame f;
  const auto tl = scaled(t_lo), ts = scaled((t_hi - t_lo) / Scalar(resolution - 1));
  const auto hl = scaled(h_lo), hs = scaled((h_hi - h_lo) / Scalar(resolution - 1));
  if (!tl || !ts || !hl || !hs) return std::nullopt;
  f.t_lo = *tl, f.t_step = *ts, f.h_lo = *hl, f.h_step = *hs;
  for (const auto& x : d.values()) {
    const auto v = scaled(x);
    if (!v) return std::nullopt;
    f.values.push_back(*v);
  }
  for (const auto& dc : dom.constraints) {
    // a t0 + b h REL c  becomes  A T + B H REL C  with T = t0 scale, H = h scale.
    const Line& l = dc.half_plane.line;
    const Scalar coeffs[] = {l.a, l.b, l.c * scale};
    const Scalar m(mpq_class(denominator_lcm(coeffs, 3)));
    const Scalar a = l.a * m, b = l.b * m, c = l.c * scale * m;
    if (!fits(a.numerator()) || !fits(b.numerator()) || !fits(c.numerator())) return std::nullopt;
    f.constraints.push_back({a.numerator().get_si(), b.numerator().get_si(), c.numerator().get_si(),
                             dc.half_plane.rel});
  }
  return f;
}

}  // namespace

std::set<Shape> grid_sample_oracle(const Dataset& d, int max_bins, int resolution, BinCountMode mode,
                                   const DomainOptions& options) {
  if (resolution < 2) throw std::invalid_argument("resolution must be at least 2");
  const Domain dom = build_domain(d, max_bins, mode, options);
  Scalar t_lo = dom.vertices.front().t0, t_hi = t_lo;
  Scalar h_lo = dom.vertices.front().h, h_hi = h_lo;
  for (const auto& v : dom.vertices) {
    t_lo = min(t_lo, v.t0);
    t_hi = max(t_hi, v.t0);
    h_lo = min(h_lo, v.h);
    h_hi = max(h_hi, v.h);
  }
  std::set<Shape> seen;

  if (const auto f = integer_frame(d, dom, t_lo, t_hi, h_lo, h_hi, resolution)) {
    std::vector<int> counts;
    for (int i = 0; i < resolution; ++i) {
      const std::int64_t T = f->t_lo + f->t_step * i;
      for (int j = 0; j < resolution; ++j) {
        const std::int64_t H = f->h_lo + f->h_step * j;
        bool inside = H > 0;
        for (const auto& c : f->constraints) {
          if (!inside) break;
          const __int128 v = static_cast<__int128>(c.a) * T + static_cast<__int128>(c.b) * H - c.c;
          switch (c.rel) {
            case Relation::Less: inside = v < 0; break;
            case Relation::LessEqual: inside = v <= 0; break;
            case Relation::Greater: inside = v > 0; break;
            case Relation::GreaterEqual: inside = v >= 0; break;
          }
        }
        if (!inside) continue;
        counts.assign(static_cast<std::size_t>(max_bins), 0);
        for (const std::int64_t x : f->values) {
          const std::int64_t k = (x - T) / H;  // x >= T inside the domain
          if (k >= max_bins) throw std::logic_error("oracle sample outside the bin cap");
          ++counts[static_cast<std::size_t>(k)];
        }
        seen.insert(Shape(counts));
      }
    }
    return seen;
  }

  const Scalar steps(resolution - 1);
  for (int i = 0; i < resolution; ++i) {
    const Scalar t0 = t_lo + (t_hi - t_lo) * Scalar(i) / steps;
    for (int j = 0; j < resolution; ++j) {
      const Scalar h = h_lo + (h_hi - h_lo) * Scalar(j) / steps;
      const Point p{t0, h};
      if (!dom.contains(p)) continue;
      seen.insert(bin_counts(d, BinGrid{t0, h, max_bins}));
    }
  }
  return seen;
}

}  // namespace momhist
