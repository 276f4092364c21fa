#include "momhist/consistency.hpp"

#include <algorithm>
#include <cmath>

namespace momhist {

// ---------------------------------------------------------------- MomPoint

double MomPoint::h() const { return std::sqrt(h_squared.to_double()); }

double MomPoint::t0() const { return mean.to_double() - (kbar - Scalar(1, 2)).to_double() * h(); }

int MomPoint::side(const Line& line) const {
  // a (mean - (kbar - 1/2) h) + b h - c
  return Surd{line.a * mean - line.c, line.b - line.a * (kbar - Scalar(1, 2)), h_squared}.sign();
}

int MomPoint::edge_vs(long j, const Scalar& x) const {
  // t0 + j h - x = (mean - x) + (j - kbar + 1/2) h
  return Surd{mean - x, Scalar(j) - kbar + Scalar(1, 2), h_squared}.sign();
}

std::optional<Point> MomPoint::as_rational() const {
  const mpz_class& num = h_squared.raw().get_num();
  const mpz_class& den = h_squared.raw().get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
    return std::nullopt;
  }
  const Scalar h(mpq_class(sqrt(num), sqrt(den)));
  return Point{mean - (kbar - Scalar(1, 2)) * h, h};
}

// ---------------------------------------------------------------- solve

MomSolution solve_mom(const Dataset& d, const Shape& s, VarianceFlavor flavor) {
  const ConstraintFunctions f = constraint_fns(d, s, flavor);
  if (f.sample_variance.is_zero()) throw InsufficientDataError("sample variance is zero");
  const auto root = f.variance_root_squared();
  if (!root) {
    throw InsufficientDataError("grouped variance of " + s.to_string() +
                                " does not depend on the bin width; no MOM width exists");
  }

  MomSolution sol;
  sol.shape = s;
  sol.flavor = flavor;
  sol.point = MomPoint{*root, f.kbar, f.sample_mean};
  sol.h_mom = sol.point.h();
  sol.t0_mom = sol.point.t0();

  const MomPoint& p = sol.point;
  if (p.edge_vs(0, d.min()) > 0) return sol;  // data below the anchor

  std::vector<int> counts;
  for (const auto& x : d.values()) {
    // largest j with t0 + j h <= x; the floating estimate is corrected exactly
    long j = static_cast<long>(std::floor((x.to_double() - sol.t0_mom) / sol.h_mom));
    j = std::max(j, 0L);
    while (j > 0 && p.edge_vs(j, x) > 0) --j;
    while (p.edge_vs(j + 1, x) <= 0) ++j;
    const auto bin = static_cast<std::size_t>(j + 1);
    if (counts.size() < bin) counts.resize(bin, 0);
    ++counts[bin - 1];
  }
  sol.recomputed = counts;
  sol.first_bin_ok = counts.front() > 0;
  if (sol.first_bin_ok) sol.jointly_consistent = Shape(counts) == s;
  return sol;
}

// ---------------------------------------------------------------- classes

std::string_view to_string(ConsistencyClass c) {
  switch (c) {
    case ConsistencyClass::Joint: return "joint";
    case ConsistencyClass::IndividualBoth: return "both";
    case ConsistencyClass::MeanOnly: return "mean-only";
    case ConsistencyClass::VarianceOnly: return "var-only";
    case ConsistencyClass::Neither: return "neither";
  }
  return "?";
}

std::optional<ConsistencyClass> consistency_class_from_string(std::string_view s) {
  for (auto c : {ConsistencyClass::Joint, ConsistencyClass::IndividualBoth, ConsistencyClass::MeanOnly,
                 ConsistencyClass::VarianceOnly, ConsistencyClass::Neither}) {
    if (to_string(c) == s) return c;
  }
  return std::nullopt;
}

namespace {

Point midpoint(const Point& a, const Point& b) {
  return {(a.t0 + b.t0) / Scalar(2), (a.h + b.h) / Scalar(2)};
}

// Points of the closed polygon where g vanishes, when g does not change sign
// over the vertices: zero vertices plus midpoints of edges lying on g = 0.
template <class ValueAt>
std::vector<Point> touching_points(const Polygon& poly, ValueAt value_at) {
  std::vector<Point> out;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point& p = poly[i];
    const Point& q = poly[(i + 1) % poly.size()];
    const bool zp = value_at(p).is_zero();
    if (zp) out.push_back(p);
    if (zp && value_at(q).is_zero()) out.push_back(midpoint(p, q));
  }
  return out;
}

template <class ValueAt>
bool vanishes_in_set(const Dataset& d, const Catalog& c, const LevelSet& ls, ValueAt value_at) {
  bool neg = false;
  bool pos = false;
  for (const auto& v : ls.vertices) {
    const int s = value_at(v).sign();
    neg = neg || s < 0;
    pos = pos || s > 0;
  }
  if (neg && pos) return true;
  for (const auto& p : touching_points(ls.vertices, value_at)) {
    if (owns_point(d, c, ls, p)) return true;
  }
  return false;
}

ConsistencyClass combine(bool joint, bool mean, bool variance) {
  if (joint) return ConsistencyClass::Joint;
  if (mean && variance) return ConsistencyClass::IndividualBoth;
  if (mean) return ConsistencyClass::MeanOnly;
  if (variance) return ConsistencyClass::VarianceOnly;
  return ConsistencyClass::Neither;
}

bool domain_contains(const Domain& dom, const MomPoint& p) {
  for (const auto& c : dom.constraints) {
    const int s = p.side(c.half_plane.line);
    switch (c.half_plane.rel) {
      case Relation::Less: if (!(s < 0)) return false; break;
      case Relation::LessEqual: if (!(s <= 0)) return false; break;
      case Relation::Greater: if (!(s > 0)) return false; break;
      case Relation::GreaterEqual: if (!(s >= 0)) return false; break;
    }
  }
  return true;
}

}  // namespace

ShapeClassification classify_shape(const Dataset& d, const Catalog& c, const LevelSet& ls,
                                   VarianceFlavor flavor) {
  ShapeClassification out;
  out.shape = ls.shape;
  const ConstraintFunctions f = constraint_fns(d, ls.shape, flavor);

  out.mean_consistent = vanishes_in_set(d, c, ls, [&f](const Point& p) { return f.mean_at(p); });
  out.variance_consistent =
      f.variance_slope().sign() > 0 &&
      vanishes_in_set(d, c, ls, [&f](const Point& p) { return f.variance_at(p); });

  bool joint = false;
  try {
    out.mom = solve_mom(d, ls.shape, flavor);
    joint = out.mom->jointly_consistent && domain_contains(c.domain, out.mom->point);
  } catch (const InsufficientDataError&) {
    out.mom.reset();
  }
  out.cls = combine(joint, out.mean_consistent, out.variance_consistent);
  return out;
}

bool polygon_owns(const Dataset& d, const Catalog& c, const LevelSet& ls, const MomPoint& p) {
  const Point inside = ls.centroid;
  auto admits = [&](const Line& line) {
    const int sp = p.side(line);
    const int si = line.side(inside);
    if (sp == 0) return si < 0;
    return sp == si;
  };
  const auto& poly = ls.vertices;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    if (!admits(line_through(poly[i], poly[(i + 1) % poly.size()]))) return false;
  }
  // Lines through a vertex that are not edges still decide ownership there.
  if (p.as_rational()) {
    for (const auto& bl : boundary_lines(d, c.max_bins)) {
      const Line line = bl.line();
      if (p.side(line) == 0 && !admits(line)) return false;
    }
    for (const auto& dc : c.domain.constraints) {
      const Line line = dc.half_plane.line.normalized();
      if (p.side(line) == 0 && !admits(line)) return false;
    }
  }
  return true;
}

std::array<std::size_t, 5> ClassificationReport::tally(std::optional<std::size_t> max_bins) const {
  std::array<std::size_t, 5> counts{};
  for (const auto& e : entries) {
    if (max_bins && e.shape.bins() > *max_bins) continue;
    ++counts[static_cast<std::size_t>(e.cls)];
  }
  return counts;
}

std::size_t ClassificationReport::mean_or_variance(std::optional<std::size_t> max_bins) const {
  const auto t = tally(max_bins);
  return t[0] + t[1] + t[2] + t[3];
}

const ShapeClassification* ClassificationReport::find(const Shape& s) const {
  auto it = std::find_if(entries.begin(), entries.end(), [&s](const auto& e) { return e.shape == s; });
  return it == entries.end() ? nullptr : &*it;
}

ClassificationReport classify_catalog(const Dataset& d, const Catalog& c, VarianceFlavor flavor) {
  ClassificationReport report;
  report.flavor = flavor;
  report.entries.reserve(c.size());
  for (const auto& ls : c.level_sets) report.entries.push_back(classify_shape(d, c, ls, flavor));
  return report;
}

// ---------------------------------------------------------------- skewness ranks

int band_size(double fraction, std::size_t shapes) {
  return static_cast<int>(std::floor(fraction * static_cast<double>(shapes) + 0.5));
}

const SkewRank* SkewRankReport::find(const Shape& s) const {
  auto it = std::find_if(entries.begin(), entries.end(), [&s](const auto& e) { return e.shape == s; });
  return it == entries.end() ? nullptr : &*it;
}

SkewRankReport skew_rank(const Dataset& d, const Catalog& c, const ClassificationReport& classes,
                         const SkewBands& bands) {
  const SampleMoments sm = sample_moments(d);
  SkewRankReport report;
  report.sample_fps = sm.fps.value();
  report.sample_fpas = sm.fpas;
  report.shapes = c.size();
  report.wide_band = band_size(bands.wide, c.size());
  report.narrow_band = band_size(bands.narrow, c.size());

  struct Ranked {
    std::size_t index;
    Skewness skew;
  };
  std::vector<Ranked> above;
  std::vector<Ranked> below;
  report.entries.resize(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    SkewRank& e = report.entries[i];
    e.shape = c.level_sets[i].shape;
    if (e.shape.occupied_bins() < 2) continue;
    Skewness g = grouped_skewness(e.shape);
    e.fps = g.value();
    if (c.n >= 3) e.fpas = fpas_coefficient(c.n) * g.value();
    (g >= sm.fps ? above : below).push_back({i, std::move(g)});
  }

  // Closest first; equal distance means equal skewness on the same side.
  std::stable_sort(above.begin(), above.end(), [](const Ranked& a, const Ranked& b) { return a.skew < b.skew; });
  std::stable_sort(below.begin(), below.end(), [](const Ranked& a, const Ranked& b) { return b.skew < a.skew; });

  auto assign = [&report](const std::vector<Ranked>& side, int sign) {
    for (std::size_t i = 0; i < side.size(); ++i) {
      std::size_t first = i;
      while (first > 0 && side[first - 1].skew == side[i].skew) --first;
      const bool tied = (first != i) || (i + 1 < side.size() && side[i + 1].skew == side[i].skew);
      SkewRank& e = report.entries[side[i].index];
      e.rank = sign * static_cast<int>(first + 1);
      e.tied = tied;
    }
  };
  assign(above, +1);
  assign(below, -1);

  for (std::size_t i = 0; i < report.entries.size(); ++i) {
    SkewRank& e = report.entries[i];
    if (!e.rank) continue;
    const int r = std::abs(*e.rank);
    e.in_wide = r <= report.wide_band;
    e.in_narrow = r <= report.narrow_band;
    const auto* cls = classes.find(e.shape);
    e.in_wide_and_joint = e.in_wide && cls && cls->cls == ConsistencyClass::Joint;
  }
  return report;
}

}  // namespace momhist
