#include "momhist/diagnostics.hpp"

#include <algorithm>
#include <cmath>

namespace momhist {

bool is_exactly_symmetric(const Dataset& d) {
  const auto v = d.values();
  const Scalar twice_mean = d.mean() * Scalar(2);
  for (std::size_t i = 0, j = v.size() - 1; i <= j && j < v.size(); ++i, --j) {
    if (v[i] + v[j] != twice_mean) return false;
    if (j == 0) break;
  }
  return true;
}

ReversalReport reversal_pairs(const Catalog& c) {
  ReversalReport report;
  for (const auto& ls : c.level_sets) {
    const Shape rev = ls.shape.reversed();
    const LevelSet* other = lookup(c, rev);
    if (!other) {
      report.unpaired.push_back(ls.shape);
      continue;
    }
    if (rev < ls.shape) continue;  // reported from the other side
    report.pairs.push_back({ls.shape, rev, ls.centroid, other->centroid});
  }
  return report;
}

std::vector<std::size_t> modal_bins(const Shape& s) {
  const int top = *std::max_element(s.counts().begin(), s.counts().end());
  std::vector<std::size_t> modes;
  for (std::size_t k = 0; k < s.bins(); ++k) {
    if (s[k] == top) modes.push_back(k + 1);
  }
  return modes;
}

std::vector<ModeInversion> mode_inversion_report(const Catalog& c, const ClassificationReport* classes) {
  struct Modal {
    const LevelSet* ls;
    std::vector<std::size_t> modes;
  };
  std::vector<Modal> interior;
  std::vector<Modal> boundary;
  for (const auto& ls : c.level_sets) {
    const std::size_t bins = ls.shape.bins();
    if (bins < 3) continue;
    auto modes = modal_bins(ls.shape);
    const bool all_inside = std::all_of(modes.begin(), modes.end(), [bins](std::size_t k) { return k > 1 && k < bins; });
    const bool all_ends = std::all_of(modes.begin(), modes.end(), [bins](std::size_t k) { return k == 1 || k == bins; });
    if (all_inside) interior.push_back({&ls, std::move(modes)});
    else if (all_ends) boundary.push_back({&ls, std::move(modes)});
  }

  auto class_of = [classes](const Shape& s) -> std::optional<ConsistencyClass> {
    if (!classes) return std::nullopt;
    const auto* e = classes->find(s);
    return e ? std::optional(e->cls) : std::nullopt;
  };

  std::vector<ModeInversion> out;
  for (const auto& a : interior) {
    for (const auto& b : boundary) {
      if (a.ls->shape.bins() != b.ls->shape.bins()) continue;
      out.push_back({a.ls->shape, b.ls->shape, a.modes, b.modes, a.ls->centroid, b.ls->centroid,
                     class_of(a.ls->shape), class_of(b.ls->shape)});
    }
  }
  return out;
}

std::vector<Scalar> edge_collisions(const Dataset& d, const BinGrid& g) {
  std::vector<Scalar> hits;
  for (const auto& x : d.values()) {
    if (((x - g.t0) / g.h).is_integer()) hits.push_back(x);
  }
  return hits;
}

AuditVerdict audit(const Dataset& d, const BinGrid& g, const AuditOptions& options) {
  AuditVerdict v;
  v.grid = g;
  v.shape = bin_counts(d, g);
  v.edge_collisions = edge_collisions(d, g);

  const SampleMoments sm = sample_moments(d);
  v.sample_fps = sm.fps.value();
  std::optional<Skewness> hist_skew;
  if (v.shape.occupied_bins() >= 2) {
    hist_skew = grouped_skewness(v.shape);
    v.fps = hist_skew->value();
  }
  v.sign_conflict = hist_skew && hist_skew->sign() != 0 && sm.fps.sign() != 0 &&
                    hist_skew->sign() != sm.fps.sign();

  const Catalog cat = enumerate_level_sets(d, g.max_bins);
  const ClassificationReport classes = classify_catalog(d, cat, options.flavor);
  const SkewRankReport ranks = skew_rank(d, cat, classes, options.bands);

  if (cat.domain.contains({g.t0, g.h})) {
    if (const auto* e = classes.find(v.shape)) v.cls = e->cls;
    if (const auto* r = ranks.find(v.shape)) v.rank = r->rank;
  }

  for (std::size_t i = 0; i < ranks.entries.size(); ++i) {
    const SkewRank& r = ranks.entries[i];
    if (!r.in_wide_and_joint) continue;
    const double dist = std::abs(*r.fps - v.sample_fps);
    if (v.alternative && std::abs(v.alternative->fps - v.sample_fps) <= dist) continue;
    const auto& mom = classes.entries[i].mom;
    v.alternative = AuditAlternative{r.shape, *r.fps, *r.rank, mom->t0_mom, mom->h_mom};
  }
  return v;
}

}  // namespace momhist
