#include "momhist/selection.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace momhist {

StabilityReport stability_cells(const Catalog& c) {
  if (c.empty()) throw std::invalid_argument("stability cells need a nonempty catalog");
  StabilityReport report;
  report.max_bins = c.max_bins;
  report.mode = c.mode;
  for (const auto& ls : c.level_sets) {
    report.breakpoints.push_back(ls.h_min);
    report.breakpoints.push_back(ls.h_max);
  }
  std::sort(report.breakpoints.begin(), report.breakpoints.end());
  report.breakpoints.erase(std::unique(report.breakpoints.begin(), report.breakpoints.end()),
                           report.breakpoints.end());

  std::size_t fewest = std::numeric_limits<std::size_t>::max();
  for (std::size_t i = 0; i + 1 < report.breakpoints.size(); ++i) {
    StabilityCell cell{report.breakpoints[i], report.breakpoints[i + 1], {}};
    for (const auto& ls : c.level_sets) {
      if (ls.h_min <= cell.h_lo && cell.h_hi <= ls.h_max) cell.shapes.push_back(ls.shape);
    }
    fewest = std::min(fewest, cell.count());
    report.cells.push_back(std::move(cell));
  }
  for (std::size_t i = 0; i < report.cells.size(); ++i) {
    if (report.cells[i].count() == fewest) report.most_stable.push_back(i);
  }
  return report;
}

double ml_log_likelihood(const Shape& s, const Scalar& h) {
  double score = 0.0;
  for (int v : s.counts()) {
    if (v > 0) score += v * std::log(static_cast<double>(v));
  }
  const int n = s.total();
  return score - n * log(Scalar(n) * h);
}

std::vector<MlScore> ml_rank(const Dataset& d, const Catalog& c) {
  if (c.dataset_digest != d.digest()) throw std::invalid_argument("catalog was built from different data");
  std::vector<MlScore> scores;
  scores.reserve(c.size());
  for (const auto& ls : c.level_sets) {
    MlScore s{ls.shape, ls.h_min, ml_log_likelihood(ls.shape, ls.h_min), false};
    // The narrowest point of a convex set bounded by non-horizontal lines is a single vertex.
    auto lowest = std::min_element(ls.vertices.begin(), ls.vertices.end(),
                                   [](const Point& a, const Point& b) { return a.h < b.h; });
    s.open = !owns_point(d, c, ls, *lowest);
    scores.push_back(std::move(s));
  }
  std::stable_sort(scores.begin(), scores.end(),
                   [](const MlScore& a, const MlScore& b) { return a.log_likelihood > b.log_likelihood; });
  return scores;
}

ExactMomentGrid exact_moment_grid(const Dataset& d, unsigned m) {
  if (m == 0) throw std::invalid_argument("m must be positive");
  ExactMomentGrid out;
  out.m = m;
  out.lcm = denominator_lcm(d.values().data(), d.size());
  const Scalar h(mpq_class(1, out.lcm * m));
  const mpz_class span = (d.range() / h).floor();
  if (!span.fits_sint_p() || span >= std::numeric_limits<int>::max() - 1) {
    throw std::overflow_error("exact-moment grid needs too many bins");
  }
  out.grid = BinGrid{d.min() - h / Scalar(2), h, static_cast<int>(span.get_si()) + 1};
  out.shape = bin_counts(d, out.grid);
  return out;
}

}  // namespace momhist
