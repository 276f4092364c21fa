#pragma once

#include <vector>

#include "momhist/levelset.hpp"

namespace momhist {

/// Open interval of widths over which the set of reachable shapes is fixed.
struct StabilityCell {
  Scalar h_lo;
  Scalar h_hi;
  std::vector<Shape> shapes;

  std::size_t count() const { return shapes.size(); }
};

struct StabilityReport {
  int max_bins = 1;
  BinCountMode mode = BinCountMode::AtMost;
  std::vector<Scalar> breakpoints;  // sorted distinct h_min / h_max values
  std::vector<StabilityCell> cells;
  std::vector<std::size_t> most_stable;  // indices of the cells with fewest shapes
};

/// Projects every level set onto the width axis. Throws std::invalid_argument
/// for an empty catalog.
StabilityReport stability_cells(const Catalog& c);

struct MlScore {
  Shape shape;
  Scalar h_min;
  /// sum_k v_k ln v_k - n ln(n h_min): the density log-likelihood at the
  /// narrowest width the shape allows.
  double log_likelihood = 0.0;
  /// The narrowest vertex belongs to a neighbouring set, so the score is a
  /// supremum that is approached but not attained.
  bool open = false;
};

/// Scores for every catalog shape, best first (ties by shape order). Throws
/// std::invalid_argument when the catalog was built from other data.
std::vector<MlScore> ml_rank(const Dataset& d, const Catalog& c);

/// Score formula on its own, for any counts and width.
double ml_log_likelihood(const Shape& s, const Scalar& h);

/// Bins of width 1/(mQ), Q the lcm of the value denominators, anchored half a
/// bin below the minimum: every value sits at the midpoint of its bin.
struct ExactMomentGrid {
  unsigned m = 1;
  mpz_class lcm;
  BinGrid grid;
  Shape shape;
};

ExactMomentGrid exact_moment_grid(const Dataset& d, unsigned m);

}  // namespace momhist
