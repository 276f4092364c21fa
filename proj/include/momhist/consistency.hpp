#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "momhist/levelset.hpp"
#include "momhist/moments.hpp"

namespace momhist {

/// The method-of-moments point (t0, h) of a shape. h is the square root of a
/// rational and t0 = mean - (kbar - 1/2) h, so every comparison against a
/// rational line is decided exactly.
struct MomPoint {
  Scalar h_squared;
  Scalar kbar;
  Scalar mean;

  double h() const;
  double t0() const;
  /// Exact sign of a*t0 + b*h - c.
  int side(const Line& line) const;
  /// Exact sign of (t0 + j h) - x, i.e. where edge j sits relative to x.
  int edge_vs(long j, const Scalar& x) const;
  /// The point itself when h is rational.
  std::optional<Point> as_rational() const;
};

struct MomSolution {
  Shape shape;
  VarianceFlavor flavor = VarianceFlavor::Frequency;
  MomPoint point;
  double h_mom = 0.0;
  double t0_mom = 0.0;
  /// Counts for bins 1..last occupied at the MOM grid; empty when data fall
  /// below the anchor. Leading zeros are kept.
  std::vector<int> recomputed;
  /// t0 <= x_min < t0 + h at the MOM grid.
  bool first_bin_ok = false;
  /// The recount reproduces the input shape.
  bool jointly_consistent = false;
};

/// Solves the variance constraint for h, the mean constraint for t0, and
/// recounts the data at that grid. Throws InsufficientDataError when n < 2,
/// the sample has zero variance, or the grouped variance cannot grow with h
/// (a single occupied bin with the frequency flavor).
MomSolution solve_mom(const Dataset& d, const Shape& s, VarianceFlavor flavor = VarianceFlavor::Frequency);

enum class ConsistencyClass { Joint, IndividualBoth, MeanOnly, VarianceOnly, Neither };

std::string_view to_string(ConsistencyClass c);
std::optional<ConsistencyClass> consistency_class_from_string(std::string_view s);

struct ShapeClassification {
  Shape shape;
  ConsistencyClass cls = ConsistencyClass::Neither;
  bool mean_consistent = false;
  bool variance_consistent = false;
  std::optional<MomSolution> mom;  // absent when the constraints cannot be solved
};

ShapeClassification classify_shape(const Dataset& d, const Catalog& c, const LevelSet& ls,
                                   VarianceFlavor flavor = VarianceFlavor::Frequency);

/// Geometric membership of the MOM point in the level-set polygon: strict
/// inside test per edge, with an edge (or any boundary line through the
/// point) counted as owned when the polygon lies on its "< c" side.
/// Independent of bin counting.
bool polygon_owns(const Dataset& d, const Catalog& c, const LevelSet& ls, const MomPoint& p);

struct ClassificationReport {
  VarianceFlavor flavor = VarianceFlavor::Frequency;
  std::vector<ShapeClassification> entries;  // catalog order

  /// Class sizes, optionally restricted to shapes with at most max_bins bins.
  std::array<std::size_t, 5> tally(std::optional<std::size_t> max_bins = std::nullopt) const;
  /// Mean-or-variance consistent count.
  std::size_t mean_or_variance(std::optional<std::size_t> max_bins = std::nullopt) const;
  const ShapeClassification* find(const Shape& s) const;
};

ClassificationReport classify_catalog(const Dataset& d, const Catalog& c,
                                      VarianceFlavor flavor = VarianceFlavor::Frequency);

/// Band half-widths as fractions of the number of shapes.
struct SkewBands {
  double wide = 0.10;
  double narrow = 0.05;
};

/// Band size round(fraction * shapes), halves rounded up.
int band_size(double fraction, std::size_t shapes);

struct SkewRank {
  Shape shape;
  std::optional<double> fps;   // undefined for a single occupied bin
  std::optional<double> fpas;
  /// +1, +2, ... at or above the sample skewness; -1, -2, ... below.
  /// Equal skewness shares a rank (competition ranking).
  std::optional<int> rank;
  bool tied = false;
  bool in_wide = false;    // T band
  bool in_narrow = false;  // F band
  bool in_wide_and_joint = false;
};

struct SkewRankReport {
  double sample_fps = 0.0;
  std::optional<double> sample_fpas;
  std::size_t shapes = 0;
  int wide_band = 0;
  int narrow_band = 0;
  std::vector<SkewRank> entries;  // catalog order

  const SkewRank* find(const Shape& s) const;
};

SkewRankReport skew_rank(const Dataset& d, const Catalog& c, const ClassificationReport& classes,
                         const SkewBands& bands = {});

}  // namespace momhist
