#pragma once

#include <optional>
#include <vector>

#include "momhist/consistency.hpp"

namespace momhist {

/// x_(i) + x_(n+1-i) = 2 mean for every i, exactly.
bool is_exactly_symmetric(const Dataset& d);

/// A shape and its reversal, both reachable. Palindromes pair with themselves.
struct ReversalPair {
  Shape shape;
  Shape reversed;
  Point witness;           // centroid of the shape's level set
  Point reversed_witness;  // centroid of the reversal's level set
};

struct ReversalReport {
  std::vector<ReversalPair> pairs;
  std::vector<Shape> unpaired;  // reachable shapes whose reversal is not

  bool full_coverage() const { return unpaired.empty(); }
};

ReversalReport reversal_pairs(const Catalog& c);

/// Two shapes with the same number of bins whose modal bins trade places:
/// every mode of one is an interior bin, every mode of the other is an end bin.
struct ModeInversion {
  Shape interior_modal;
  Shape boundary_modal;
  std::vector<std::size_t> interior_modes;  // 1-based bin indices
  std::vector<std::size_t> boundary_modes;
  Point interior_witness;
  Point boundary_witness;
  std::optional<ConsistencyClass> interior_class;
  std::optional<ConsistencyClass> boundary_class;
};

/// 1-based indices of the largest counts.
std::vector<std::size_t> modal_bins(const Shape& s);

std::vector<ModeInversion> mode_inversion_report(const Catalog& c,
                                                 const ClassificationReport* classes = nullptr);

/// Values that coincide with some bin edge of the grid. When empty, left-open
/// and right-open bins give identical counts.
std::vector<Scalar> edge_collisions(const Dataset& d, const BinGrid& g);

struct AuditOptions {
  VarianceFlavor flavor = VarianceFlavor::Frequency;
  SkewBands bands;
};

struct AuditAlternative {
  Shape shape;
  double fps = 0.0;
  int rank = 0;
  double t0_mom = 0.0;
  double h_mom = 0.0;
};

struct AuditVerdict {
  BinGrid grid;
  Shape shape;
  std::optional<double> fps;  // histogram skewness; absent for a single occupied bin
  double sample_fps = 0.0;
  bool sign_conflict = false;
  /// Absent when the grid lies outside the bounded parameter domain.
  std::optional<ConsistencyClass> cls;
  std::optional<int> rank;
  std::vector<Scalar> edge_collisions;
  /// Jointly consistent shape inside the wide skewness band closest to the
  /// sample skewness.
  std::optional<AuditAlternative> alternative;
};

/// Throws InvalidGridError for a grid that does not cover the data.
AuditVerdict audit(const Dataset& d, const BinGrid& g, const AuditOptions& options = {});

}  // namespace momhist
