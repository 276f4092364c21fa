#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "momhist/core.hpp"

namespace momhist {

/// t0 + k*h = value: the k-th bin edge passes through a data value.
/// k = 0 gives a vertical line; k >= 1 has slope dh/dt0 = -1/k.
struct BoundaryLine {
  int k = 0;
  Scalar value;

  Line line() const { return {Scalar(1), Scalar(k), value}; }
  friend bool operator==(const BoundaryLine&, const BoundaryLine&) = default;
};

/// One line per (k, distinct value), k = 0..max_bins, ordered by value then k.
std::vector<BoundaryLine> boundary_lines(const Dataset& d, int max_bins);

/// Convex polygon of all (t0, h) giving one shape.
struct LevelSet {
  Shape shape;
  Polygon vertices;  // counterclockwise, largest-t0 vertex first
  Scalar h_min;
  Scalar h_max;
  Point centroid;  // mean of vertices
  Scalar area;
  std::size_t merged_faces = 1;
};

/// Shape whose faces could not be merged into one convex polygon. Never seen
/// in practice; kept so such a result is reported instead of hidden.
struct CatalogAnomaly {
  Shape shape;
  std::vector<Polygon> pieces;
};

/// Every shape a dataset can take with at most (or exactly) max_bins bins,
/// ordered by (bins, counts).
struct Catalog {
  std::uint64_t dataset_digest = 0;
  std::size_t n = 0;
  int max_bins = 1;
  BinCountMode mode = BinCountMode::AtMost;
  Domain domain;
  std::vector<LevelSet> level_sets;
  std::vector<CatalogAnomaly> anomalies;

  std::size_t size() const { return level_sets.size(); }
  bool empty() const { return level_sets.empty(); }
};

Catalog enumerate_level_sets(const Dataset& d, int max_bins, BinCountMode mode = BinCountMode::AtMost,
                             const DomainOptions& options = {});

/// nullptr when the shape is not achievable. Trailing zeros are ignored.
const LevelSet* lookup(const Catalog& c, const Shape& s);
const LevelSet* lookup(const Catalog& c, const std::vector<int>& counts);

/// True when p lies in the domain and the grid at p produces the shape.
/// Boundary points count for exactly one of the adjacent sets.
bool owns_point(const Dataset& d, const Catalog& c, const LevelSet& ls, const Point& p);

/// Brute-force check: shapes seen on a resolution x resolution lattice
/// spanning the domain's bounding box (endpoints included).
std::set<Shape> grid_sample_oracle(const Dataset& d, int max_bins, int resolution,
                                   BinCountMode mode = BinCountMode::AtMost,
                                   const DomainOptions& options = {});

}  // namespace momhist
