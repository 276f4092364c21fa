#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "momhist/errors.hpp"
#include "momhist/geometry.hpp"
#include "momhist/scalar.hpp"

namespace momhist {

/// Bin counts of a uniform-width histogram with trailing empty bins trimmed.
/// The first bin always holds the data minimum, so it is never empty.
class Shape {
 public:
  Shape() = default;

  /// Trims trailing zeros. Throws std::invalid_argument for negative counts,
  /// an all-zero list, or a leading zero.
  explicit Shape(std::vector<int> counts);

  const std::vector<int>& counts() const { return counts_; }
  std::size_t bins() const { return counts_.size(); }
  int total() const;
  int operator[](std::size_t k) const { return counts_[k]; }
  std::size_t occupied_bins() const;

  Shape reversed() const;
  bool is_palindrome() const;

  std::string to_string() const;  // "(1,2,3)"

  friend bool operator==(const Shape&, const Shape&) = default;
  /// Lexicographic on (number of bins, counts).
  friend std::strong_ordering operator<=>(const Shape& a, const Shape& b);

 private:
  std::vector<int> counts_;
};

/// Sorted multiset of exact values with cached summary moments.
class Dataset {
 public:
  explicit Dataset(std::vector<Scalar> values);

  std::span<const Scalar> values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  const Scalar& min() const { return values_.front(); }
  const Scalar& max() const { return values_.back(); }
  Scalar range() const { return max() - min(); }
  std::vector<Scalar> distinct_values() const;

  const Scalar& mean() const { return mean_; }
  /// Sample variance (divisor n - 1). Throws InsufficientDataError for n < 2.
  const Scalar& variance() const;

  /// Stable 64-bit FNV-1a digest of the canonical values.
  std::uint64_t digest() const;

 private:
  std::vector<Scalar> values_;
  Scalar mean_;
  std::optional<Scalar> variance_;
};

/// Splits on newlines, commas and blanks; lines starting with '#' are comments.
/// Throws ParseError with the position of the first bad token.
Dataset parse_dataset(std::string_view text);

/// Bins [t0 + (k-1)h, t0 + kh), k = 1..max_bins.
struct BinGrid {
  Scalar t0;
  Scalar h;
  int max_bins = 1;

  Scalar edge(long k) const { return t0 + Scalar(k) * h; }
};

/// Throws InvalidGridError unless h > 0, t0 <= x_min < t0 + h and
/// x_max < t0 + max_bins * h.
void validate_grid(const Dataset& d, const BinGrid& g);

/// 1-based index of the bin holding x; may be <= 0 or beyond the cap.
long bin_index(const Scalar& x, const Scalar& t0, const Scalar& h);

/// Counts per bin for a validated grid, trailing zeros trimmed.
Shape bin_counts(const Dataset& d, const BinGrid& g);

/// Counts for bins 1..last occupied without any grid validation. Returns
/// nullopt when some value falls below t0. Leading zeros are kept.
std::optional<std::vector<int>> raw_bin_counts(const Dataset& d, const Scalar& t0,
                                               const Scalar& h);

enum class BinCountMode { AtMost, Exactly };

/// Width cap h <= x_max - x_min + delta; delta defaults to x_max - x_min.
struct DomainOptions {
  std::optional<Scalar> delta;
};

struct DomainConstraint {
  std::string name;
  HalfPlane half_plane;
};

/// Bounded convex region of (t0, h) where the data minimum sits in the first
/// bin and all data fit in the allowed number of bins.
struct Domain {
  int max_bins = 1;
  BinCountMode mode = BinCountMode::AtMost;
  Scalar delta;
  Scalar h_cap;
  Polygon vertices;
  std::vector<DomainConstraint> constraints;

  /// Exact membership respecting open/closed boundaries.
  bool contains(const Point& p) const;
  Scalar area() const { return signed_area(vertices); }
};

Domain build_domain(const Dataset& d, int max_bins, BinCountMode mode = BinCountMode::AtMost,
                    const DomainOptions& options = {});

}  // namespace momhist
