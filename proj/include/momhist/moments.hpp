#pragma once

#include <compare>
#include <optional>

#include "momhist/core.hpp"

namespace momhist {

enum class VarianceFlavor { Frequency, Density };

/// Standardized third moment m3 / m2^(3/2), kept as sign and exact square so
/// two skewness values (or a value and zero) compare without rounding.
class Skewness {
 public:
  Skewness(const Scalar& m2, const Scalar& m3);

  double value() const { return value_; }
  int sign() const { return sign_; }
  /// value^2 = m3^2 / m2^3.
  const Scalar& square() const { return square_; }

  friend bool operator==(const Skewness& a, const Skewness& b) {
    return a.sign_ == b.sign_ && a.square_ == b.square_;
  }
  friend std::strong_ordering operator<=>(const Skewness& a, const Skewness& b);

 private:
  int sign_ = 0;
  Scalar square_;
  double value_ = 0.0;
};

/// sqrt(n(n-1))/(n-2): converts Fisher-Pearson skewness to the adjusted form.
double fpas_coefficient(std::size_t n);

struct SampleMoments {
  std::size_t n = 0;
  Scalar mean;
  Scalar variance;  // divisor n - 1
  Skewness fps;
  std::optional<double> fpas;  // needs n >= 3
};

/// Throws InsufficientDataError for n < 2 or zero spread.
SampleMoments sample_moments(const Dataset& d);

/// Bin-index moments of a shape. Independent of anchor and width.
struct GroupedMoments {
  std::size_t n = 0;
  Scalar kbar;      // (1/n) sum v_k k
  Scalar sum_sq;    // sum v_k (k - kbar)^2
  Scalar sum_cube;  // sum v_k (k - kbar)^3
  /// sum_sq / (n - 1); throws InsufficientDataError when n < 2.
  Scalar spread() const;
};

GroupedMoments grouped_moments(const Shape& s);

/// t0 + h (kbar - 1/2).
Scalar grouped_mean(const BinGrid& g, const Shape& s);

/// Frequency: h^2 C; density: h^2 C + h^2/12, with C = spread().
Scalar grouped_variance(const BinGrid& g, const Shape& s, VarianceFlavor flavor);

/// Fisher-Pearson skewness of the bin indices. Throws UndefinedSkewnessError
/// when only one bin is occupied.
Skewness grouped_skewness(const Shape& s);
double fps_grouped(const Shape& s);

/// Mean and variance constraint functions of a shape against a sample:
///   f_m(t0, h) = t0 + h (kbar - 1/2) - mean
///   f_v(h)     = h^2 C (+ h^2/12 for density) - s^2
struct ConstraintFunctions {
  Scalar kbar;
  Scalar spread;  // C
  Scalar sample_mean;
  Scalar sample_variance;
  VarianceFlavor flavor = VarianceFlavor::Frequency;

  Scalar mean_at(const Point& p) const { return p.t0 + p.h * (kbar - Scalar(1, 2)) - sample_mean; }
  Scalar variance_at(const Point& p) const;
  /// Coefficient of h^2 in f_v.
  Scalar variance_slope() const;
  /// The positive root h* of f_v as sqrt(radicand); nullopt when f_v never vanishes.
  std::optional<Scalar> variance_root_squared() const;
  /// f_m = 0 as a line in (t0, h).
  Line mean_line() const { return {Scalar(1), kbar - Scalar(1, 2), sample_mean}; }
};

ConstraintFunctions constraint_fns(const Dataset& d, const Shape& s,
                                   VarianceFlavor flavor = VarianceFlavor::Frequency);

/// (1/n) sum x_i^r.
Scalar raw_moment(const Dataset& d, unsigned r);
/// (1/n) sum v_k m_k^r over bin midpoints m_k = t0 + (k - 1/2) h.
Scalar grouped_raw_moment(const BinGrid& g, const Shape& s, unsigned r);

}  // namespace momhist
