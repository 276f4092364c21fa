#include "momhist/moments.hpp"

#include <cmath>

namespace momhist {

Skewness::Skewness(const Scalar& m2, const Scalar& m3) {
  if (m2.sign() <= 0) throw UndefinedSkewnessError("skewness undefined for zero spread");
  sign_ = m3.sign();
  square_ = m3 * m3 / (m2 * m2 * m2);
  value_ = m3.to_double() / std::pow(m2.to_double(), 1.5);
}

std::strong_ordering operator<=>(const Skewness& a, const Skewness& b) {
  if (a.sign_ != b.sign_) return a.sign_ <=> b.sign_;
  if (a.sign_ >= 0) return a.square_ <=> b.square_;
  return b.square_ <=> a.square_;
}

double fpas_coefficient(std::size_t n) {
  if (n < 3) throw InsufficientDataError("adjusted skewness needs at least three observations");
  const double nd = static_cast<double>(n);
  return std::sqrt(nd * (nd - 1.0)) / (nd - 2.0);
}

SampleMoments sample_moments(const Dataset& d) {
  if (d.size() < 2) throw InsufficientDataError("moments need at least two observations");
  Scalar m2, m3;
  for (const auto& x : d.values()) {
    const Scalar dev = x - d.mean();
    const Scalar sq = dev * dev;
    m2 += sq;
    m3 += sq * dev;
  }
  if (m2.is_zero()) throw InsufficientDataError("all values equal; skewness undefined");
  const Scalar n(static_cast<long>(d.size()));
  SampleMoments out{d.size(), d.mean(), d.variance(), Skewness(m2 / n, m3 / n), std::nullopt};
  if (d.size() >= 3) out.fpas = fpas_coefficient(d.size()) * out.fps.value();
  return out;
}

Scalar GroupedMoments::spread() const {
  if (n < 2) throw InsufficientDataError("grouped variance needs at least two observations");
  return sum_sq / Scalar(static_cast<long>(n - 1));
}

GroupedMoments grouped_moments(const Shape& s) {
  GroupedMoments g;
  g.n = static_cast<std::size_t>(s.total());
  Scalar weighted;
  for (std::size_t k = 0; k < s.bins(); ++k) weighted += Scalar(s[k]) * Scalar(static_cast<long>(k + 1));
  g.kbar = weighted / Scalar(static_cast<long>(g.n));
  for (std::size_t k = 0; k < s.bins(); ++k) {
    if (s[k] == 0) continue;
    const Scalar dev = Scalar(static_cast<long>(k + 1)) - g.kbar;
    const Scalar sq = dev * dev;
    g.sum_sq += Scalar(s[k]) * sq;
    g.sum_cube += Scalar(s[k]) * sq * dev;
  }
  return g;
}

Scalar grouped_mean(const BinGrid& g, const Shape& s) {
  return g.t0 + g.h * (grouped_moments(s).kbar - Scalar(1, 2));
}

Scalar grouped_variance(const BinGrid& g, const Shape& s, VarianceFlavor flavor) {
  Scalar v = g.h * g.h * grouped_moments(s).spread();
  if (flavor == VarianceFlavor::Density) v += g.h * g.h / Scalar(12);
  return v;
}

Skewness grouped_skewness(const Shape& s) {
  if (s.occupied_bins() < 2) {
    throw UndefinedSkewnessError("skewness undefined for shape " + s.to_string() +
                                 " with a single occupied bin");
  }
  const GroupedMoments g = grouped_moments(s);
  const Scalar n(static_cast<long>(g.n));
  return Skewness(g.sum_sq / n, g.sum_cube / n);
}

double fps_grouped(const Shape& s) { return grouped_skewness(s).value(); }

Scalar ConstraintFunctions::variance_slope() const {
  return flavor == VarianceFlavor::Density ? spread + Scalar(1, 12) : spread;
}

Scalar ConstraintFunctions::variance_at(const Point& p) const {
  return p.h * p.h * variance_slope() - sample_variance;
}

std::optional<Scalar> ConstraintFunctions::variance_root_squared() const {
  const Scalar slope = variance_slope();
  if (slope.sign() <= 0 || sample_variance.sign() <= 0) return std::nullopt;
  return sample_variance / slope;
}

ConstraintFunctions constraint_fns(const Dataset& d, const Shape& s, VarianceFlavor flavor) {
  if (d.size() < 2) throw InsufficientDataError("constraints need at least two observations");
  if (static_cast<std::size_t>(s.total()) != d.size()) {
    throw std::invalid_argument("shape total does not match the sample size");
  }
  const GroupedMoments g = grouped_moments(s);
  return {g.kbar, g.spread(), d.mean(), d.variance(), flavor};
}

Scalar raw_moment(const Dataset& d, unsigned r) {
  Scalar sum;
  for (const auto& x : d.values()) sum += pow(x, r);
  return sum / Scalar(static_cast<long>(d.size()));
}

Scalar grouped_raw_moment(const BinGrid& g, const Shape& s, unsigned r) {
  Scalar sum;
  for (std::size_t k = 0; k < s.bins(); ++k) {
    if (s[k] == 0) continue;
    const Scalar mid = g.t0 + (Scalar(static_cast<long>(k + 1)) - Scalar(1, 2)) * g.h;
    sum += Scalar(s[k]) * pow(mid, r);
  }
  return sum / Scalar(static_cast<long>(s.total()));
}

}  // namespace momhist
