#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace momhist {

/// Exact rational number. Every data value, anchor, width and polygon vertex
/// is carried as a Scalar so half-open bin membership never depends on a
/// rounding tolerance.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : q_(value) {}                   // NOLINT(implicit)
  Scalar(int value) : q_(static_cast<long>(value)) {}  // NOLINT(implicit)
  Scalar(long num, long den);
  explicit Scalar(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// Parses decimal text such as "2.0382", "-.5", "1e-3" or a ratio "p/q".
  /// Throws std::invalid_argument on anything else.
  static Scalar parse(std::string_view text);

  /// Accepts decimal numerals only (no ratio form); returns false on failure.
  static bool try_parse_decimal(std::string_view text, Scalar& out);

  const mpq_class& raw() const { return q_; }
  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  double to_double() const;
  /// "p/q" with q = 1 kept explicit.
  std::string to_ratio_string() const;
  /// Decimal rendering with the given number of significant digits.
  std::string to_decimal_string(int significant = 12) const;

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  mpz_class floor() const;
  Scalar abs() const { return Scalar(mpq_class(::abs(q_))); }

  Scalar& operator+=(const Scalar& o) { q_ += o.q_; return *this; }
  Scalar& operator-=(const Scalar& o) { q_ -= o.q_; return *this; }
  Scalar& operator*=(const Scalar& o) { q_ *= o.q_; return *this; }
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const { return Scalar(mpq_class(-q_)); }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s);

 private:
  mpq_class q_;
};

Scalar pow(const Scalar& base, unsigned exponent);
Scalar min(const Scalar& a, const Scalar& b);
Scalar max(const Scalar& a, const Scalar& b);

/// ln of a positive rational, accurate for magnitudes far outside double range.
double log(const Scalar& positive);

/// Least common multiple of denominators.
mpz_class denominator_lcm(const Scalar* first, std::size_t count);

/// A number of the form rational + coeff * sqrt(radicand), radicand >= 0.
/// Used for method-of-moments widths, which are square roots of rationals;
/// its sign is decided exactly.
struct Surd {
  Scalar rational;
  Scalar coeff;
  Scalar radicand;

  int sign() const;
  double to_double() const;
};

}  // namespace momhist

template <>
struct std::hash<momhist::Scalar> {
  std::size_t operator()(const momhist::Scalar& s) const noexcept;
};
