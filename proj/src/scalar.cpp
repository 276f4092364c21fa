#include "momhist/scalar.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>

namespace momhist {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class pow10(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

// [+-]? digits? ( '.' digits? )? ( [eE] [+-]? digits )?  with at least one mantissa digit
bool parse_decimal_impl(std::string_view text, mpq_class& out) {
  if (text.empty()) return false;
  std::size_t pos = 0;
  bool negative = false;
  if (text[pos] == '+' || text[pos] == '-') {
    negative = text[pos] == '-';
    ++pos;
  }
  std::string_view rest = text.substr(pos);
  std::string_view exponent_part;
  if (auto e = rest.find_first_of("eE"); e != std::string_view::npos) {
    exponent_part = rest.substr(e + 1);
    rest = rest.substr(0, e);
  }
  std::string_view int_part = rest;
  std::string_view frac_part;
  if (auto dot = rest.find('.'); dot != std::string_view::npos) {
    int_part = rest.substr(0, dot);
    frac_part = rest.substr(dot + 1);
  }
  if (int_part.empty() && frac_part.empty()) return false;
  if (!int_part.empty() && !all_digits(int_part)) return false;
  if (!frac_part.empty() && !all_digits(frac_part)) return false;

  long exponent = 0;
  if (text.find_first_of("eE") != std::string_view::npos) {
    std::string_view e = exponent_part;
    bool eneg = false;
    if (!e.empty() && (e[0] == '+' || e[0] == '-')) {
      eneg = e[0] == '-';
      e = e.substr(1);
    }
    if (!all_digits(e) || e.size() > 6) return false;
    exponent = std::stol(std::string(e));
    if (eneg) exponent = -exponent;
  }

  std::string digits(int_part);
  digits += frac_part;
  mpz_class mantissa(digits.empty() ? std::string("0") : digits, 10);
  if (negative) mantissa = -mantissa;

  const long scale = exponent - static_cast<long>(frac_part.size());
  if (scale >= 0) {
    out = mpq_class(mantissa * pow10(static_cast<unsigned long>(scale)));
  } else {
    out = mpq_class(mantissa, pow10(static_cast<unsigned long>(-scale)));
  }
  out.canonicalize();
  return true;
}

bool parse_ratio_impl(std::string_view text, mpq_class& out) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return false;
  std::string_view num = text.substr(0, slash);
  std::string_view den = text.substr(slash + 1);
  std::string_view num_digits = num;
  if (!num_digits.empty() && (num_digits[0] == '-' || num_digits[0] == '+')) {
    num_digits = num_digits.substr(1);
  }
  if (!all_digits(num_digits) || !all_digits(den)) return false;
  mpz_class d(std::string(den), 10);
  if (d == 0) return false;
  mpz_class n(std::string(num_digits), 10);
  if (!num.empty() && num[0] == '-') n = -n;
  out = mpq_class(n, d);
  out.canonicalize();
  return true;
}

}  // namespace

Scalar::Scalar(long num, long den) : q_(num, den) {
  if (den == 0) throw std::domain_error("zero denominator");
  q_.canonicalize();
}

Scalar Scalar::parse(std::string_view text) {
  mpq_class q;
  if (parse_decimal_impl(text, q) || parse_ratio_impl(text, q)) return Scalar(std::move(q));
  throw std::invalid_argument("not a number: '" + std::string(text) + "'");
}

bool Scalar::try_parse_decimal(std::string_view text, Scalar& out) {
  mpq_class q;
  if (!parse_decimal_impl(text, q)) return false;
  out = Scalar(std::move(q));
  return true;
}

double Scalar::to_double() const {
  // mpq_get_d truncates; go through mpf for round-to-nearest quality.
  mpf_class f(q_, 128);
  return f.get_d();
}

std::string Scalar::to_ratio_string() const {
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::string Scalar::to_decimal_string(int significant) const {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", significant, to_double());
  return buf;
}

mpz_class Scalar::floor() const {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  q_ /= o.q_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.q_; }

Scalar pow(const Scalar& base, unsigned exponent) {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), exponent);
  return Scalar(mpq_class(num, den));
}

Scalar min(const Scalar& a, const Scalar& b) { return b < a ? b : a; }
Scalar max(const Scalar& a, const Scalar& b) { return a < b ? b : a; }

double log(const Scalar& positive) {
  if (positive.sign() <= 0) throw std::domain_error("log of non-positive value");
  auto ln = [](const mpz_class& z) {
    long exp2 = 0;
    const double mant = mpz_get_d_2exp(&exp2, z.get_mpz_t());
    return std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
  };
  return ln(positive.raw().get_num()) - ln(positive.raw().get_den());
}

mpz_class denominator_lcm(const Scalar* first, std::size_t count) {
  mpz_class l = 1;
  for (std::size_t i = 0; i < count; ++i) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), first[i].raw().get_den_mpz_t());
  }
  return l;
}

int Surd::sign() const {
  // sign(a + b*sqrt(r)) without evaluating the root.
  const int sa = rational.sign();
  const int sb = radicand.is_zero() ? 0 : coeff.sign();
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sa == 0 ? sb : sa;
  // Opposite signs: compare a^2 with b^2 r.
  const Scalar lhs = rational * rational;
  const Scalar rhs = coeff * coeff * radicand;
  if (lhs == rhs) return 0;
  return lhs > rhs ? sa : sb;
}

double Surd::to_double() const {
  return rational.to_double() + coeff.to_double() * std::sqrt(radicand.to_double());
}

}  // namespace momhist

std::size_t std::hash<momhist::Scalar>::operator()(const momhist::Scalar& s) const noexcept {
  return std::hash<std::string>{}(s.to_ratio_string());
}
