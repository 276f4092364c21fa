#include "momhist/core.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace momhist {

// ---------------------------------------------------------------- Shape

Shape::Shape(std::vector<int> counts) : counts_(std::move(counts)) {
  if (std::any_of(counts_.begin(), counts_.end(), [](int v) { return v < 0; })) {
    throw std::invalid_argument("negative bin count");
  }
  while (!counts_.empty() && counts_.back() == 0) counts_.pop_back();
  if (counts_.empty()) throw std::invalid_argument("shape has no observations");
  if (counts_.front() == 0) throw std::invalid_argument("first bin of a shape must be occupied");
}

int Shape::total() const { return std::accumulate(counts_.begin(), counts_.end(), 0); }

std::size_t Shape::occupied_bins() const {
  return static_cast<std::size_t>(
      std::count_if(counts_.begin(), counts_.end(), [](int v) { return v > 0; }));
}

Shape Shape::reversed() const { return Shape(std::vector<int>(counts_.rbegin(), counts_.rend())); }

bool Shape::is_palindrome() const { return std::equal(counts_.begin(), counts_.end(), counts_.rbegin()); }

std::string Shape::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(counts_[i]);
  }
  return s + ")";
}

std::strong_ordering operator<=>(const Shape& a, const Shape& b) {
  if (auto c = a.counts_.size() <=> b.counts_.size(); c != 0) return c;
  return a.counts_ <=> b.counts_;
}

// ---------------------------------------------------------------- Dataset

Dataset::Dataset(std::vector<Scalar> values) : values_(std::move(values)) {
  if (values_.empty()) throw std::invalid_argument("dataset needs at least one value");
  std::sort(values_.begin(), values_.end());
  Scalar sum;
  for (const auto& v : values_) sum += v;
  const Scalar n(static_cast<long>(values_.size()));
  mean_ = sum / n;
  if (values_.size() >= 2) {
    Scalar ss;
    for (const auto& v : values_) {
      const Scalar dev = v - mean_;
      ss += dev * dev;
    }
    variance_ = ss / (n - Scalar(1));
  }
}

std::vector<Scalar> Dataset::distinct_values() const {
  std::vector<Scalar> out(values_.begin(), values_.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

const Scalar& Dataset::variance() const {
  if (!variance_) throw InsufficientDataError("variance needs at least two observations");
  return *variance_;
}

std::uint64_t Dataset::digest() const {
  std::uint64_t hash = 1469598103934665603ULL;
  auto mix = [&hash](const std::string& s) {
    for (unsigned char c : s) {
      hash ^= c;
      hash *= 1099511628211ULL;
    }
  };
  for (const auto& v : values_) {
    mix(v.to_ratio_string());
    mix(";");
  }
  return hash;
}

Dataset parse_dataset(std::string_view text) {
  std::vector<Scalar> values;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;

    const auto first = line.find_first_not_of(" \t\r");
    if (first != std::string_view::npos && line[first] != '#') {
      std::size_t pos = 0;
      while (pos < line.size()) {
        const auto tok_begin = line.find_first_not_of(" \t\r,", pos);
        if (tok_begin == std::string_view::npos) break;
        auto tok_end = line.find_first_of(" \t\r,", tok_begin);
        if (tok_end == std::string_view::npos) tok_end = line.size();
        const std::string_view token = line.substr(tok_begin, tok_end - tok_begin);
        Scalar value;
        if (!Scalar::try_parse_decimal(token, value)) {
          std::ostringstream msg;
          msg << "line " << line_no << ", column " << tok_begin + 1 << ": not a decimal number: '"
              << token << "'";
          throw ParseError(msg.str(), line_no, tok_begin + 1);
        }
        values.push_back(std::move(value));
        pos = tok_end;
      }
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  if (values.empty()) throw ParseError("input contains no values", 0, 0);
  return Dataset(std::move(values));
}

// ---------------------------------------------------------------- binning

void validate_grid(const Dataset& d, const BinGrid& g) {
  if (g.h.sign() <= 0) throw InvalidGridError("bin width must be positive");
  if (g.max_bins < 1) throw InvalidGridError("need at least one bin");
  if (!(g.t0 <= d.min() && d.min() < g.t0 + g.h)) {
    throw InvalidGridError("data minimum " + d.min().to_decimal_string() +
                           " is not in the first bin");
  }
  if (!(d.max() < g.edge(g.max_bins))) {
    throw InvalidGridError("data maximum " + d.max().to_decimal_string() + " lies beyond " +
                           std::to_string(g.max_bins) + " bins");
  }
}

long bin_index(const Scalar& x, const Scalar& t0, const Scalar& h) {
  const mpz_class k = ((x - t0) / h).floor() + 1;
  if (!k.fits_slong_p()) throw std::overflow_error("bin index out of range");
  return k.get_si();
}

std::optional<std::vector<int>> raw_bin_counts(const Dataset& d, const Scalar& t0, const Scalar& h) {
  if (h.sign() <= 0) throw InvalidGridError("bin width must be positive");
  if (d.min() < t0) return std::nullopt;
  const long last = bin_index(d.max(), t0, h);
  std::vector<int> counts(static_cast<std::size_t>(last), 0);
  for (const auto& x : d.values()) ++counts[static_cast<std::size_t>(bin_index(x, t0, h) - 1)];
  return counts;
}

Shape bin_counts(const Dataset& d, const BinGrid& g) {
  validate_grid(d, g);
  return Shape(*raw_bin_counts(d, g.t0, g.h));
}

// ---------------------------------------------------------------- domain

bool Domain::contains(const Point& p) const {
  return std::all_of(constraints.begin(), constraints.end(),
                     [&p](const DomainConstraint& c) { return c.half_plane.contains(p); });
}

Domain build_domain(const Dataset& d, int max_bins, BinCountMode mode, const DomainOptions& options) {
  if (max_bins < 1) throw std::invalid_argument("max bins must be at least 1");
  if (d.max() == d.min()) {
    throw DegenerateDataError("all values are equal; no bounded bin-parameter domain exists");
  }
  Domain dom;
  dom.max_bins = max_bins;
  dom.mode = mode;
  dom.delta = options.delta.value_or(d.range());
  if (dom.delta.sign() <= 0) throw std::invalid_argument("width-cap delta must be positive");
  dom.h_cap = d.range() + dom.delta;

  const Scalar K(max_bins);
  dom.constraints = {
      {"anchor", {{Scalar(1), Scalar(0), d.min()}, Relation::LessEqual}},
      {"first-bin", {{Scalar(1), Scalar(1), d.min()}, Relation::Greater}},
      {"bin-cap", {{Scalar(1), K, d.max()}, Relation::Greater}},
      {"width-cap", {{Scalar(0), Scalar(1), dom.h_cap}, Relation::LessEqual}},
  };
  if (mode == BinCountMode::Exactly && max_bins > 1) {
    dom.constraints.push_back(
        {"exact-count", {{Scalar(1), K - Scalar(1), d.max()}, Relation::LessEqual}});
  }

  // Start from a box that certainly holds the region and cut it down.
  const Scalar left = d.min() - dom.h_cap;
  Polygon poly{{d.min(), Scalar(0)}, {d.min(), dom.h_cap}, {left, dom.h_cap}, {left, Scalar(0)}};
  poly = canonicalize(std::move(poly));
  for (const auto& c : dom.constraints) {
    poly = clip(poly, c.half_plane);
    if (poly.empty()) break;
  }
  if (poly.size() < 3 || signed_area(poly).sign() <= 0) {
    throw DegenerateDataError("bin-parameter domain is empty for these constraints");
  }
  dom.vertices = std::move(poly);
  return dom;
}

}  // namespace momhist
