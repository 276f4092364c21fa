#include <doctest.h>

#include <cmath>

#include "fixtures.hpp"
#include "momhist/levelset.hpp"
#include "momhist/moments.hpp"

using namespace momhist;
using momhist::testing::values;

namespace {

// Independent double-precision Fisher-Pearson skewness of bin indices.
double naive_fps(const std::vector<int>& v) {
  double n = 0, s1 = 0;
  for (std::size_t k = 0; k < v.size(); ++k) {
    n += v[k];
    s1 += v[k] * static_cast<double>(k + 1);
  }
  const double mean = s1 / n;
  double m2 = 0, m3 = 0;
  for (std::size_t k = 0; k < v.size(); ++k) {
    const double d = static_cast<double>(k + 1) - mean;
    m2 += v[k] * d * d;
    m3 += v[k] * d * d * d;
  }
  m2 /= n;
  m3 /= n;
  return m3 / std::pow(m2, 1.5);
}

}  // namespace

TEST_CASE("sample moments") {
  const SampleMoments s = sample_moments(values({"1", "2", "5"}));
  CHECK(s.mean == Scalar(8, 3));
  CHECK(s.variance == Scalar(13, 3));

  const SampleMoments d3 = sample_moments(momhist::testing::data3());
  CHECK(std::abs(d3.fps.value() + 0.0288) < 5e-4);
  REQUIRE(d3.fpas);
  CHECK(*d3.fpas == doctest::Approx(fpas_coefficient(12) * d3.fps.value()));

  for (const char* a : {"1", "0.5", "17.25"}) {
    const Scalar x = Scalar::parse(a);
    const SampleMoments z = sample_moments(Dataset({-x, Scalar(0), x}));
    CHECK(z.fps.sign() == 0);
    CHECK(z.fps.value() == 0.0);
  }
  CHECK_THROWS_AS(sample_moments(values({"3"})), InsufficientDataError);
  CHECK_THROWS_AS(sample_moments(values({"3", "3"})), InsufficientDataError);
  CHECK_FALSE(sample_moments(values({"1", "2"})).fpas.has_value());
}

TEST_CASE("FPAS coefficient") {
  CHECK(fpas_coefficient(3) == doctest::Approx(std::sqrt(6.0)));
  CHECK(fpas_coefficient(12) == doctest::Approx(std::sqrt(132.0) / 10.0));
  CHECK_THROWS_AS(fpas_coefficient(2), InsufficientDataError);
}

TEST_CASE("sample skewness is invariant under translation and positive scaling") {
  const Dataset d = momhist::testing::data3();
  std::vector<Scalar> moved;
  for (const auto& x : d.values()) moved.push_back(x * Scalar(7, 3) - Scalar(5));
  const Dataset e(moved);
  CHECK(sample_moments(e).fps == sample_moments(d).fps);
  std::vector<Scalar> flipped;
  for (const auto& x : d.values()) flipped.push_back(-x);
  CHECK(sample_moments(Dataset(flipped)).fps.value() == doctest::Approx(-sample_moments(d).fps.value()));
}

TEST_CASE("grouped mean") {
  CHECK(grouped_mean({Scalar(-1, 3), Scalar(20, 3), 4}, Shape({3})) == Scalar(3));
  const Scalar m = grouped_mean({Scalar::parse("0.3159"), Scalar::parse("2.0382"), 6}, Shape({5, 3, 4}));
  CHECK(m.to_double() == doctest::Approx(momhist::testing::data3().mean().to_double()).epsilon(1e-3));
  const Shape s({2, 0, 3, 1});
  const BinGrid g{Scalar(1, 7), Scalar(2, 3), 6};
  const BinGrid shifted{g.t0 + Scalar(5, 11), g.h, 6};
  CHECK(grouped_mean(shifted, s) - grouped_mean(g, s) == Scalar(5, 11));
  // dot product of midpoints and relative frequencies
  Scalar dot;
  for (std::size_t k = 0; k < s.bins(); ++k) {
    dot += (g.t0 + (Scalar(static_cast<long>(k)) + Scalar(1, 2)) * g.h) * Scalar(s[k], s.total());
  }
  CHECK(grouped_mean(g, s) == dot);
  CHECK(grouped_raw_moment(g, s, 1) == dot);
}

TEST_CASE("grouped variance") {
  const Dataset d = momhist::testing::data3();
  const Scalar v = grouped_variance({Scalar::parse("0.3159"), Scalar::parse("2.0382"), 6}, Shape({5, 3, 4}),
                                    VarianceFlavor::Frequency);
  CHECK(v.to_double() == doctest::Approx(d.variance().to_double()).epsilon(1e-3));
  CHECK(d.variance().to_double() == doctest::Approx(3.3675).epsilon(1e-4));
  CHECK(grouped_moments(Shape({5, 3, 4})).sum_sq == Scalar(1284, 144));

  const BinGrid unit{Scalar(0), Scalar(1), 2};
  CHECK(grouped_variance(unit, Shape({1, 1}), VarianceFlavor::Frequency) == Scalar(1, 2));
  CHECK(grouped_variance(unit, Shape({1, 1}), VarianceFlavor::Density) == Scalar(1, 2) + Scalar(1, 12));

  const Shape s({3, 1, 4, 1, 5});
  const BinGrid g{Scalar(0), Scalar(3, 5), 5};
  const BinGrid half{Scalar(0), Scalar(3, 10), 5};
  for (auto flavor : {VarianceFlavor::Frequency, VarianceFlavor::Density}) {
    CHECK(grouped_variance(half, s, flavor) * Scalar(4) == grouped_variance(g, s, flavor));
  }
  CHECK_THROWS_AS(grouped_variance(unit, Shape({1}), VarianceFlavor::Frequency), InsufficientDataError);
}

TEST_CASE("grouped Fisher-Pearson skewness") {
  CHECK(std::abs(fps_grouped(Shape({2, 7, 3})) + 0.075) < 5e-4);
  CHECK(std::abs(fps_grouped(Shape({3, 8, 1})) + 0.0548) < 5e-4);
  CHECK(std::abs(fps_grouped(Shape({1, 2, 3, 1, 3, 2})) + 0.0859) < 5e-4);
  CHECK(grouped_skewness(Shape({1, 5, 5, 1})).sign() == 0);
  CHECK(fps_grouped(Shape({1, 5, 5, 1})) == 0.0);
  CHECK_THROWS_AS(grouped_skewness(Shape({12})), UndefinedSkewnessError);
  CHECK_THROWS_AS(grouped_skewness(Shape({4, 0, 0})), UndefinedSkewnessError);

  std::mt19937 rng(3);
  std::uniform_int_distribution<int> count(0, 6);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<int> v(2 + trial % 5);
    for (auto& x : v) x = count(rng);
    v.front() = 1 + count(rng);
    v.back() = 1 + count(rng);
    const Shape s(v);
    CHECK(fps_grouped(s) == doctest::Approx(naive_fps(v)).epsilon(1e-9));
    // reversal antisymmetry, exact
    const Skewness a = grouped_skewness(s);
    const Skewness b = grouped_skewness(s.reversed());
    CHECK(a.square() == b.square());
    CHECK(a.sign() == -b.sign());
  }
}

TEST_CASE("skewness comparison is exact") {
  // Equal magnitudes from different shapes compare equal.
  const Skewness a = grouped_skewness(Shape({1, 2}));
  const Skewness b = grouped_skewness(Shape({2, 4}));
  CHECK(a == b);
  // Mass piled in the first bin means a right tail.
  CHECK(grouped_skewness(Shape({1, 2})) < grouped_skewness(Shape({1, 1})));
  CHECK(grouped_skewness(Shape({1, 1})) < grouped_skewness(Shape({2, 1})));
  CHECK(grouped_skewness(Shape({2, 1})) < grouped_skewness(Shape({3, 1})));
}

TEST_CASE("grouped skewness is constant on a level set") {
  const Dataset d = momhist::testing::small3();
  const Catalog c = enumerate_level_sets(d, 4);
  for (const auto& ls : c.level_sets) {
    if (ls.shape.occupied_bins() < 2) continue;
    // Two interior points: the centroid and the midpoint of centroid and a vertex.
    const Point p = ls.centroid;
    const Point q{(ls.centroid.t0 + ls.vertices[0].t0) / Scalar(2), (ls.centroid.h + ls.vertices[0].h) / Scalar(2)};
    const Shape sp = bin_counts(d, {p.t0, p.h, 4});
    const Shape sq = bin_counts(d, {q.t0, q.h, 4});
    CHECK(grouped_skewness(sp) == grouped_skewness(sq));
  }
}

TEST_CASE("constraint functions") {
  const Dataset d = momhist::testing::data3();
  const ConstraintFunctions f = constraint_fns(d, Shape({5, 3, 4}));
  const auto root = f.variance_root_squared();
  REQUIRE(root);
  CHECK(std::sqrt(root->to_double()) == doctest::Approx(2.0382).epsilon(5e-4));
  CHECK(f.variance_slope() > Scalar(0));

  for (const char* h : {"0.5", "1", "3.25"}) {
    const Scalar hh = Scalar::parse(h);
    const Point on{d.mean() - hh * (f.kbar - Scalar(1, 2)), hh};
    CHECK(f.mean_at(on).is_zero());
    CHECK(f.mean_line().side(on) == 0);
  }

  const ConstraintFunctions single = constraint_fns(d, Shape({12}));
  CHECK(single.spread.is_zero());
  CHECK_FALSE(single.variance_root_squared());
  CHECK(single.variance_at({Scalar(0), Scalar(5)}) == -d.variance());

  const ConstraintFunctions dens = constraint_fns(d, Shape({12}), VarianceFlavor::Density);
  REQUIRE(dens.variance_root_squared());
  CHECK(*dens.variance_root_squared() == d.variance() * Scalar(12));

  CHECK_THROWS_AS(constraint_fns(d, Shape({5, 3})), std::invalid_argument);
  CHECK_THROWS_AS(constraint_fns(values({"1"}), Shape({1})), InsufficientDataError);
}
