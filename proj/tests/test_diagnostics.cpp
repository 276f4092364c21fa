#include <doctest.h>

#include "fixtures.hpp"
#include "momhist/diagnostics.hpp"

using namespace momhist;
using momhist::testing::values;

namespace {

bool has_pair(const ReversalReport& r, const Shape& a, const Shape& b) {
  return std::any_of(r.pairs.begin(), r.pairs.end(), [&](const ReversalPair& p) {
    return (p.shape == a && p.reversed == b) || (p.shape == b && p.reversed == a);
  });
}

bool has_inversion(const std::vector<ModeInversion>& v, const Shape& interior, const Shape& boundary) {
  return std::any_of(v.begin(), v.end(), [&](const ModeInversion& m) {
    return m.interior_modal == interior && m.boundary_modal == boundary;
  });
}

Shape at(const Dataset& d, const char* t0, const char* h, int K = 6) {
  return bin_counts(d, {Scalar::parse(t0), Scalar::parse(h), K});
}

}  // namespace

TEST_CASE("exact symmetry") {
  CHECK(is_exactly_symmetric(momhist::testing::symmetric20()));
  CHECK_FALSE(is_exactly_symmetric(momhist::testing::data3()));
  CHECK(is_exactly_symmetric(values({"3.5"})));
  CHECK(is_exactly_symmetric(values({"1", "7.25"})));
  CHECK(is_exactly_symmetric(values({"1", "2", "2", "3"})));
  CHECK_FALSE(is_exactly_symmetric(values({"1", "2", "3", "3"})));
}

TEST_CASE("reversal shapes at their witnesses") {
  const Dataset d = momhist::testing::symmetric20();
  CHECK(at(d, "1.4250", "3.2075") == Shape({10, 9, 1}));
  CHECK(at(d, "-1.048", "3.2075") == Shape({1, 9, 10}));
  CHECK(at(d, "1.9767", "1.9789") == Shape({8, 4, 7, 1}));
  CHECK(at(d, "0.1078", "1.9789") == Shape({1, 7, 4, 8}));
  CHECK(at(d, "1.9829", "1.4750") == Shape({6, 4, 4, 5, 1}));
  CHECK(at(d, "0.6421", "1.4750") == Shape({1, 5, 4, 4, 6}));
  // G and H appear at width 1.1906; the printed 1.9060 gives four-bin shapes.
  CHECK(at(d, "1.9619", "1.1906") == Shape({4, 6, 0, 5, 4, 1}));
  CHECK(at(d, "0.8944", "1.1906") == Shape({1, 4, 5, 0, 6, 4}));
  CHECK(at(d, "1.9619", "1.9060") == Shape({8, 3, 7, 2}));
  CHECK(at(d, "0.8944", "1.9060") == Shape({3, 7, 5, 5}));
}

TEST_CASE("reversal pairs") {
  const Dataset sym = momhist::testing::symmetric20();
  const Catalog c = enumerate_level_sets(sym, 6);
  const ReversalReport r = reversal_pairs(c);
  CHECK(r.full_coverage());
  CHECK(has_pair(r, Shape({10, 9, 1}), Shape({1, 9, 10})));
  CHECK(has_pair(r, Shape({8, 4, 7, 1}), Shape({1, 7, 4, 8})));
  CHECK(has_pair(r, Shape({6, 4, 4, 5, 1}), Shape({1, 5, 4, 4, 6})));
  CHECK(has_pair(r, Shape({4, 6, 0, 5, 4, 1}), Shape({1, 4, 5, 0, 6, 4})));
  // every shape appears in exactly one pair; palindromes pair with themselves
  std::size_t covered = 0;
  for (const auto& p : r.pairs) covered += p.shape == p.reversed ? 1 : 2;
  CHECK(covered == c.size());
  for (const auto& p : r.pairs) {
    CHECK(bin_counts(sym, {p.witness.t0, p.witness.h, 6}) == p.shape);
    CHECK(bin_counts(sym, {p.reversed_witness.t0, p.reversed_witness.h, 6}) == p.reversed);
  }

  const Dataset d3 = momhist::testing::data3();
  const ReversalReport asym = reversal_pairs(enumerate_level_sets(d3, 6));
  CHECK_FALSE(asym.full_coverage());
  for (const auto& s : asym.unpaired) CHECK(lookup(enumerate_level_sets(d3, 6), s.reversed()) == nullptr);
}

TEST_CASE("symmetry, symmetric implies full reversal coverage") {
  std::mt19937 rng(41);
  std::uniform_int_distribution<int> cents(0, 250);
  for (int trial = 0; trial < 40; ++trial) {
    const Scalar centre(cents(rng), 100);
    std::vector<Scalar> v;
    const int half = 1 + trial % 4;
    for (int i = 0; i < half; ++i) {
      const Scalar off(1 + cents(rng), 100);
      v.push_back(centre - off);
      v.push_back(centre + off);
    }
    if (trial % 2) v.push_back(centre);
    const Dataset d(v);
    REQUIRE(is_exactly_symmetric(d));
    CHECK(reversal_pairs(enumerate_level_sets(d, 2 + trial % 5)).full_coverage());
  }
}

TEST_CASE("symmetry, full coverage at fine K implies symmetric") {
  // Values on a coarse integer grid; K large enough that single values can be
  // isolated in their own bins. No counterexample may exist.
  std::mt19937 rng(43);
  std::uniform_int_distribution<int> pick(0, 6);
  int symmetric = 0;
  for (int trial = 0; trial < 150; ++trial) {
    std::vector<Scalar> v;
    const int n = 2 + trial % 5;
    for (int i = 0; i < n; ++i) v.emplace_back(pick(rng));
    const Dataset d(v);
    if (d.min() == d.max()) continue;
    const bool sym = is_exactly_symmetric(d);
    symmetric += sym ? 1 : 0;
    CAPTURE(trial);
    CHECK(reversal_pairs(enumerate_level_sets(d, 8)).full_coverage() == sym);
  }
  CHECK(symmetric > 5);
}

TEST_CASE("mode inversions") {
  const Dataset d3 = momhist::testing::data3();
  const Catalog c3 = enumerate_level_sets(d3, 6);
  const auto classes = classify_catalog(d3, c3);
  const auto inv = mode_inversion_report(c3, &classes);
  CHECK(has_inversion(inv, Shape({1, 2, 3, 3, 2, 1}), Shape({3, 2, 1, 1, 2, 3})));
  for (const auto& m : inv) {
    CHECK(m.interior_modal.bins() == m.boundary_modal.bins());
    CHECK(m.interior_class.has_value());
  }

  const Dataset sym = momhist::testing::symmetric20();
  for (int K = 4; K <= 6; ++K) {
    CHECK(has_inversion(mode_inversion_report(enumerate_level_sets(sym, K)), Shape({1, 9, 9, 1}), Shape({6, 4, 4, 6})));
  }
  // {1,2,5}: no shape has all of its modes inside
  CHECK(mode_inversion_report(enumerate_level_sets(momhist::testing::small3(), 4)).empty());
  CHECK(modal_bins(Shape({1, 9, 9, 1})) == std::vector<std::size_t>{2, 3});
  CHECK(modal_bins(Shape({6, 4, 4, 6})) == std::vector<std::size_t>{1, 4});
}

TEST_CASE("reference grids on ratios30") {
  const Dataset d = momhist::testing::ratios30();
  REQUIRE(d.size() == 30);
  const BinGrid excel{Scalar::parse("0.9355"), Scalar::parse("0.0326"), 7};
  const BinGrid trimmed{Scalar::parse("0.96"), Scalar::parse("0.03"), 6};
  CHECK(bin_counts(d, excel) == Shape({1, 5, 9, 12, 1, 2}));
  CHECK(bin_counts(d, trimmed) == Shape({2, 12, 9, 4, 2, 1}));
  CHECK(edge_collisions(d, excel).empty());
  CHECK(edge_collisions(d, trimmed).empty());
  CHECK(edge_collisions(momhist::testing::small3(), {Scalar(0), Scalar(1), 6}).size() == 3);
}

TEST_CASE("audit") {
  const Dataset d = momhist::testing::ratios30();
  const AuditVerdict v = audit(d, {Scalar::parse("0.9355"), Scalar::parse("0.0326"), 7});
  CHECK(v.shape == Shape({1, 5, 9, 12, 1, 2}));
  REQUIRE(v.fps);
  const bool opposite = (*v.fps > 0) != (v.sample_fps > 0);
  CHECK(v.sign_conflict == opposite);
  CHECK(v.cls.has_value());

  const Dataset sym = momhist::testing::symmetric20();
  const AuditVerdict p = audit(sym, {Scalar::parse("-0.68"), Scalar::parse("2.84"), 4});
  CHECK(p.shape == Shape({1, 9, 9, 1}));
  CHECK(*p.fps == 0.0);
  CHECK(p.sample_fps == 0.0);
  CHECK_FALSE(p.sign_conflict);

  const Dataset d3 = momhist::testing::data3();
  const AuditVerdict a = audit(d3, {Scalar::parse("0.009"), Scalar::parse("1.12"), 6});
  CHECK(a.shape == Shape({1, 2, 3, 3, 2, 1}));
  CHECK(a.cls == ConsistencyClass::Neither);
  REQUIRE(a.alternative);
  const Catalog c = enumerate_level_sets(d3, 6);
  const auto classes = classify_catalog(d3, c);
  const auto ranks = skew_rank(d3, c, classes);
  const auto* alt = ranks.find(a.alternative->shape);
  REQUIRE(alt);
  CHECK(alt->in_wide_and_joint);
  for (const auto& e : ranks.entries) {
    if (e.in_wide_and_joint) CHECK(std::abs(*e.fps - a.sample_fps) >= std::abs(a.alternative->fps - a.sample_fps));
  }

  CHECK_THROWS_AS(audit(d3, {Scalar(1), Scalar(1), 6}), InvalidGridError);
}
