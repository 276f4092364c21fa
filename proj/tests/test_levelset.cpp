#include <doctest.h>

#include <chrono>
#include <map>

#include "fixtures.hpp"
#include "momhist/levelset.hpp"

using namespace momhist;
using momhist::testing::values;

namespace {

Point pt(long t0, long h) { return {Scalar(t0), Scalar(h)}; }
Point pt(Scalar t0, Scalar h) { return {std::move(t0), std::move(h)}; }

std::set<Point> as_set(const Polygon& p) { return {p.begin(), p.end()}; }

}  // namespace

TEST_CASE("boundary lines") {
  CHECK(boundary_lines(momhist::testing::small3(), 4).size() == 15);
  const auto single = boundary_lines(values({"0"}), 1);
  REQUIRE(single.size() == 2);
  CHECK(single[0].k == 0);
  CHECK(single[1].k == 1);
  CHECK(boundary_lines(values({"1", "1", "2"}), 2).size() == 6);
  const auto lines = boundary_lines(momhist::testing::small3(), 4);
  // t0 + 4h = 5
  CHECK(std::find(lines.begin(), lines.end(), BoundaryLine{4, Scalar(5)}) != lines.end());
}

TEST_CASE("catalog of {1,2,5} with at most four bins") {
  const Catalog c = enumerate_level_sets(momhist::testing::small3(), 4);
  REQUIRE(c.size() == 7);
  CHECK(c.anomalies.empty());

  const Scalar third(1, 3);
  const std::map<Shape, std::set<Point>> expected = {
      {Shape({3}), {pt(1, 4), pt(1, 8), pt(-3, 8)}},
      {Shape({1, 2}), {pt(-1, 3), pt(-6, 8), pt(-7, 8), pt(-3, 4)}},
      {Shape({2, 1}), {pt(1, 2), pt(1, 4), pt(-3, 8), pt(-6, 8), pt(-1, 3)}},
      {Shape({1, 1, 1}), {pt(Scalar(1, 2), Scalar(3, 2)), pt(-1, 3), pt(-3, 4), pt(-1, 2)}},
      {Shape({2, 0, 1}), {pt(Scalar(1), Scalar(4, 3)), pt(1, 2), pt(-1, 3), pt(Scalar(1, 2), Scalar(3, 2))}},
      {Shape({1, 1, 0, 1}), {pt(1, 1), pt(Scalar(1, 2), Scalar(3, 2)), pt(-1, 2), pt(-third, Scalar(4, 3))}},
      {Shape({2, 0, 0, 1}), {pt(1, 1), pt(Scalar(1), Scalar(4, 3)), pt(Scalar(1, 2), Scalar(3, 2))}},
  };
  std::vector<Shape> order;
  for (const auto& ls : c.level_sets) {
    order.push_back(ls.shape);
    auto it = expected.find(ls.shape);
    REQUIRE(it != expected.end());
    CHECK(as_set(ls.vertices) == it->second);
  }
  const std::vector<Shape> lexicographic = {Shape({3}),       Shape({1, 2}),       Shape({2, 1}),      Shape({1, 1, 1}),
                                            Shape({2, 0, 1}), Shape({1, 1, 0, 1}), Shape({2, 0, 0, 1})};
  CHECK(order == lexicographic);

  const LevelSet* red = lookup(c, Shape({2, 1}));
  REQUIRE(red);
  CHECK(red->h_min == Scalar(2));
  CHECK(red->h_max == Scalar(8));
  CHECK(red->vertices.front() == pt(1, 2));  // largest t0, then smallest h
  CHECK(lookup(c, std::vector<int>{1, 2, 0, 0}) == lookup(c, Shape({1, 2})));
  CHECK(lookup(c, Shape({1, 1, 1, 0})) != nullptr);
  CHECK(lookup(c, Shape({1, 0, 2})) == nullptr);
}

TEST_CASE("data3 has 123 shapes of at most six bins") {
  const Dataset d = momhist::testing::data3();
  const Catalog c = enumerate_level_sets(d, 6);
  CHECK(c.size() == 123);
  CHECK(c.anomalies.empty());
  CHECK(lookup(c, std::vector<int>{12, 0, 0}) != nullptr);
  CHECK(lookup(c, Shape({5, 3, 4})) != nullptr);
}

TEST_CASE("one bin admits one shape") {
  const Catalog c = enumerate_level_sets(values({"0", "1"}), 1);
  REQUIRE(c.size() == 1);
  CHECK(c.level_sets[0].shape == Shape({2}));
}

TEST_CASE("exactly-K catalogs only hold K-bin shapes") {
  const Catalog c = enumerate_level_sets(momhist::testing::small3(), 4, BinCountMode::Exactly);
  REQUIRE(c.size() == 2);
  CHECK(c.level_sets[0].shape == Shape({1, 1, 0, 1}));
  CHECK(c.level_sets[1].shape == Shape({2, 0, 0, 1}));
}

TEST_CASE("grid sample oracle on {1,2,5}") {
  const Dataset d = momhist::testing::small3();
  const Catalog c = enumerate_level_sets(d, 4);
  std::set<Shape> all;
  for (const auto& ls : c.level_sets) all.insert(ls.shape);

  const auto coarse = grid_sample_oracle(d, 4, 2);
  CHECK_FALSE(coarse.empty());
  CHECK(std::includes(all.begin(), all.end(), coarse.begin(), coarse.end()));
  const auto medium = grid_sample_oracle(d, 4, 200);
  CHECK(std::includes(all.begin(), all.end(), medium.begin(), medium.end()));
  CHECK(grid_sample_oracle(d, 4, 400) == all);
}

TEST_CASE("catalog properties on random datasets") {
  // Random 2-decimal datasets, n <= 8, K <= 5: oracle containment and
  // saturation, exact area tiling, centroid self-consistency.
  std::mt19937 rng(20240601);
  int saturated_at_400 = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 7;
    const int K = 1 + trial % 5;
    const Dataset d = momhist::testing::random_two_decimal(rng, n);
    const Catalog c = enumerate_level_sets(d, K);
    CAPTURE(trial);
    CHECK(c.anomalies.empty());

    Scalar area_sum;
    std::set<Shape> all;
    for (const auto& ls : c.level_sets) {
      all.insert(ls.shape);
      area_sum += ls.area;
      CHECK(ls.area > Scalar(0));
      CHECK(ls.h_min < ls.h_max);
      CHECK(bin_counts(d, {ls.centroid.t0, ls.centroid.h, K}) == ls.shape);
      CHECK(c.domain.contains(ls.centroid));
    }
    CHECK(all.size() == c.size());
    CHECK(area_sum == c.domain.area());

    const auto sampled = grid_sample_oracle(d, K, 400);
    CHECK(std::includes(all.begin(), all.end(), sampled.begin(), sampled.end()));
    if (sampled == all) {
      ++saturated_at_400;
    } else {
      // Slivers need a finer lattice; keep refining until every shape is hit.
      std::set<Shape> seen = sampled;
      for (int res = 800; res <= 6400 && seen != all; res *= 2) {
        const auto finer = grid_sample_oracle(d, K, res);
        CHECK(std::includes(all.begin(), all.end(), finer.begin(), finer.end()));
        seen.insert(finer.begin(), finer.end());
      }
      CHECK(seen == all);
    }
  }
  MESSAGE("catalogs saturated at resolution 400: " << saturated_at_400 << "/100");
}

TEST_CASE("catalog construction is deterministic") {
  const Dataset d = momhist::testing::data3();
  const Catalog a = enumerate_level_sets(d, 6);
  const Catalog b = enumerate_level_sets(d, 6);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a.level_sets[i].shape == b.level_sets[i].shape);
    CHECK(a.level_sets[i].vertices == b.level_sets[i].vertices);
  }
}

TEST_CASE("owns_point resolves shared boundaries to one set") {
  const Dataset d = momhist::testing::small3();
  const Catalog c = enumerate_level_sets(d, 4);
  // Every catalog vertex inside the domain is owned by exactly one level set.
  std::set<Point> vertices;
  for (const auto& ls : c.level_sets) vertices.insert(ls.vertices.begin(), ls.vertices.end());
  for (const auto& v : vertices) {
    int owners = 0;
    for (const auto& ls : c.level_sets) owners += owns_point(d, c, ls, v) ? 1 : 0;
    CHECK(owners == (c.domain.contains(v) ? 1 : 0));
  }
}
