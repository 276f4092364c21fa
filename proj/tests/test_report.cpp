#include <doctest.h>

#include <regex>

#include "fixtures.hpp"
#include "momhist/report.hpp"
#include "momhist/svg.hpp"

using namespace momhist;
using momhist::testing::values;

namespace {

std::size_t count_of(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("rational encoding") {
  const report::Json j = report::rational(Scalar(10191, 5000));
  CHECK(j["exact"] == "10191/5000");
  CHECK(j["approx"].get<double>() == doctest::Approx(2.0382));
  CHECK(report::rational(Scalar(-3))["exact"] == "-3/1");
  CHECK(report::rational_from(j) == Scalar(10191, 5000));
  CHECK(report::approx(1.0 / 3.0) == 0.333333333333);
  CHECK(report::counts(Shape({1, 0, 2})).dump() == "[1,0,2]");
}

TEST_CASE("catalog JSON round trip") {
  for (const auto& [d, K] : {std::pair{momhist::testing::small3(), 4}, std::pair{momhist::testing::data3(), 6}}) {
    const Catalog c = enumerate_level_sets(d, K);
    const report::Json j = report::catalog_json(c);
    CHECK(j["shapes"].size() == c.size());
    CHECK(j["n"] == d.size());
    CHECK(j["mode"] == "at-most");
    const Catalog back = report::catalog_from_json(report::Json::parse(j.dump()));
    CHECK(report::same_catalog(c, back));
    CHECK(report::catalog_json(back).dump() == j.dump());
  }
  const Catalog a = enumerate_level_sets(momhist::testing::small3(), 4);
  Catalog b = a;
  b.level_sets[2].vertices[0].h += Scalar(1, 1000000);
  CHECK_FALSE(report::same_catalog(a, b));
}

TEST_CASE("reports are deterministic") {
  const Dataset d = momhist::testing::data3();
  auto render = [&] {
    const Catalog c = enumerate_level_sets(d, 6);
    const auto classes = classify_catalog(d, c);
    const auto ranks = skew_rank(d, c, classes);
    return report::catalog_json(c).dump() + report::classification_json(c, classes, ranks).dump() +
           report::rank_json(ranks, ml_rank(d, c)).dump() + report::stability_json(stability_cells(c)).dump() +
           report::classification_text(c, classes, ranks);
  };
  CHECK(render() == render());
}

TEST_CASE("classification JSON fields") {
  const Dataset d = momhist::testing::data3();
  const Catalog c = enumerate_level_sets(d, 6);
  const auto classes = classify_catalog(d, c);
  const auto ranks = skew_rank(d, c, classes);
  const report::Json j = report::classification_json(c, classes, ranks);
  CHECK(j["S"] == 123);
  CHECK(j["band_T"] == 12);
  CHECK(j["band_F"] == 6);
  const auto& shapes = j["shapes"];
  const auto it = std::find_if(shapes.begin(), shapes.end(),
                               [](const report::Json& e) { return e["counts"].dump() == "[3,4,5]"; });
  REQUIRE(it != shapes.end());
  CHECK((*it)["class"] == "joint");
  CHECK((*it)["h_mom"].get<double>() == doctest::Approx(2.1981).epsilon(5e-5));
}

TEST_CASE("audit and dotplot JSON") {
  const Dataset d = momhist::testing::data3();
  const report::Json a = report::audit_json(audit(d, {Scalar::parse("0.009"), Scalar::parse("1.12"), 6}));
  CHECK(a["counts"].dump() == "[1,2,3,3,2,1]");
  CHECK(a.contains("sign_conflict"));
  const report::Json p = report::dotplot_json(d, exact_moment_grid(d, 1));
  for (const auto& m : p["moments"]) CHECK(m["exact_match"] == true);
}

TEST_CASE("SVG output") {
  const Catalog c = enumerate_level_sets(momhist::testing::small3(), 4);
  const std::string map = svg::level_set_map(c);
  CHECK(map.find("<svg") != std::string::npos);
  CHECK(map.find("</svg>") != std::string::npos);
  CHECK(count_of(map, "<polygon") == c.size());
  CHECK(map.find("(2,0,0,1)") != std::string::npos);
  CHECK_THROWS_AS(svg::level_set_map(Catalog{}), std::invalid_argument);

  const Shape s({2, 12, 9, 4, 2, 1});
  const std::string bars = svg::histogram(s, {Scalar::parse("0.96"), Scalar::parse("0.03"), 6}, "Histogram");
  CHECK(count_of(bars, "<rect") == s.bins() + 1);
  CHECK_THROWS_AS(svg::write_file("/nonexistent-dir/x.svg", bars), std::runtime_error);
}
