#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "momhist/core.hpp"

namespace momhist::testing {

inline Dataset load_fixture(const std::string& name) {
  std::ifstream in(std::string(MOMHIST_FIXTURES) + "/" + name);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_dataset(text.str());
}

inline Dataset data3() { return load_fixture("data3.txt"); }
inline Dataset small3() { return load_fixture("small3.txt"); }
inline Dataset symmetric20() { return load_fixture("symmetric20.txt"); }
inline Dataset ratios30() { return load_fixture("ratios30.txt"); }

inline Dataset values(std::initializer_list<const char*> xs) {
  std::vector<Scalar> v;
  for (const char* x : xs) v.push_back(Scalar::parse(x));
  return Dataset(std::move(v));
}

/// n values with two decimals, drawn from [0, spread/100], at least two distinct.
inline Dataset random_two_decimal(std::mt19937& rng, int n, int spread = 300) {
  std::uniform_int_distribution<int> cents(0, spread);
  for (;;) {
    std::vector<Scalar> v;
    for (int i = 0; i < n; ++i) v.emplace_back(cents(rng), 100);
    Dataset d(std::move(v));
    if (d.max() != d.min()) return d;
  }
}

}  // namespace momhist::testing
